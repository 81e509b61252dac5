#include "indeperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace indeperm {

namespace {

bool is_permutation_of_range(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : values) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  if (!is_permutation_of_range(values_)) {
    throw std::invalid_argument("not a permutation of {1,...,n}");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation reduce(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("word has duplicate entries");
  }
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), word[i]);
    out[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return Permutation(std::move(out));
}

std::vector<std::vector<int>> components(const Permutation& p) {
  std::vector<std::vector<int>> out;
  int start = 0;
  int max_seen = 0;
  for (int i = 0; i < p.size(); ++i) {
    max_seen = std::max(max_seen, p.at(i));
    // The prefix closes exactly when the values seen so far are {1,...,i+1}
    // relative to the current block start.
    if (max_seen == i + 1) {
      auto seg = p.values().subspan(static_cast<std::size_t>(start),
                                    static_cast<std::size_t>(i + 1 - start));
      out.emplace_back(seg.begin(), seg.end());
      start = i + 1;
    }
  }
  return out;
}

int first_component_end(const Permutation& p) {
  if (p.empty()) throw std::domain_error("undefined for the empty permutation");
  int max_seen = 0;
  for (int i = 0; i < p.size(); ++i) {
    max_seen = std::max(max_seen, p.at(i));
    if (max_seen == i + 1) return i + 1;
  }
  return p.size();  // unreachable for a valid permutation
}

bool is_indecomposable(const Permutation& p) {
  if (p.empty()) throw std::domain_error("undefined for the empty permutation");
  return first_component_end(p) == p.size();
}

int descent_count(std::span<const int> word) {
  int count = 0;
  for (std::size_t j = 0; j + 1 < word.size(); ++j) {
    if (word[j] > word[j + 1]) ++count;
  }
  return count;
}

int descent_count(const Permutation& p) { return descent_count(p.values()); }

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n + 1 - p.at(i);
  return Permutation(std::move(v));
}

}  // namespace indeperm
