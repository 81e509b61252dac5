#include "indeperm/pattern.hpp"

#include <algorithm>
#include <stdexcept>

#include "indeperm/errors.hpp"

namespace indeperm {

VincularPattern::VincularPattern(Permutation pattern, std::vector<bool> adjacent)
    : pattern_(std::move(pattern)), adjacent_(std::move(adjacent)) {
  if (pattern_.empty()) {
    throw std::invalid_argument("pattern must be nonempty");
  }
  if (static_cast<int>(adjacent_.size()) != pattern_.size() - 1) {
    throw std::invalid_argument("adjacency flags must have length k-1");
  }
}

VincularPattern VincularPattern::parse(std::string_view text) {
  if (text.empty()) throw PatternParseError("empty pattern");
  std::vector<int> digits;
  std::vector<bool> adjacent;
  bool prev_was_digit = false;
  for (char ch : text) {
    if (ch >= '1' && ch <= '9') {
      if (!digits.empty()) adjacent.push_back(prev_was_digit);
      digits.push_back(ch - '0');
      prev_was_digit = true;
    } else if (ch == '-') {
      if (!prev_was_digit) throw PatternParseError("misplaced dash in pattern");
      prev_was_digit = false;
    } else {
      throw PatternParseError(std::string("invalid character '") + ch + "' in pattern");
    }
  }
  if (!prev_was_digit) throw PatternParseError("pattern ends with a dash");
  Permutation perm;
  try {
    perm = Permutation(std::move(digits));
  } catch (const std::invalid_argument&) {
    throw PatternParseError("pattern digits do not form a permutation of {1,...,k}");
  }
  return VincularPattern(std::move(perm), std::move(adjacent));
}

bool VincularPattern::is_classical() const {
  return std::none_of(adjacent_.begin(), adjacent_.end(), [](bool b) { return b; });
}

bool VincularPattern::is_consecutive() const {
  return std::all_of(adjacent_.begin(), adjacent_.end(), [](bool b) { return b; });
}

std::string VincularPattern::to_string() const {
  std::string out;
  for (int j = 0; j < length(); ++j) {
    if (j > 0 && !adjacent_[static_cast<std::size_t>(j - 1)]) out += '-';
    out += static_cast<char>('0' + pattern_.at(j));
  }
  return out;
}

namespace {

// Backtracking over pattern positions, left to right. `count_all` counts every
// occurrence; otherwise stops at the first one.
long long search(std::span<const int> host, const VincularPattern& p, bool count_all) {
  const int n = static_cast<int>(host.size());
  const int k = p.length();
  std::vector<int> chosen(static_cast<std::size_t>(k));  // host indices per pattern position
  long long found = 0;

  auto consistent = [&](int j, int idx) {
    for (int l = 0; l < j; ++l) {
      const bool host_less = host[static_cast<std::size_t>(idx)] <
                             host[static_cast<std::size_t>(chosen[static_cast<std::size_t>(l)])];
      const bool pat_less = p.pattern().at(j) < p.pattern().at(l);
      if (host_less != pat_less) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int j) -> bool {
    if (j == k) {
      ++found;
      return !count_all;  // stop signal
    }
    int lo = 0, hi = n;  // candidate index range [lo, hi)
    if (j > 0) {
      const int prev = chosen[static_cast<std::size_t>(j - 1)];
      if (p.adjacent()[static_cast<std::size_t>(j - 1)]) {
        lo = prev + 1;
        hi = std::min(hi, prev + 2);
      } else {
        lo = prev + 1;
      }
    }
    for (int idx = lo; idx < hi; ++idx) {
      if (!consistent(j, idx)) continue;
      chosen[static_cast<std::size_t>(j)] = idx;
      if (self(self, j + 1)) return true;
    }
    return false;
  };

  rec(rec, 0);
  return found;
}

}  // namespace

long long count_occurrences(const Permutation& host, const VincularPattern& p) {
  return search(host.values(), p, /*count_all=*/true);
}

bool contains(const Permutation& host, const VincularPattern& p) {
  return search(host.values(), p, /*count_all=*/false) > 0;
}

bool avoids(const Permutation& host, const VincularPattern& p) { return !contains(host, p); }

VincularPattern reverse(const VincularPattern& p) {
  std::vector<bool> adj(p.adjacent().rbegin(), p.adjacent().rend());
  return VincularPattern(reverse(p.pattern()), std::move(adj));
}

VincularPattern complement(const VincularPattern& p) {
  return VincularPattern(complement(p.pattern()), p.adjacent());
}

}  // namespace indeperm
