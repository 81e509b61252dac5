#include "indeperm/brute_force.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <set>
#include <stdexcept>

#include "indeperm/errors.hpp"

namespace indeperm {

namespace {

constexpr int kMaxSupportedN = 16;

void check_length(int n, const EnumerationLimits& limits) {
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
  if (limits.max_n > kMaxSupportedN) {
    throw std::invalid_argument("brute-force cap above 16 is not supported");
  }
  if (n > limits.max_n) {
    throw ResourceLimitError("length " + std::to_string(n) + " exceeds brute-force cap " +
                             std::to_string(limits.max_n));
  }
}

// Depth-first generator. Values are inserted in ascending order at each
// depth, so leaves appear in lexicographic order. State per node: chosen
// prefix, bitmask of used values, running descent count, and whether some
// proper prefix was a permutation of an initial value segment (early close).
class Generator {
 public:
  Generator(const VincularPattern* pattern, int n, Restrict restrict)
      : n_(n), restrict_(restrict) {
    if (pattern != nullptr) {
      k_ = pattern->length();
      for (int j = 0; j < k_; ++j) ranks_[j] = pattern->pattern().at(j);
      for (int j = 0; j + 1 < k_; ++j) adj_[j] = pattern->adjacent()[static_cast<std::size_t>(j)];
    }
  }

  // Sink receives (prefix values, length n, descents) for each emitted leaf.
  template <typename Sink>
  void run(Sink&& sink) {
    if (n_ == 0) {
      if (restrict_ == Restrict::All) sink(word_.data(), 0, 0);
      return;
    }
    descend(0, 0u, 0, false, sink);
  }

  // Restricts the search to permutations starting with `first`; used to
  // partition the space across workers.
  template <typename Sink>
  void run_with_first(int first, Sink&& sink) {
    if (k_ == 1) return;  // every element is an occurrence of the pattern "1"
    word_[0] = first;
    const bool closed = first == 1;
    if (closed && n_ > 1 && restrict_ == Restrict::IndecomposableOnly) return;
    descend(1, 1u << (first - 1), 0, closed && n_ > 1, sink);
  }

 private:
  template <typename Sink>
  void descend(int depth, unsigned used, int descents, bool early_closed, Sink&& sink) {
    if (depth == n_) {
      const bool emit = restrict_ == Restrict::All ||
                        (restrict_ == Restrict::IndecomposableOnly ? !early_closed : early_closed);
      if (emit) sink(word_.data(), n_, descents);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      const unsigned bit = 1u << (v - 1);
      if (used & bit) continue;
      if (k_ > 0 && creates_occurrence(depth, v)) continue;
      const unsigned next_used = used | bit;
      const bool closed = next_used == (1u << depth << 1) - 1u;  // values are {1,...,depth+1}
      bool next_early = early_closed;
      if (closed && depth + 1 < n_) {
        if (restrict_ == Restrict::IndecomposableOnly) continue;
        next_early = true;
      }
      word_[depth] = v;
      const int next_descents = descents + (depth > 0 && word_[depth - 1] > v ? 1 : 0);
      descend(depth + 1, next_used, next_descents, next_early, sink);
    }
  }

  // Would appending v to the current prefix of length `depth` complete an
  // occurrence of the pattern? The new position can only play the last
  // pattern role, so the remaining roles are matched right to left.
  bool creates_occurrence(int depth, int v) {
    if (k_ == 1) return true;
    if (k_ > depth + 1) return false;
    vals_[k_ - 1] = v;
    return match(k_ - 2, depth);
  }

  // Assign a host index < bound to pattern position j, consistent in relative
  // order with the positions already assigned to its right.
  bool match(int j, int bound) {
    if (bound <= 0) return false;
    const int lo = adj_[j] ? bound - 1 : 0;
    for (int idx = bound - 1; idx >= lo; --idx) {
      const int w = word_[idx];
      bool ok = true;
      for (int l = j + 1; l < k_; ++l) {
        if ((w < vals_[l]) != (ranks_[j] < ranks_[l])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (j == 0) return true;
      vals_[j] = w;
      if (match(j - 1, idx)) return true;
    }
    return false;
  }

  int n_;
  Restrict restrict_;
  int k_ = 0;  // 0 = unconstrained
  std::array<int, kMaxSupportedN> word_{};
  std::array<int, 9> ranks_{};
  std::array<bool, 8> adj_{};
  std::array<int, 9> vals_{};  // host values assigned per pattern position
};

struct Tally {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_descents;

  void record(int n, int descents) {
    ++total;
    if (by_descents.empty()) by_descents.assign(static_cast<std::size_t>(std::max(1, n)), 0);
    ++by_descents[static_cast<std::size_t>(descents)];
  }
};

Tally tabulate(const std::optional<VincularPattern>& pattern, int n, Restrict restrict,
               const EnumerationLimits& limits) {
  const VincularPattern* p = pattern ? &*pattern : nullptr;
  auto run_part = [&](int first) {
    Tally t;
    Generator gen(p, n, restrict);
    auto sink = [&](const int*, int len, int descents) { t.record(len, descents); };
    if (first == 0) {
      gen.run(sink);
    } else {
      gen.run_with_first(first, sink);
    }
    return t;
  };

  if (n >= limits.parallel_threshold && n >= 2) {
    std::vector<std::future<Tally>> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int first = 1; first <= n; ++first) {
      parts.push_back(std::async(std::launch::async, run_part, first));
    }
    Tally merged;
    merged.by_descents.assign(static_cast<std::size_t>(std::max(1, n)), 0);
    for (auto& f : parts) {
      Tally t = f.get();
      merged.total += t.total;
      for (std::size_t i = 0; i < t.by_descents.size(); ++i) merged.by_descents[i] += t.by_descents[i];
    }
    return merged;
  }
  Tally t = run_part(0);
  if (t.by_descents.empty()) t.by_descents.assign(static_cast<std::size_t>(std::max(1, n)), 0);
  return t;
}

}  // namespace

void for_each_avoider(const std::optional<VincularPattern>& pattern, int n, Restrict restrict,
                      const std::function<void(const Permutation&)>& visit,
                      const EnumerationLimits& limits) {
  check_length(n, limits);
  Generator gen(pattern ? &*pattern : nullptr, n, restrict);
  gen.run([&](const int* word, int len, int) {
    visit(Permutation(std::vector<int>(word, word + len)));
  });
}

std::vector<Permutation> collect_avoiders(const std::optional<VincularPattern>& pattern, int n,
                                          Restrict restrict, const EnumerationLimits& limits) {
  std::vector<Permutation> out;
  for_each_avoider(pattern, n, restrict, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

Int count_avoiders(const VincularPattern& pattern, int n, Restrict restrict,
                   const EnumerationLimits& limits) {
  check_length(n, limits);
  return Int(tabulate(pattern, n, restrict, limits).total);
}

Int count_permutations(int n, Restrict restrict, const EnumerationLimits& limits) {
  check_length(n, limits);
  return Int(tabulate(std::nullopt, n, restrict, limits).total);
}

std::vector<Int> descent_distribution(const VincularPattern& pattern, int n, Restrict restrict,
                                      const EnumerationLimits& limits) {
  check_length(n, limits);
  if (n < 1) throw std::invalid_argument("descent distribution requires n >= 1");
  Tally t = tabulate(pattern, n, restrict, limits);
  std::vector<Int> out;
  out.reserve(t.by_descents.size());
  for (std::uint64_t c : t.by_descents) out.emplace_back(c);
  return out;
}

const Int& DescentTable::at(int n, int i) const {
  const auto& slice = counts.at(static_cast<std::size_t>(n));
  return slice.at(static_cast<std::size_t>(i));
}

Int DescentTable::total(int n) const {
  const auto& slice = counts.at(static_cast<std::size_t>(n));
  Int sum = 0;
  for (const Int& c : slice) sum += c;
  return sum;
}

DescentTable build_descent_table(const VincularPattern& pattern, int max_n, Restrict restrict,
                                 const EnumerationLimits& limits) {
  check_length(max_n, limits);
  DescentTable table{pattern, restrict, max_n, {}};
  table.counts.resize(static_cast<std::size_t>(max_n) + 1);
  table.counts[0] = {restrict == Restrict::All ? Int(1) : Int(0)};
  for (int n = 1; n <= max_n; ++n) {
    table.counts[static_cast<std::size_t>(n)] = descent_distribution(pattern, n, restrict, limits);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Structure lemma checks
// ---------------------------------------------------------------------------

namespace {

std::vector<int> shifted(const Permutation& p, int offset) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int v : p.values()) out.push_back(v + offset);
  return out;
}

std::vector<int> concat(std::vector<int> head, const std::vector<int>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::vector<int> descending(int from, int to) {  // from, from-1, ..., to
  std::vector<int> out;
  for (int v = from; v >= to; --v) out.push_back(v);
  return out;
}

std::vector<int> ascending(int from, int to) {  // from, from+1, ..., to
  std::vector<int> out;
  for (int v = from; v <= to; ++v) out.push_back(v);
  return out;
}

int longest_increasing_subsequence(const Permutation& p) {
  std::vector<int> best;
  for (int v : p.values()) {
    auto it = std::lower_bound(best.begin(), best.end(), v);
    if (it == best.end()) {
      best.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(best.size());
}

VincularPattern increasing_pattern(int k) {
  std::vector<bool> adj(static_cast<std::size_t>(k - 1), false);
  return VincularPattern(Permutation::identity(k), std::move(adj));
}

using WordSet = std::set<std::vector<int>>;

// Every characterization below constructs the claimed set of decomposable
// avoiders of [n] from smaller enumerations; the check is set equality
// against the brute-force decomposable avoiders, which covers both
// directions of the iff.
WordSet build_characterized_set(const std::string& id, int n, const EnumerationLimits& limits) {
  WordSet words;
  auto collect = [&](const char* pat, int len, Restrict r) {
    return collect_avoiders(VincularPattern::parse(pat), len, r, limits);
  };

  if (id == "123") {
    for (int i = 1; i <= n - 1; ++i) {
      words.insert(concat(descending(i, 1), descending(n, i + 1)));
    }
  } else if (id == "132") {
    for (int i = 1; i <= n - 1; ++i) {
      for (const auto& head : collect("1-3-2", i, Restrict::IndecomposableOnly)) {
        words.insert(concat({head.values().begin(), head.values().end()}, ascending(i + 1, n)));
      }
    }
  } else if (id == "2314" || id == "3124") {
    const char* inner = id == "2314" ? "2-3-1" : "3-1-2";
    const char* outer = id == "2314" ? "2-3-1-4" : "3-1-2-4";
    for (int i = 1; i <= n - 1; ++i) {
      for (const auto& head : collect(inner, i, Restrict::IndecomposableOnly)) {
        for (const auto& tail : collect(outer, n - i, Restrict::All)) {
          words.insert(concat({head.values().begin(), head.values().end()}, shifted(tail, i)));
        }
      }
    }
  } else if (id == "3214") {
    for (int i = 1; i <= n - 1; ++i) {
      for (const auto& head : collect("3-2-1", i, Restrict::IndecomposableOnly)) {
        for (const auto& tail : collect("3-2-1-4", n - i, Restrict::All)) {
          words.insert(concat({head.values().begin(), head.values().end()}, shifted(tail, i)));
        }
      }
    }
  } else if (id == "2143") {
    for (const auto& tail : collect("2-1-4-3", n - 1, Restrict::All)) {
      words.insert(concat({1}, shifted(tail, 1)));
    }
    for (int i = 2; i <= n - 1; ++i) {
      for (const auto& head : collect("2-1-4-3", i, Restrict::IndecomposableOnly)) {
        words.insert(concat({head.values().begin(), head.values().end()}, ascending(i + 1, n)));
      }
    }
  } else if (id == "2134") {
    for (const auto& tail : collect("2-1-3-4", n - 1, Restrict::All)) {
      words.insert(concat({1}, shifted(tail, 1)));
    }
    for (int i = 2; i <= n - 1; ++i) {
      for (const auto& head : collect("2-1-3", i, Restrict::IndecomposableOnly)) {
        words.insert(concat({head.values().begin(), head.values().end()}, descending(n, i + 1)));
      }
    }
  } else if (id == "1324") {
    for (int i = 1; i <= n - 1; ++i) {
      for (const auto& head : collect("1-3-2", i, Restrict::IndecomposableOnly)) {
        for (const auto& tail : collect("2-1-3", n - i, Restrict::All)) {
          words.insert(concat({head.values().begin(), head.values().end()}, shifted(tail, i)));
        }
      }
    }
  } else if (id == "1234") {
    for (int i = 1; i <= n - 1; ++i) {
      for (const auto& tail : collect("1-2-3", n - i, Restrict::All)) {
        words.insert(concat(descending(i, 1), shifted(tail, i)));
      }
    }
    for (int i = 3; i <= n - 1; ++i) {
      const std::vector<int> desc = descending(i, 1);
      for (const auto& head : collect("1-2-3", i, Restrict::IndecomposableOnly)) {
        std::vector<int> h(head.values().begin(), head.values().end());
        if (h == desc) continue;
        words.insert(concat(std::move(h), descending(n, i + 1)));
      }
    }
  } else if (id.rfind("inc", 0) == 0) {
    const int k = std::stoi(id.substr(3));
    for (int i = 1; i <= n - 1; ++i) {
      for (const auto& head :
           collect_avoiders(std::nullopt, i, Restrict::IndecomposableOnly, limits)) {
        const int m = longest_increasing_subsequence(head);
        if (m > k - 2) continue;
        for (const auto& tail : collect_avoiders(increasing_pattern(k - m), n - i, Restrict::All,
                                                 limits)) {
          words.insert(concat({head.values().begin(), head.values().end()}, shifted(tail, i)));
        }
      }
    }
  } else if (id == "1-23") {
    for (int i = 1; i <= n - 1; ++i) {
      for (const auto& body : collect("1-23", i - 1, Restrict::All)) {
        std::vector<int> head = shifted(body, 1);
        head.push_back(1);
        words.insert(concat(std::move(head), descending(n, i + 1)));
      }
    }
  } else if (id == "1-32") {
    for (int i = 1; i <= n - 1; ++i) {
      for (const auto& head : collect("1-32", i, Restrict::IndecomposableOnly)) {
        words.insert(concat({head.values().begin(), head.values().end()}, ascending(i + 1, n)));
      }
    }
  } else if (id == "3-12" || id == "3-21") {
    const char* pat = id.c_str();
    for (int i = 1; i <= n - 1; ++i) {
      for (const auto& head : collect(pat, i, Restrict::IndecomposableOnly)) {
        for (const auto& tail : collect(pat, n - i, Restrict::All)) {
          words.insert(concat({head.values().begin(), head.values().end()}, shifted(tail, i)));
        }
      }
    }
  } else {
    throw std::invalid_argument("unknown structure lemma id: " + id);
  }
  return words;
}

const char* lemma_pattern(const std::string& id) {
  if (id == "123") return "1-2-3";
  if (id == "132") return "1-3-2";
  if (id == "2314") return "2-3-1-4";
  if (id == "3124") return "3-1-2-4";
  if (id == "3214") return "3-2-1-4";
  if (id == "2143") return "2-1-4-3";
  if (id == "2134") return "2-1-3-4";
  if (id == "1324") return "1-3-2-4";
  if (id == "1234") return "1-2-3-4";
  if (id == "1-23") return "1-23";
  if (id == "1-32") return "1-32";
  if (id == "3-12") return "3-12";
  if (id == "3-21") return "3-21";
  return nullptr;  // inc<k> handled separately
}

std::string word_to_string(const std::vector<int>& w) {
  std::string out;
  const bool compact = w.size() <= 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& structure_lemma_catalog() {
  static const std::vector<std::string> catalog = {
      "123",  "132",  "2314", "3124", "3214", "2143", "2134", "1324",
      "1234", "inc3", "inc4", "inc5", "inc6", "1-23", "1-32", "3-12", "3-21"};
  return catalog;
}

LemmaReport check_structure_lemma(const std::string& lemma_id, int n,
                                  const EnumerationLimits& limits) {
  const auto& catalog = structure_lemma_catalog();
  if (std::find(catalog.begin(), catalog.end(), lemma_id) == catalog.end()) {
    throw std::invalid_argument("unknown structure lemma id: " + lemma_id);
  }
  if (n < 2) throw std::invalid_argument("structure lemma checks require n >= 2");
  check_length(n, limits);

  std::string pattern_text;
  if (lemma_id.rfind("inc", 0) == 0) {
    const int k = std::stoi(lemma_id.substr(3));
    pattern_text = increasing_pattern(k).to_string();
  } else {
    pattern_text = lemma_pattern(lemma_id);
  }
  const VincularPattern pattern = VincularPattern::parse(pattern_text);

  WordSet actual;
  for (const auto& p : collect_avoiders(pattern, n, Restrict::DecomposableOnly, limits)) {
    actual.insert({p.values().begin(), p.values().end()});
  }
  WordSet built = build_characterized_set(lemma_id, n, limits);

  LemmaReport report;
  report.lemma_id = lemma_id;
  report.n = n;
  report.pass = actual == built;
  if (lemma_id == "1-32") {
    report.note =
        "tail read as the ascending run (first_component_end+1)...n; the variant starting at "
        "first_component_end would repeat a value already in the first component";
  }
  if (!report.pass) {
    for (const auto& w : actual) {
      if (!built.count(w)) {
        report.counterexample = "decomposable avoider not characterized: " + word_to_string(w);
        break;
      }
    }
    if (report.counterexample.empty()) {
      for (const auto& w : built) {
        if (!actual.count(w)) {
          report.counterexample = "characterization built a non-member: " + word_to_string(w);
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace indeperm
