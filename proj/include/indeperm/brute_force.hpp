#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "indeperm/numeric.hpp"
#include "indeperm/pattern.hpp"

namespace indeperm {

enum class Restrict { All, IndecomposableOnly, DecomposableOnly };

struct EnumerationLimits {
  int max_n = 11;               // hard cap on brute-force length
  int parallel_threshold = 10;  // split the search by first element at or above this length
};

/// Visits every permutation of [n] avoiding `pattern` (no constraint when
/// absent) and satisfying `restrict`, in lexicographic order. Generation is
/// depth-first insertion with prefix pruning: a prefix already containing the
/// pattern is never extended. Throws ResourceLimitError when n exceeds the cap.
void for_each_avoider(const std::optional<VincularPattern>& pattern, int n, Restrict restrict,
                      const std::function<void(const Permutation&)>& visit,
                      const EnumerationLimits& limits = {});

std::vector<Permutation> collect_avoiders(const std::optional<VincularPattern>& pattern, int n,
                                          Restrict restrict, const EnumerationLimits& limits = {});

/// Cardinality of the stream above. For n = 0 returns 1 under All (the empty
/// permutation), 0 otherwise.
Int count_avoiders(const VincularPattern& pattern, int n, Restrict restrict,
                   const EnumerationLimits& limits = {});

/// Unconstrained variant: counts all (indecomposable/decomposable) permutations.
Int count_permutations(int n, Restrict restrict, const EnumerationLimits& limits = {});

/// Entry i is the number of class members of [n] with exactly i descents; n >= 1.
std::vector<Int> descent_distribution(const VincularPattern& pattern, int n, Restrict restrict,
                                      const EnumerationLimits& limits = {});

/// Tabulated counts by length and descent number for 0 <= n <= max_n.
struct DescentTable {
  VincularPattern pattern;
  Restrict restrict;
  int max_n;
  std::vector<std::vector<Int>> counts;  // counts[n] has size 1 for n = 0, else n

  const Int& at(int n, int i) const;
  Int total(int n) const;
};

DescentTable build_descent_table(const VincularPattern& pattern, int max_n, Restrict restrict,
                                 const EnumerationLimits& limits = {});

/// Exhaustive two-sided check of one decomposition characterization: the set
/// of decomposable avoiders of [n] must equal the set of words the
/// characterization constructs.
struct LemmaReport {
  std::string lemma_id;
  int n = 0;
  bool pass = false;
  std::string note;            // reading remarks, e.g. the tail form used for "1-32"
  std::string counterexample;  // first offending word and which direction failed
};

const std::vector<std::string>& structure_lemma_catalog();

/// `lemma_id` is one of structure_lemma_catalog(); n >= 2.
/// Throws std::invalid_argument on unknown ids.
LemmaReport check_structure_lemma(const std::string& lemma_id, int n,
                                  const EnumerationLimits& limits = {});

}  // namespace indeperm
