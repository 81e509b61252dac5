#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "indeperm/permutation.hpp"

namespace indeperm {

/// A pattern permutation of {1,...,k} plus adjacency constraints between
/// consecutive pattern positions. All flags false = classical pattern,
/// all true = consecutive pattern.
///
/// Text form is dash notation: consecutive digits with no dash between them
/// are adjacency-constrained, so "1-32" constrains the 3 and the 2 to be
/// adjacent in any occurrence, "1-2-3" is the classical 123, and "132" must
/// occur as a contiguous factor.
class VincularPattern {
 public:
  VincularPattern(Permutation pattern, std::vector<bool> adjacent);

  /// Grammar: digit (('-')? digit)*, digits 1-9 forming a permutation of [k].
  /// Throws PatternParseError otherwise.
  static VincularPattern parse(std::string_view text);

  const Permutation& pattern() const { return pattern_; }
  const std::vector<bool>& adjacent() const { return adjacent_; }
  int length() const { return pattern_.size(); }
  bool is_classical() const;
  bool is_consecutive() const;
  std::string to_string() const;

  friend bool operator==(const VincularPattern&, const VincularPattern&) = default;

 private:
  Permutation pattern_;
  std::vector<bool> adjacent_;  // size k-1
};

/// Number of index tuples i_1 < ... < i_k whose subword is order-isomorphic to
/// the pattern, with every adjacency-constrained pair consecutive in the host.
long long count_occurrences(const Permutation& host, const VincularPattern& p);

bool contains(const Permutation& host, const VincularPattern& p);
bool avoids(const Permutation& host, const VincularPattern& p);

/// Reversal flips position order, so the adjacency flags reverse with it.
VincularPattern reverse(const VincularPattern& p);
/// Complement flips values only; adjacency flags are unchanged.
VincularPattern complement(const VincularPattern& p);

}  // namespace indeperm
