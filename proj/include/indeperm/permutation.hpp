#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace indeperm {

/// A permutation of {1,...,n} in one-line notation. The empty permutation
/// (n = 0) is a legal value; it is the constant term of every counting series.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `one_line` is a rearrangement of {1,...,n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Value at 0-based position `pos` (values are 1-based).
  int at(int pos) const { return values_[static_cast<std::size_t>(pos)]; }

  std::span<const int> values() const { return values_; }

  /// Compact digits for n <= 9 ("312"), space-separated otherwise ("10 3 ...").
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Order-isomorphic relabeling of a word of distinct integers onto {1,...,n}.
/// Throws std::invalid_argument on duplicate entries.
Permutation reduce(std::span<const int> word);

/// Splits into maximal segments whose reductions are indecomposable. Segments
/// are returned unreduced; their concatenation reproduces the permutation.
std::vector<std::vector<int>> components(const Permutation& p);

/// True iff no proper prefix is a permutation of an initial segment of {1,...,n}.
/// Throws std::domain_error for the empty permutation.
bool is_indecomposable(const Permutation& p);

/// Length of the first component. Throws std::domain_error for the empty permutation.
int first_component_end(const Permutation& p);

/// Number of positions j with w[j] > w[j+1]. Works on unreduced words too.
int descent_count(std::span<const int> word);
int descent_count(const Permutation& p);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

}  // namespace indeperm
