#pragma once

#include <vector>

#include "indeperm/numeric.hpp"

namespace indeperm {

/// Formal power series in x truncated at a fixed order, with exact rational
/// coefficients. Binary operations never extend the order: the result order
/// is the minimum of the operand orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
  static TruncatedSeries one(int order);
  static TruncatedSeries monomial(const Rat& coeff, int degree, int order);
  static TruncatedSeries from_coefficients(std::vector<Rat> coeffs);  // order = size-1

  int order() const { return order_; }

  /// Throws std::out_of_range beyond the truncation order.
  const Rat& coefficient(int n) const;
  void set_coefficient(int n, Rat value);

  TruncatedSeries truncated(int new_order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Multiplicative inverse to the truncation order. Throws std::domain_error
  /// when the constant term is zero.
  TruncatedSeries reciprocal() const;

  /// Square root with constant term 1, via the coefficient recurrence from
  /// r*r = s. Throws std::domain_error unless the constant term equals 1.
  TruncatedSeries sqrt() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int order_;
  std::vector<Rat> coeffs_;  // size order_+1
};

enum class GeometricShape {
  One,                  // 1
  X,                    // x
  XOver1MinusX,         // x/(1-x): ascending runs, 0 descents
  XOver1MinusXQ,        // x/(1-xq): descending runs, j-1 descents at length j
  X2Over1MinusXQSquared // x^2/(1-xq)^2: two descending runs
};

/// Bivariate series in x (length) and q (descents), truncated in x. The
/// x^n slice is a polynomial in q of degree at most n-1, since a permutation
/// of [n] has at most n-1 descents.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);
  static BivariateSeries zero(int order) { return BivariateSeries(order); }
  static BivariateSeries one(int order);
  static BivariateSeries from_univariate(const TruncatedSeries& s);

  int order() const { return order_; }

  /// Coefficient of x^n q^i. Throws std::out_of_range when n exceeds the
  /// truncation order; i beyond the slice degree bound reads as zero.
  const Rat& coefficient(int n, int i) const;
  void set_coefficient(int n, int i, Rat value);

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

  BivariateSeries reciprocal() const;

  /// Multiplies by the monomial x*q. Requires a zero constant term so the
  /// q-degree bound is preserved.
  BivariateSeries shift_xq() const;

  /// Sets q = 1: sums each x^n slice over the descent index.
  TruncatedSeries at_q_one() const;

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  int order_;
  std::vector<std::vector<Rat>> slices_;  // slices_[n] has size 1 for n = 0, else n
};

/// Exact truncated expansion of one of a fixed catalog of rational blocks.
BivariateSeries geometric_block(GeometricShape shape, int order);

}  // namespace indeperm
