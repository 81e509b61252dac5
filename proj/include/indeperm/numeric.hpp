#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace indeperm {

// Exact arithmetic used throughout: arbitrary-precision integers for counts,
// rationals for series coefficients. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

// Converts an exact rational known to be integral; throws std::logic_error otherwise.
inline Int to_integer(const Rat& r) {
  if (!is_integral(r)) {
    throw std::logic_error("expected integral value, got " + r.str());
  }
  return numerator(r);
}

}  // namespace indeperm
