#pragma once

#include "indeperm/brute_force.hpp"
#include "indeperm/numeric.hpp"
#include "indeperm/pattern.hpp"
#include "indeperm/series.hpp"

namespace indeperm {

/// One tag per resolved enumeration case for indecomposable avoiders. Every
/// classical pattern of length 3 or 4 and every non-consecutive vincular
/// pattern of length 3 maps to exactly one tag (reverse-complement partners
/// share a tag).
enum class PatternClass {
  Catalan3,      // 231, 312, 321 and the vincular 2-31 reduction
  Class2431,     // 2431, 4213, 3241, 4132, 2413, 3142
  Class4321,     // 4321, 3421, 4312, 2341, 4123, 3412
  P4231,         // no closed form; brute force only
  P123,
  P132_213,      // 132, 213 and the vincular 2-13 reduction
  P2314_3124,    // 2314, 3124 and their partners 1423, 1342
  P3214,         // 3214 and 1432
  P2143,
  P2134,         // 2134 and 1243
  P1324,         // hybrid: total avoider term from brute force
  P1234,
  V123,          // 1-23 and 12-3
  V132,          // 1-32 and 21-3
  V312_321,      // 3-12, 3-21, 23-1, 32-1
  V213,          // 2-13, 13-2; counted as 213
  V231,          // 2-31, 31-2; counted as 231
};

/// Throws std::invalid_argument for patterns outside the classified families.
PatternClass classify_pattern(const VincularPattern& p);

Int catalan(int n);
Int bell(int n);

/// Number of indecomposable permutations of [n] (no pattern constraint),
/// read off the reciprocal of the factorial generating function. n >= 1.
Int indecomposable_total(int n);

/// Total avoiders of any pattern in the 1234 Wilf class, by the explicit
/// binomial sum; evaluated in exact rationals and asserted integral. n >= 1.
Int avoiders_1234(int n);

/// Total avoiders of any pattern in the 1342 Wilf class, by the explicit
/// alternating sum. n >= 1.
Int avoiders_1342(int n);

/// Exact count of indecomposable avoiders of [n] for the tagged case, per the
/// resolved formula (brute force where no formula exists; those cases respect
/// the enumeration cap).
Int indecomposable_count(PatternClass id, int n, const EnumerationLimits& limits = {});
Int indecomposable_count(const VincularPattern& p, int n, const EnumerationLimits& limits = {});

/// Coefficient n of the recursion for increasing-pattern avoiders, at q = 1:
/// the 1...k case is built from the shorter increasing cases, with totals for
/// length >= 5 supplied by brute force. k >= 3.
Int increasing_pattern_indecomposable(int k, int n, const EnumerationLimits& limits = {});

// Series forms, constant term 1 (the empty permutation) unless noted.
TruncatedSeries catalan_series(int order);
TruncatedSeries bell_series(int order);
TruncatedSeries avoiders_1234_series(int order);
TruncatedSeries avoiders_1342_series(int order);
TruncatedSeries factorial_series(int order);              // sum of k! x^k
TruncatedSeries indecomposable_total_series(int order);   // 1 - 1/factorial_series

/// The 2431-class indecomposable series two ways; both must agree.
TruncatedSeries class2431_series(int order);       // 1 - 1/avoiders_1342_series
TruncatedSeries class2431_series_sqrt(int order);  // (-1+12x+8x^2+(1-8x)^{3/2})/(32x)

}  // namespace indeperm
