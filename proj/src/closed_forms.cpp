#include "indeperm/closed_forms.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace indeperm {

namespace {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (int i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact at every step
  }
  return result;
}

Int factorial(int n) {
  Int result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("defined for n >= 1");
}

VincularPattern increasing_classical(int k) {
  std::vector<bool> adj(static_cast<std::size_t>(k - 1), false);
  return VincularPattern(Permutation::identity(k), std::move(adj));
}

}  // namespace

Int catalan(int n) {
  if (n < 0) throw std::invalid_argument("Catalan numbers are defined for n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

Int bell(int n) {
  if (n < 0) throw std::invalid_argument("Bell numbers are defined for n >= 0");
  // Bell triangle: each row starts with the previous row's last entry.
  std::vector<Int> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<Int> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const Int& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

TruncatedSeries factorial_series(int order) {
  TruncatedSeries s(order);
  for (int k = 0; k <= order; ++k) s.set_coefficient(k, Rat(factorial(k)));
  return s;
}

TruncatedSeries indecomposable_total_series(int order) {
  return TruncatedSeries::one(order) - factorial_series(order).reciprocal();
}

Int indecomposable_total(int n) {
  require_positive(n);
  return to_integer(indecomposable_total_series(n).coefficient(n));
}

Int avoiders_1234(int n) {
  require_positive(n);
  Rat sum(0);
  for (int k = 0; k <= n; ++k) {
    const Rat numer = Rat(binomial(2 * k, k)) * Rat(binomial(n, k)) * Rat(binomial(n, k)) *
                      Rat(Int(3) * k * k + 2 * k - Int(2) * k * n - n + 1);
    const Rat denom = Rat(Int(k + 1) * (k + 1) * (k + 2) * (n - k + 1));
    sum += numer / denom;
  }
  return to_integer(2 * sum);
}

Int avoiders_1342(int n) {
  require_positive(n);
  const int lead_sign = (n - 1) % 2 == 0 ? 1 : -1;
  Rat sum = Rat(Int(7) * n * n - 3 * n - 2) / 2 * lead_sign;
  for (int i = 2; i <= n; ++i) {
    const int sign = (n - i) % 2 == 0 ? 1 : -1;
    Rat term = Rat(Int(1) << (i + 1)) * Rat(factorial(2 * i - 4)) /
               Rat(factorial(i) * factorial(i - 2));
    term *= Rat(binomial(n - i + 2, 2)) * sign;
    sum += 3 * term;
  }
  return to_integer(sum);
}

TruncatedSeries catalan_series(int order) {
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) s.set_coefficient(n, Rat(catalan(n)));
  return s;
}

TruncatedSeries bell_series(int order) {
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) s.set_coefficient(n, Rat(bell(n)));
  return s;
}

TruncatedSeries avoiders_1234_series(int order) {
  TruncatedSeries s(order);
  s.set_coefficient(0, 1);
  for (int n = 1; n <= order; ++n) s.set_coefficient(n, Rat(avoiders_1234(n)));
  return s;
}

TruncatedSeries avoiders_1342_series(int order) {
  TruncatedSeries s(order);
  s.set_coefficient(0, 1);
  for (int n = 1; n <= order; ++n) s.set_coefficient(n, Rat(avoiders_1342(n)));
  return s;
}

TruncatedSeries class2431_series(int order) {
  return TruncatedSeries::one(order) - avoiders_1342_series(order).reciprocal();
}

TruncatedSeries class2431_series_sqrt(int order) {
  // Build -1 + 12x + 8x^2 + (1-8x)^{3/2} one order higher, then divide by 32x.
  const int inner_order = order + 1;
  TruncatedSeries base(inner_order);
  base.set_coefficient(0, 1);
  base.set_coefficient(1, -8);
  const TruncatedSeries three_halves = base * base.sqrt();
  TruncatedSeries numer(inner_order);
  numer.set_coefficient(0, -1);
  numer.set_coefficient(1, 12);
  if (inner_order >= 2) numer.set_coefficient(2, 8);
  numer = numer + three_halves;
  if (numer.coefficient(0) != 0) {
    throw std::logic_error("sqrt-form numerator must vanish at x = 0");
  }
  TruncatedSeries out(order);
  for (int n = 0; n <= order; ++n) out.set_coefficient(n, numer.coefficient(n + 1) / 32);
  return out;
}

PatternClass classify_pattern(const VincularPattern& p) {
  static const std::map<std::string, PatternClass> table = {
      // classical, length 3
      {"1-2-3", PatternClass::P123},
      {"1-3-2", PatternClass::P132_213},
      {"2-1-3", PatternClass::P132_213},
      {"2-3-1", PatternClass::Catalan3},
      {"3-1-2", PatternClass::Catalan3},
      {"3-2-1", PatternClass::Catalan3},
      // classical, length 4
      {"2-4-3-1", PatternClass::Class2431},
      {"4-2-1-3", PatternClass::Class2431},
      {"3-2-4-1", PatternClass::Class2431},
      {"4-1-3-2", PatternClass::Class2431},
      {"2-4-1-3", PatternClass::Class2431},
      {"3-1-4-2", PatternClass::Class2431},
      {"4-3-2-1", PatternClass::Class4321},
      {"3-4-2-1", PatternClass::Class4321},
      {"4-3-1-2", PatternClass::Class4321},
      {"2-3-4-1", PatternClass::Class4321},
      {"4-1-2-3", PatternClass::Class4321},
      {"3-4-1-2", PatternClass::Class4321},
      {"4-2-3-1", PatternClass::P4231},
      {"2-3-1-4", PatternClass::P2314_3124},
      {"3-1-2-4", PatternClass::P2314_3124},
      {"1-4-2-3", PatternClass::P2314_3124},  // reverse-complement of 2314
      {"1-3-4-2", PatternClass::P2314_3124},  // reverse-complement of 3124
      {"3-2-1-4", PatternClass::P3214},
      {"1-4-3-2", PatternClass::P3214},
      {"2-1-4-3", PatternClass::P2143},
      {"2-1-3-4", PatternClass::P2134},
      {"1-2-4-3", PatternClass::P2134},
      {"1-3-2-4", PatternClass::P1324},
      {"1-2-3-4", PatternClass::P1234},
      // vincular, length 3, non-consecutive
      {"1-23", PatternClass::V123},
      {"12-3", PatternClass::V123},
      {"1-32", PatternClass::V132},
      {"21-3", PatternClass::V132},
      {"2-13", PatternClass::V213},
      {"13-2", PatternClass::V213},
      {"2-31", PatternClass::V231},
      {"31-2", PatternClass::V231},
      {"3-12", PatternClass::V312_321},
      {"3-21", PatternClass::V312_321},
      {"23-1", PatternClass::V312_321},
      {"32-1", PatternClass::V312_321},
  };
  auto it = table.find(p.to_string());
  if (it == table.end()) {
    throw std::invalid_argument("pattern " + p.to_string() + " is outside the classified families");
  }
  return it->second;
}

Int indecomposable_count(PatternClass id, int n, const EnumerationLimits& limits) {
  require_positive(n);
  switch (id) {
    case PatternClass::Catalan3:
    case PatternClass::V231:
      return catalan(n - 1);
    case PatternClass::Class2431:
      return to_integer(class2431_series(n).coefficient(n));
    case PatternClass::Class4321:
      return to_integer(
          (TruncatedSeries::one(n) - avoiders_1234_series(n).reciprocal()).coefficient(n));
    case PatternClass::P4231:
      return count_avoiders(VincularPattern::parse("4-2-3-1"), n, Restrict::IndecomposableOnly,
                            limits);
    case PatternClass::P123:
      return catalan(n) - (n - 1);
    case PatternClass::P132_213:
    case PatternClass::V213:
      return n == 1 ? Int(1) : catalan(n) - catalan(n - 1);
    case PatternClass::P2314_3124: {
      if (n == 1) return 1;
      Int sum = 0;
      for (int i = 0; i <= n - 2; ++i) sum += catalan(i) * avoiders_1342(n - 1 - i);
      return avoiders_1342(n) - sum;
    }
    case PatternClass::P3214: {
      if (n == 1) return 1;
      Int sum = 0;
      for (int i = 0; i <= n - 2; ++i) sum += catalan(i) * avoiders_1234(n - 1 - i);
      return avoiders_1234(n) - sum;
    }
    case PatternClass::P2143: {
      if (n == 1) return 1;
      const Int e2 = n - 2 == 0 ? Int(1) : avoiders_1234(n - 2);
      return avoiders_1234(n) - 2 * avoiders_1234(n - 1) + e2;
    }
    case PatternClass::P2134:
      if (n == 1) return 1;
      return avoiders_1234(n) - avoiders_1234(n - 1) - catalan(n - 1) + 1;
    case PatternClass::P1324: {
      if (n == 1) return 1;
      const Int total =
          count_avoiders(VincularPattern::parse("1-3-2-4"), n, Restrict::All, limits);
      return total - catalan(n + 1) + 3 * catalan(n) - 2 * catalan(n - 1);
    }
    case PatternClass::P1234: {
      if (n == 1) return 1;
      Int sum = 0;
      for (int i = 1; i <= n - 1; ++i) sum += catalan(i);
      return avoiders_1234(n) - 2 * sum + Int(n) * (n - 1) / 2;
    }
    case PatternClass::V123: {
      if (n == 1) return 1;
      Int sum = 0;
      for (int i = 0; i <= n - 2; ++i) sum += bell(i);
      return bell(n) - sum;
    }
    case PatternClass::V132:
      if (n == 1) return 1;
      return bell(n) - bell(n - 1);
    case PatternClass::V312_321:
      return to_integer((TruncatedSeries::one(n) - bell_series(n).reciprocal()).coefficient(n));
  }
  throw std::invalid_argument("unknown pattern class");
}

Int indecomposable_count(const VincularPattern& p, int n, const EnumerationLimits& limits) {
  return indecomposable_count(classify_pattern(p), n, limits);
}

namespace {

// Totals of 1...k avoiders as a series: closed forms through k = 4, brute
// force beyond.
TruncatedSeries increasing_total_series(int k, int order, const EnumerationLimits& limits) {
  if (k == 1) return TruncatedSeries::one(order);
  if (k == 2) {
    TruncatedSeries s(order);
    for (int n = 0; n <= order; ++n) s.set_coefficient(n, 1);
    return s;
  }
  if (k == 3) return catalan_series(order);
  if (k == 4) return avoiders_1234_series(order);
  TruncatedSeries s(order);
  s.set_coefficient(0, 1);
  const VincularPattern p = increasing_classical(k);
  for (int n = 1; n <= order; ++n) {
    s.set_coefficient(n, Rat(count_avoiders(p, n, Restrict::All, limits)));
  }
  return s;
}

TruncatedSeries increasing_indecomposable_series(int k, int order,
                                                 const EnumerationLimits& limits) {
  if (k == 1) return TruncatedSeries::zero(order);
  if (k == 2) {
    // Only the descending permutation avoids 12, and it is indecomposable.
    TruncatedSeries s(order);
    for (int n = 1; n <= order; ++n) s.set_coefficient(n, 1);
    return s;
  }
  TruncatedSeries result = increasing_total_series(k, order, limits);
  const TruncatedSeries one = TruncatedSeries::one(order);
  for (int m = 1; m <= k - 2; ++m) {
    const TruncatedSeries head = increasing_indecomposable_series(m + 1, order, limits) -
                                 increasing_indecomposable_series(m, order, limits);
    result = result - head * (increasing_total_series(k - m, order, limits) - one);
  }
  return result - one;
}

}  // namespace

Int increasing_pattern_indecomposable(int k, int n, const EnumerationLimits& limits) {
  if (k < 3) throw std::invalid_argument("recursion applies for k >= 3");
  require_positive(n);
  return to_integer(increasing_indecomposable_series(k, n, limits).coefficient(n));
}

}  // namespace indeperm
