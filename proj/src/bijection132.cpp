#include "indeperm/bijection132.hpp"

#include <stdexcept>
#include <vector>

#include "indeperm/pattern.hpp"

namespace indeperm::bij {

namespace {

const VincularPattern& pattern_1_32() {
  static const VincularPattern p = VincularPattern::parse("1-32");
  return p;
}

void require_avoider(const Permutation& p) {
  if (p.size() < 2) throw std::domain_error("defined for n >= 2");
  if (!avoids(p, pattern_1_32())) throw std::domain_error("permutation contains 1-32");
}

bool ends_with_rise(const Permutation& p) {
  return p.at(p.size() - 2) < p.at(p.size() - 1);
}

}  // namespace

AvoiderClass classify(const Permutation& p) {
  require_avoider(p);
  const int last = p.at(p.size() - 1);
  if (last == 1) return AvoiderClass::EndsWithOne;
  if (last == p.size()) return AvoiderClass::EndsWithMax;
  return AvoiderClass::Other;
}

Permutation forward(const Permutation& p) {
  require_avoider(p);
  if (!is_indecomposable(p)) throw std::domain_error("permutation is decomposable");
  if (classify(p) == AvoiderClass::EndsWithOne) {
    const Permutation head = reduce(p.values().first(static_cast<std::size_t>(p.size() - 1)));
    std::vector<int> out(head.values().begin(), head.values().end());
    out.push_back(p.size());
    return Permutation(std::move(out));
  }
  return p;  // ends with neither 1 nor n: fixed point
}

Permutation backward(const Permutation& p) {
  require_avoider(p);
  if (!ends_with_rise(p)) throw std::domain_error("permutation does not end with a rise");
  if (classify(p) == AvoiderClass::EndsWithMax) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size()));
    for (int j = 0; j < p.size() - 1; ++j) out.push_back(p.at(j) + 1);
    out.push_back(1);
    return Permutation(std::move(out));
  }
  return p;
}

}  // namespace indeperm::bij
