#include "indeperm/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace indeperm {

namespace {

const Rat kZero{0};

int check_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  return order;
}

std::size_t slice_size(int n) { return n == 0 ? 1 : static_cast<std::size_t>(n); }

}  // namespace

// ---------------------------------------------------------------------------
// TruncatedSeries
// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(int order)
    : order_(check_order(order)), coeffs_(static_cast<std::size_t>(order) + 1, Rat(0)) {}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rat& coeff, int degree, int order) {
  TruncatedSeries s(order);
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = coeff;
  return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<Rat> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("coefficient list must be nonempty");
  TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
  s.coeffs_ = std::move(coeffs);
  return s;
}

const Rat& TruncatedSeries::coefficient(int n) const {
  if (n < 0 || n > order_) {
    throw std::out_of_range("coefficient index " + std::to_string(n) +
                            " beyond truncation order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coefficient(int n, Rat value) {
  if (n < 0 || n > order_) throw std::out_of_range("coefficient index beyond truncation order");
  coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend truncation order");
  TruncatedSeries s(new_order);
  std::copy_n(coeffs_.begin(), static_cast<std::size_t>(new_order) + 1, s.coeffs_.begin());
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) {
    s.coeffs_[static_cast<std::size_t>(n)] =
        a.coeffs_[static_cast<std::size_t>(n)] + b.coeffs_[static_cast<std::size_t>(n)];
  }
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) {
    s.coeffs_[static_cast<std::size_t>(n)] =
        a.coeffs_[static_cast<std::size_t>(n)] - b.coeffs_[static_cast<std::size_t>(n)];
  }
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) {
    Rat sum(0);
    for (int j = 0; j <= n; ++j) {
      sum += a.coeffs_[static_cast<std::size_t>(j)] * b.coeffs_[static_cast<std::size_t>(n - j)];
    }
    s.coeffs_[static_cast<std::size_t>(n)] = std::move(sum);
  }
  return s;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  TruncatedSeries r(order_);
  r.coeffs_[0] = Rat(1) / coeffs_[0];
  for (int n = 1; n <= order_; ++n) {
    Rat sum(0);
    for (int j = 1; j <= n; ++j) {
      sum += coeffs_[static_cast<std::size_t>(j)] * r.coeffs_[static_cast<std::size_t>(n - j)];
    }
    r.coeffs_[static_cast<std::size_t>(n)] = -sum / coeffs_[0];
  }
  return r;
}

TruncatedSeries TruncatedSeries::sqrt() const {
  if (coeffs_[0] != 1) {
    throw std::domain_error("series square root requires constant term 1");
  }
  TruncatedSeries r(order_);
  r.coeffs_[0] = 1;
  for (int n = 1; n <= order_; ++n) {
    Rat sum(0);
    for (int j = 1; j <= n - 1; ++j) {
      sum += r.coeffs_[static_cast<std::size_t>(j)] * r.coeffs_[static_cast<std::size_t>(n - j)];
    }
    r.coeffs_[static_cast<std::size_t>(n)] = (coeffs_[static_cast<std::size_t>(n)] - sum) / 2;
  }
  return r;
}

// ---------------------------------------------------------------------------
// BivariateSeries
// ---------------------------------------------------------------------------

BivariateSeries::BivariateSeries(int order) : order_(check_order(order)) {
  slices_.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    slices_[static_cast<std::size_t>(n)].assign(slice_size(n), Rat(0));
  }
}

BivariateSeries BivariateSeries::one(int order) {
  BivariateSeries s(order);
  s.slices_[0][0] = 1;
  return s;
}

BivariateSeries BivariateSeries::from_univariate(const TruncatedSeries& s) {
  BivariateSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) out.slices_[static_cast<std::size_t>(n)][0] = s.coefficient(n);
  return out;
}

const Rat& BivariateSeries::coefficient(int n, int i) const {
  if (n < 0 || n > order_) {
    throw std::out_of_range("coefficient index " + std::to_string(n) +
                            " beyond truncation order " + std::to_string(order_));
  }
  if (i < 0) throw std::out_of_range("negative descent index");
  const auto& slice = slices_[static_cast<std::size_t>(n)];
  if (static_cast<std::size_t>(i) >= slice.size()) return kZero;
  return slice[static_cast<std::size_t>(i)];
}

void BivariateSeries::set_coefficient(int n, int i, Rat value) {
  if (n < 0 || n > order_) throw std::out_of_range("coefficient index beyond truncation order");
  auto& slice = slices_[static_cast<std::size_t>(n)];
  if (i < 0 || static_cast<std::size_t>(i) >= slice.size()) {
    throw std::out_of_range("descent index exceeds the q-degree bound n-1");
  }
  slice[static_cast<std::size_t>(i)] = std::move(value);
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  const int order = std::min(a.order_, b.order_);
  BivariateSeries s(order);
  for (int n = 0; n <= order; ++n) {
    auto& slice = s.slices_[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < slice.size(); ++i) {
      slice[i] = a.slices_[static_cast<std::size_t>(n)][i] + b.slices_[static_cast<std::size_t>(n)][i];
    }
  }
  return s;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  const int order = std::min(a.order_, b.order_);
  BivariateSeries s(order);
  for (int n = 0; n <= order; ++n) {
    auto& slice = s.slices_[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < slice.size(); ++i) {
      slice[i] = a.slices_[static_cast<std::size_t>(n)][i] - b.slices_[static_cast<std::size_t>(n)][i];
    }
  }
  return s;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  // Convolution in both n and i. The q-degree bound is preserved: a degree
  // <= j-1 slice times a degree <= l-1 slice has degree <= j+l-2.
  const int order = std::min(a.order_, b.order_);
  BivariateSeries s(order);
  for (int n = 0; n <= order; ++n) {
    auto& out = s.slices_[static_cast<std::size_t>(n)];
    for (int j = 0; j <= n; ++j) {
      const auto& sa = a.slices_[static_cast<std::size_t>(j)];
      const auto& sb = b.slices_[static_cast<std::size_t>(n - j)];
      for (std::size_t ia = 0; ia < sa.size(); ++ia) {
        if (sa[ia] == 0) continue;
        for (std::size_t ib = 0; ib < sb.size(); ++ib) {
          if (sb[ib] == 0) continue;
          out.at(ia + ib) += sa[ia] * sb[ib];
        }
      }
    }
  }
  return s;
}

BivariateSeries BivariateSeries::reciprocal() const {
  if (slices_[0][0] == 0) {
    throw std::domain_error("series with zero constant term is not invertible");
  }
  const Rat inv0 = Rat(1) / slices_[0][0];
  BivariateSeries r(order_);
  r.slices_[0][0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    std::vector<Rat> acc(slice_size(n), Rat(0));
    for (int j = 1; j <= n; ++j) {
      const auto& sj = slices_[static_cast<std::size_t>(j)];
      const auto& rj = r.slices_[static_cast<std::size_t>(n - j)];
      for (std::size_t ia = 0; ia < sj.size(); ++ia) {
        if (sj[ia] == 0) continue;
        for (std::size_t ib = 0; ib < rj.size(); ++ib) {
          if (rj[ib] == 0) continue;
          acc.at(ia + ib) += sj[ia] * rj[ib];
        }
      }
    }
    auto& out = r.slices_[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -acc[i] * inv0;
  }
  return r;
}

BivariateSeries BivariateSeries::shift_xq() const {
  if (slices_[0][0] != 0) {
    throw std::domain_error("x*q shift requires a zero constant term");
  }
  BivariateSeries s(order_);
  // Slice 1 of the result stays zero: it would be q times the (zero) constant.
  for (int n = 2; n <= order_; ++n) {
    const auto& src = slices_[static_cast<std::size_t>(n - 1)];
    auto& dst = s.slices_[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < src.size(); ++i) dst.at(i + 1) = src[i];
  }
  return s;
}

TruncatedSeries BivariateSeries::at_q_one() const {
  TruncatedSeries s(order_);
  for (int n = 0; n <= order_; ++n) {
    Rat sum(0);
    for (const Rat& c : slices_[static_cast<std::size_t>(n)]) sum += c;
    s.set_coefficient(n, std::move(sum));
  }
  return s;
}

BivariateSeries geometric_block(GeometricShape shape, int order) {
  BivariateSeries s(order);
  switch (shape) {
    case GeometricShape::One:
      return BivariateSeries::one(order);
    case GeometricShape::X:
      if (order >= 1) s.set_coefficient(1, 0, 1);
      return s;
    case GeometricShape::XOver1MinusX:
      for (int n = 1; n <= order; ++n) s.set_coefficient(n, 0, 1);
      return s;
    case GeometricShape::XOver1MinusXQ:
      for (int n = 1; n <= order; ++n) s.set_coefficient(n, n - 1, 1);
      return s;
    case GeometricShape::X2Over1MinusXQSquared:
      // Two descending runs of lengths j, l >= 1 with j + l = n carry
      // (j-1) + (l-1) = n-2 descents; there are n-1 such splits.
      for (int n = 2; n <= order; ++n) s.set_coefficient(n, n - 2, n - 1);
      return s;
  }
  throw std::invalid_argument("unknown geometric block shape");
}

}  // namespace indeperm
