#include "polyeuler/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "polyeuler/errors.hpp"

namespace polyeuler {

Series::Series(int order) {
  if (order < 0) throw OrderExceeded("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(int order, std::vector<XLambdaPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw OrderExceeded("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::constant(int order, const XLambdaPoly& c) { return monomial(order, c, 0); }

Series Series::monomial(int order, const XLambdaPoly& c, int power) {
  Series s(order);
  if (power >= 0 && power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
  return s;
}

Series Series::from_egf(int order, std::span<const XLambdaPoly> values) {
  Series s(order);
  const int n_max = std::min(order, static_cast<int>(values.size()) - 1);
  for (int n = 0; n <= n_max; ++n) {
    s.coeffs_[n] = values[n].scaled(LambdaPoly(Rational(1) / factorial(n)));
  }
  return s;
}

std::optional<int> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return std::nullopt;
}

Series Series::truncated(int new_order) const {
  if (new_order >= order()) return *this;
  return Series(new_order, std::vector<XLambdaPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  Series r(order);
  for (int n = 0; n <= order; ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  Series r(order);
  for (int n = 0; n <= order; ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  Series r(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

Series Series::scaled(const XLambdaPoly& c) const {
  Series r = *this;
  for (auto& x : r.coeffs_) x = x * c;
  return r;
}

Series series_add(const Series& a, const Series& b) { return a + b; }
Series series_mul(const Series& a, const Series& b) { return a * b; }

Series series_div(const Series& num, const Series& den) {
  const auto den_val = den.valuation();
  if (!den_val) throw LeadingCoefficientNotInvertible("division by the zero series");
  const int v = *den_val;
  const XLambdaPoly& lead = den[v];
  if (!is_rational_constant(lead)) {
    throw LeadingCoefficientNotInvertible("leading coefficient of the divisor at t^" +
                                          std::to_string(v) + " depends on x or lambda");
  }
  const auto num_val = num.valuation();
  if (num_val && *num_val < v) {
    throw ValuationMismatch("numerator valuation " + std::to_string(*num_val) +
                            " is below divisor valuation " + std::to_string(v));
  }
  const int order = std::min(num.order(), den.order()) - v;
  if (order < 0) {
    throw ValuationMismatch("divisor valuation " + std::to_string(v) +
                            " exceeds the known precision of the operands");
  }
  const LambdaPoly inv_lead(Rational(1) / rational_constant(lead));
  std::vector<XLambdaPoly> q(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    XLambdaPoly acc = num[n + v];
    for (int i = 1; i <= n; ++i) {
      const XLambdaPoly& b = den[i + v];
      if (b.is_zero() || q[n - i].is_zero()) continue;
      acc -= b * q[n - i];
    }
    q[n] = acc.scaled(inv_lead);
  }
  return Series(order, std::move(q));
}

Series series_compose(const Series& outer, const Series& inner) {
  if (!inner[0].is_zero()) {
    throw NonzeroInnerConstant("inner series of a composition must have zero constant term");
  }
  const int order = std::min(outer.order(), inner.order());
  const Series in = inner.truncated(order);
  Series r = Series::constant(order, outer[order]);
  for (int m = order - 1; m >= 0; --m) {
    r = r * in + Series::constant(order, outer[m]);
  }
  return r;
}

Series series_scale_t(const Series& a, const Rational& c) {
  std::vector<XLambdaPoly> out(a.coeffs().begin(), a.coeffs().end());
  Rational power(1);
  for (auto& x : out) {
    x = x.scaled(LambdaPoly(power));
    power *= c;
  }
  return Series(a.order(), std::move(out));
}

XLambdaPoly egf_coeff(const Series& a, int n) {
  if (n < 0 || n > a.order()) {
    throw OrderExceeded("coefficient t^" + std::to_string(n) + " requested from a series of order " +
                        std::to_string(a.order()));
  }
  return a[n].scaled(LambdaPoly(factorial(n)));
}

Series series_pow(const Series& a, int exponent) {
  if (exponent < 0) throw IndexOutOfRange("negative series power");
  Series r = Series::one(a.order());
  for (int i = 0; i < exponent; ++i) r = r * a;
  return r;
}

Series specialize_lambda(const Series& a, const Rational& lambda) {
  std::vector<XLambdaPoly> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(specialize_lambda(c, lambda));
  return Series(a.order(), std::move(out));
}

}  // namespace polyeuler
