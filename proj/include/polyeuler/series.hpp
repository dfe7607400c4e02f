#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyeuler/polynomial.hpp"

namespace polyeuler {

/// Formal power series in t over Q[lambda][x], truncated at order N:
/// sum_{n=0}^{N} c_n t^n + O(t^{N+1}).
///
/// Exactly N+1 coefficients are stored. Binary operations return a series
/// whose order is the minimum of the operands' orders, so no result claims
/// more precision than its inputs.
class Series {
 public:
  /// The zero series of the given order.
  explicit Series(int order);
  /// Pads with zeros or truncates `coeffs` to exactly order + 1 entries.
  Series(int order, std::vector<XLambdaPoly> coeffs);

  static Series constant(int order, const XLambdaPoly& c);
  static Series one(int order) { return constant(order, embed(Rational(1))); }
  /// c * t^power (zero if power > order).
  static Series monomial(int order, const XLambdaPoly& c, int power);
  /// t itself.
  static Series t(int order) { return monomial(order, embed(Rational(1)), 1); }
  /// Series whose n-th coefficient is values[n] / n!.
  static Series from_egf(int order, std::span<const XLambdaPoly> values);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const XLambdaPoly> coeffs() const { return coeffs_; }
  const XLambdaPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// Index of the first nonzero coefficient, or nullopt if all are zero.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Drops coefficients above `new_order` (no-op if already lower).
  Series truncated(int new_order) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  /// Coefficientwise product with a polynomial.
  Series scaled(const XLambdaPoly& c) const;
  Series scaled(const Rational& c) const { return scaled(embed(c)); }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<XLambdaPoly> coeffs_;
};

Series series_add(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);

/// Exact quotient num / den.
///
/// If den has valuation v, its t^v coefficient must be a nonzero rational
/// constant and num must vanish to order at least v; the quotient then has
/// order min(order(num), order(den)) - v.
///
/// Throws LeadingCoefficientNotInvertible, ValuationMismatch.
Series series_div(const Series& num, const Series& den);

/// outer(inner(t)) by Horner's scheme, truncated at the smaller order.
///
/// Throws NonzeroInnerConstant if inner(0) != 0.
Series series_compose(const Series& outer, const Series& inner);

/// a(c t): the n-th coefficient is multiplied by c^n.
Series series_scale_t(const Series& a, const Rational& c);

/// n! * [t^n] a. Throws OrderExceeded if n > order(a).
XLambdaPoly egf_coeff(const Series& a, int n);

/// a^exponent for exponent >= 0.
Series series_pow(const Series& a, int exponent);

/// Applies specialize_lambda to every coefficient.
Series specialize_lambda(const Series& a, const Rational& lambda);

}  // namespace polyeuler
