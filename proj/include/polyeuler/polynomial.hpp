#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "polyeuler/rational.hpp"

namespace polyeuler {

/// Product of two rational coefficient lists, convolved over a common
/// denominator in integer arithmetic.
std::vector<Rational> multiply_rational_coeffs(std::span<const Rational> a, std::span<const Rational> b);

/// Dense univariate polynomial over a coefficient ring.
///
/// coeffs()[i] is the coefficient of the i-th power. Trailing zeros are
/// always stripped, so the zero polynomial has no stored coefficients and
/// equality is plain list equality.
template <typename Coeff>
class DensePolynomial {
 public:
  using coefficient_type = Coeff;

  DensePolynomial() = default;
  DensePolynomial(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  DensePolynomial(int constant) : DensePolynomial(Coeff(constant)) {}  // NOLINT
  DensePolynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit DensePolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * var^power.
  static DensePolynomial monomial(Coeff c, std::size_t power) {
    if (c.is_zero()) return {};
    std::vector<Coeff> v(power + 1);
    v[power] = std::move(c);
    return DensePolynomial(std::move(v));
  }
  /// The variable itself.
  static DensePolynomial variable() { return monomial(Coeff(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(); }
  Coeff constant_term() const { return (*this)[0]; }

  DensePolynomial operator-() const {
    DensePolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  DensePolynomial& operator+=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  DensePolynomial& operator-=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  DensePolynomial& operator*=(const DensePolynomial& o) { return *this = *this * o; }

  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }

  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.coeffs_.size() == 1) return b.scaled(a.coeffs_[0]);
    if (b.coeffs_.size() == 1) return a.scaled(b.coeffs_[0]);
    if constexpr (std::is_same_v<Coeff, Rational>) {
      return DensePolynomial(multiply_rational_coeffs(a.coeffs_, b.coeffs_));
    }
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return DensePolynomial(std::move(out));
  }

  /// Multiplies every coefficient by `c`.
  DensePolynomial scaled(const Coeff& c) const {
    if (c.is_zero()) return {};
    DensePolynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
  }

  /// Formal derivative with respect to the polynomial's variable.
  DensePolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out[i - 1] = coeffs_[i] * Coeff(static_cast<int>(i));
    }
    return DensePolynomial(std::move(out));
  }

  /// Substitutes the variable by `arg` (Horner scheme).
  DensePolynomial compose(const DensePolynomial& arg) const {
    DensePolynomial r;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      r = r * arg;
      r += DensePolynomial(coeffs_[i]);
    }
    return r;
  }

  /// Evaluates at a point of the coefficient ring.
  Coeff evaluate(const Coeff& point) const {
    Coeff r;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      r = r * point + coeffs_[i];
    }
    return r;
  }

  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// Element of Q[lambda].
using LambdaPoly = DensePolynomial<Rational>;
/// Element of Q[lambda][x]; the outer index is the power of x.
using XLambdaPoly = DensePolynomial<LambdaPoly>;

/// The polynomial lambda in Q[lambda].
inline LambdaPoly lambda_var() { return LambdaPoly::variable(); }
/// The polynomial x in Q[lambda][x].
inline XLambdaPoly x_var() { return XLambdaPoly::variable(); }
/// Embeds a lambda-polynomial as an x-constant.
inline XLambdaPoly embed(const LambdaPoly& p) { return XLambdaPoly(p); }
inline XLambdaPoly embed(const Rational& r) { return XLambdaPoly(LambdaPoly(r)); }

/// Largest power of lambda appearing in any x-coefficient.
int lambda_degree(const XLambdaPoly& p);

/// Substitutes lambda by a rational; x stays symbolic.
XLambdaPoly specialize_lambda(const XLambdaPoly& p, const Rational& lambda);
/// Substitutes x by a rational; lambda stays symbolic.
XLambdaPoly specialize_x(const XLambdaPoly& p, const Rational& x);
/// Substitutes x by a polynomial in x and lambda, e.g. x/2 or x+1.
XLambdaPoly substitute_x(const XLambdaPoly& p, const XLambdaPoly& arg);
/// Full evaluation at rational lambda and x.
Rational evaluate(const XLambdaPoly& p, const Rational& lambda, const Rational& x);

/// True when p carries no x and no lambda, i.e. is a rational constant.
bool is_rational_constant(const XLambdaPoly& p);
Rational rational_constant(const XLambdaPoly& p);

}  // namespace polyeuler
