#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyeuler {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq_class; every constructor and operation leaves the
/// value canonical, so structural equality is numeric equality and zero is
/// always 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  /// Throws std::domain_error when `den` is zero.
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p", "-p/q" (no whitespace, no decimal point).
  static Rational parse(std::string_view text);
  static Rational from_integer_string(std::string_view text);

  std::string numerator_string() const;
  std::string denominator_string() const;
  /// Always renders as "p/q", including integers ("3/1") and zero ("0/1").
  std::string to_fraction_string() const;
  /// "p/q" for non-integers, "p" for integers.
  std::string to_string() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (zero base with negative
  /// exponent throws std::domain_error).
  Rational pow(long exponent) const;

  const mpq_class& raw() const { return value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_{0};
};

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace polyeuler
