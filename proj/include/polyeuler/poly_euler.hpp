#pragma once

#include <functional>
#include <map>
#include <string>
#include <memory>
#include <mutex>
#include <string_view>
#include <utility>

#include "polyeuler/polynomial.hpp"
#include "polyeuler/series.hpp"
#include "polyeuler/special_sequences.hpp"

namespace polyeuler {

enum class FamilyKind { poly_euler, deg_poly_euler };

/// Parameters of one tabulation run of a poly-Euler family.
struct FamilySpec {
  FamilyKind family = FamilyKind::poly_euler;
  int k = 1;
  int n_max = 0;
  int order = kDefaultSeriesOrder;

  /// Throws OrderExceeded unless 0 <= n_max <= order.
  void validate() const;
};

/// Li_k(1 - e^{-2t}) / (t (e^t + 1)) * e^{xt}, truncated at `order`.
Series poly_euler_series(int k, int order);
/// l_{k,lambda}(1 - e_lambda(-2t)) / (t (e_lambda(t) + 1)) * e_lambda^x(t), truncated at `order`.
Series deg_poly_euler_series(int k, int order);

/// The two poly-Euler families, read off their generating functions, plus
/// the special sequences they are compared against. Thread-safe memoization
/// as in SpecialSequences.
class Families {
 public:
  explicit Families(int order = kDefaultSeriesOrder);

  int order() const { return sequences_.order(); }
  const SpecialSequences& sequences() const { return sequences_; }

  const Series& poly_euler_gf(int k) const;
  const Series& deg_poly_euler_gf(int k) const;

  /// E_n^{(k)}(x). Throws OrderExceeded if n > order().
  XLambdaPoly poly_euler(int n, int k) const;
  /// E_{n,lambda}^{(k)}(x). Throws OrderExceeded if n > order().
  XLambdaPoly deg_poly_euler(int n, int k) const;

  /// Values at x = 0.
  XLambdaPoly poly_euler_number(int n, int k) const;
  XLambdaPoly deg_poly_euler_number(int n, int k) const;

  /// sum_m E_{m,lambda}^{(k)} s^m / m!, the x = 0 generating function.
  Series deg_poly_euler_number_gf(int k) const;

  /// Memoizes a derived series under (name, k); `compute` runs at most once
  /// per key unless two threads race, in which case the first result wins.
  const Series& memoized(const std::string& name, int k, const std::function<Series()>& compute) const;

 private:
  const Series& cached(FamilyKind family, int k) const;

  SpecialSequences sequences_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const Series>> cache_;
  mutable std::map<std::pair<std::string, int>, std::shared_ptr<const Series>> derived_;
};

/// Closed form for n! [t^n] Li_k(1 - e^{-2t}):
/// sum_{m=1}^{n} 2^n (-1)^{n+m} m! / m^k S_2(n, m). Throws IndexOutOfRange for n < 1.
Rational lemma21_coeff(const SpecialSequences& seq, int n, int k);

// ---------------------------------------------------------------------------
// Closed-form right-hand sides. Every evaluator sums the printed terms with
// the printed index ranges; alternative readings are selected explicitly.
// ---------------------------------------------------------------------------

/// Triple sum over Stirling numbers and B_{n-l}(x/2). With at_zero, x = 0.
XLambdaPoly euler_via_half_argument_bernoulli(const Families& fam, int n, int k, bool at_zero);
/// Double sum over Stirling numbers and E_{n-m}(x). With at_zero, x = 0.
XLambdaPoly euler_via_classical_euler(const Families& fam, int n, int k, bool at_zero);
/// sum_l C(n,l) E_{n-l}^{(k)} x^l.
XLambdaPoly poly_euler_binomial_expansion(const Families& fam, int n, int k);
/// n E_{n-1}^{(k)}(x); zero for n = 0.
XLambdaPoly poly_euler_derivative_rhs(const Families& fam, int n, int k);

enum class StirlingIndexOrder {
  /// S(m, l) with m <= l, as printed.
  printed,
  /// S(l, m).
  transposed,
};

/// sum_{l<=n} sum_{m<=l} C(n,l) (x)_m S(., .) E_{n-l}^{(k)}, classical or degenerate.
XLambdaPoly falling_factorial_stirling_expansion(const Families& fam, int n, int k, bool degenerate,
                                                 StirlingIndexOrder order);

/// n E_{n-1}^{(k)}(x+1) + n E_{n-1}^{(k)}(x).
XLambdaPoly unit_shift_sum(const Families& fam, int n, int k);

enum class BernoulliArgument {
  /// beta_n^{(k)}(x + 2) - beta_n^{(k)}(x).
  printed,
  /// beta_n^{(k)}((x + 2)/2) - beta_n^{(k)}(x/2).
  rescaled,
};

/// 2^n (beta_n^{(k)}(a) - beta_n^{(k)}(b)) for the selected argument reading.
XLambdaPoly poly_bernoulli_difference(const Families& fam, int n, int k, BernoulliArgument reading);

/// sum_l C(n,l) (x)_{l,lambda} E_{n-l,lambda}^{(k)}.
XLambdaPoly deg_poly_euler_binomial_expansion(const Families& fam, int n, int k);

/// E_{n-1,lambda}^{(k)}(1) + E_{n-1,lambda}^{(k)}.
XLambdaPoly deg_unit_value_sum(const Families& fam, int n, int k);
/// (2^n / n) sum_{l=1}^{n} (-1)^{n-1} prod_{j<l}(lambda - j) / l^{k-1} S_{2,lambda}(n, l).
XLambdaPoly deg_unit_value_closed_form(const Families& fam, int n, int k);

/// Degenerate Stirling-2 convolution with (1)_{i,lambda} and E_{m,lambda}^{(k)}
/// (left side of the substitution identity).
XLambdaPoly stirling2_substitution_lhs(const Families& fam, int n, int k);
/// Degenerate Stirling-2 convolution with l_{k,lambda} coefficients and E_{l,lambda}
/// (right side of the substitution identity).
XLambdaPoly stirling2_substitution_rhs(const Families& fam, int n, int k);

/// Both Stirling-1 substitution sums contain lambda^{j-1}(1)_{j,1/lambda}
/// with j possibly 0, which is 1/lambda. These evaluators return lambda times
/// the printed sum so that every term lies in Q[lambda].
///
/// The left side sums m = 0..n as printed; with include_top_term == false the
/// m = n term (the only one carrying 1/lambda) is dropped.
XLambdaPoly stirling1_substitution_lhs_scaled(const Families& fam, int n, int k, bool include_top_term);
XLambdaPoly stirling1_substitution_rhs_scaled(const Families& fam, int n, int k);

enum class PolyBernoulliSign {
  /// (-1)^l 2^l, as printed.
  printed,
  /// (-1)^m 2^l, from expanding beta_{j,lambda}^{(k)} (2t)^j / j!.
  corrected,
};

/// sum_l sum_m C(n,l) C(l,m) sign 2^l (1)_{m+1,lambda}/(m+1) beta_{l-m,lambda}^{(k)} E_{n-l,lambda}.
XLambdaPoly deg_poly_euler_via_poly_bernoulli(const Families& fam, int n, int k, PolyBernoulliSign sign);

// ---------------------------------------------------------------------------
// Series-level forms of the two substitution identities.
// ---------------------------------------------------------------------------

/// u sum_m E_{m,lambda}^{(k)} u^m / m! with u = 1 - e_lambda(-2t).
Series stirling2_substitution_lhs_series(const Families& fam, int k, int order);
/// l_{k,lambda}(t) / (e_lambda(u) + 1) with u = 1 - e_lambda(-2t).
Series stirling2_substitution_rhs_series(const Families& fam, int k, int order);
/// s sum_l E_{l,lambda}^{(k)} s^l / l! with s = -log_lambda(1+t)/2.
Series stirling1_substitution_lhs_series(const Families& fam, int k, int order);
/// l_{k,lambda}(-t) / (e_lambda(s) + 1) with s = -log_lambda(1+t)/2.
Series stirling1_substitution_rhs_series(const Families& fam, int k, int order);

/// Printed right-hand side for a numbered result id ("L2.1" (as a constant), "T2.2", "C2.3", "T2.4",
/// "C2.5", "T2.6", "T2.7", "T2.8", "T2.9", "T3.1", "T3.2", "T3.3", "T3.4",
/// "T3.5" (lambda-scaled), "T3.6"). Throws UnknownIdentity otherwise.
XLambdaPoly closed_form_rhs(const Families& fam, std::string_view identity_id, int n, int k);

}  // namespace polyeuler
