#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "polyeuler/polynomial.hpp"
#include "polyeuler/series.hpp"

namespace polyeuler {

inline constexpr int kDefaultSeriesOrder = 16;

// ---------------------------------------------------------------------------
// Falling factorials
// ---------------------------------------------------------------------------

/// x(x - lambda)(x - 2 lambda)...(x - (n-1) lambda), expanded; 1 for n = 0.
XLambdaPoly falling_factorial_deg(int n);
/// x(x-1)...(x-n+1), expanded; 1 for n = 0.
XLambdaPoly falling_factorial(int n);
/// prod_{j=1}^{n-1} (lambda - j), i.e. lambda^{n-1} (1)_{n,1/lambda}; 1 for n <= 1.
LambdaPoly shifted_lambda_product(int n);
/// (1)_{n,lambda} = prod_{j=0}^{n-1} (1 - j lambda).
LambdaPoly unit_falling_factorial_deg(int n);

// ---------------------------------------------------------------------------
// Elementary generating functions, truncated at `order`
// ---------------------------------------------------------------------------

/// e_lambda^x(scale t): coefficient n is (x)_{n,lambda} scale^n / n!.
/// With symbolic_x == false, x = 1, giving e_lambda(scale t).
Series deg_exp(bool symbolic_x, const Rational& scale, int order);
/// e^{x scale t} (or e^{scale t} when symbolic_x == false).
Series exp_series(bool symbolic_x, const Rational& scale, int order);
/// log_lambda(1 + t) = sum_{n>=1} prod_{j=1}^{n-1}(lambda - j) t^n / n!.
Series deg_log(int order);
/// log(1 + t).
Series log1p_series(int order);

/// Li_k(inner) = sum_{m>=1} inner^m / m^k. Throws NonzeroInnerConstant.
Series polylog_compose(int k, const Series& inner);
/// l_{k,lambda}(inner) = sum_{m>=1} prod_{j=1}^{m-1}(j - lambda) / ((m-1)! m^k) inner^m.
/// Throws NonzeroInnerConstant.
Series deg_polylog_compose(int k, const Series& inner);

// ---------------------------------------------------------------------------
// Stirling numbers
// ---------------------------------------------------------------------------

enum class StirlingKind { first, second };

/// Triangular table of (possibly degenerate) Stirling numbers for 0 <= k <= n <= n_max.
///
/// Built by extracting egf coefficients of (1/k!) f(t)^k, with f one of
/// log(1+t), e^t - 1, log_lambda(1+t), e_lambda(t) - 1.
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, bool degenerate, int n_max);

  StirlingKind kind() const { return kind_; }
  bool degenerate() const { return degenerate_; }
  int n_max() const { return n_max_; }

  /// Entry (n, k); zero for k > n or k < 0. Throws IndexOutOfRange for n
  /// outside [0, n_max].
  const LambdaPoly& at(int n, int k) const;

 private:
  StirlingKind kind_;
  bool degenerate_;
  int n_max_;
  std::vector<std::vector<LambdaPoly>> rows_;
  LambdaPoly zero_;
};

/// Direct, uncached Stirling number; requires 0 <= k <= n, otherwise throws
/// IndexOutOfRange.
LambdaPoly stirling(StirlingKind kind, bool degenerate, int n, int k);

// ---------------------------------------------------------------------------
// Bernoulli, Euler and poly-Bernoulli families
// ---------------------------------------------------------------------------

enum class ClassicalFamily { bernoulli, euler };

enum class PolyBernoulliForm {
  /// Li_k(1 - e^{-t}) / (e^t - 1) * e^{xt}
  classical,
  /// l_{k,lambda}(1 - e_lambda(-t)) / (1 - e_lambda(-t)) * e_lambda^x(-t)
  degenerate,
  /// Li_k(1 - e^{-t}) / (1 - e^{-t}) * e^{-xt}: the lambda -> 0 shape of `degenerate`
  degenerate_limit,
};

/// t/(e^t - 1) e^{xt} or 2/(e^t + 1) e^{xt}.
Series classical_family_series(ClassicalFamily family, int order);
/// t/(e_lambda(t) - 1) e_lambda^x(t) or 2/(e_lambda(t) + 1) e_lambda^x(t).
Series degenerate_family_series(ClassicalFamily family, int order);
Series poly_bernoulli_series(int k, PolyBernoulliForm form, int order);

/// Memoizing front end for the special sequences.
///
/// Every cached object is computed once at the configured truncation order
/// and never mutated afterwards; lookups are safe from several threads.
class SpecialSequences {
 public:
  explicit SpecialSequences(int order = kDefaultSeriesOrder);

  int order() const { return order_; }

  /// Cached Stirling table covering at least rows 0..n_max.
  std::shared_ptr<const StirlingTable> stirling_table(StirlingKind kind, bool degenerate, int n_max) const;
  /// Stirling entry with the contract of the free function stirling().
  LambdaPoly stirling(StirlingKind kind, bool degenerate, int n, int k) const;

  XLambdaPoly classical_family(ClassicalFamily family, int n) const;
  XLambdaPoly degenerate_family(ClassicalFamily family, int n) const;
  XLambdaPoly poly_bernoulli(int n, int k, PolyBernoulliForm form) const;

  /// Largest family index the cached generating functions can deliver.
  int max_family_index() const;

 private:
  const Series& cached_series(int tag, int k, int sub) const;

  int order_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<int, int, int>, std::shared_ptr<const Series>> series_cache_;
  mutable std::map<std::pair<int, bool>, std::shared_ptr<const StirlingTable>> stirling_cache_;
};

}  // namespace polyeuler
