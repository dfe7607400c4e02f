#include "polyeuler/special_sequences.hpp"

#include <string>
#include <utility>

#include "polyeuler/errors.hpp"

namespace polyeuler {

XLambdaPoly falling_factorial_deg(int n) {
  if (n < 0) throw IndexOutOfRange("falling factorial of negative length");
  XLambdaPoly r = embed(Rational(1));
  for (int j = 0; j < n; ++j) {
    // x - j*lambda
    r = r * XLambdaPoly({LambdaPoly::monomial(Rational(-j), 1), LambdaPoly(Rational(1))});
  }
  return r;
}

XLambdaPoly falling_factorial(int n) {
  if (n < 0) throw IndexOutOfRange("falling factorial of negative length");
  XLambdaPoly r = embed(Rational(1));
  for (int j = 0; j < n; ++j) {
    r = r * XLambdaPoly({LambdaPoly(Rational(-j)), LambdaPoly(Rational(1))});
  }
  return r;
}

LambdaPoly shifted_lambda_product(int n) {
  LambdaPoly r(Rational(1));
  for (int j = 1; j <= n - 1; ++j) r = r * LambdaPoly({Rational(-j), Rational(1)});
  return r;
}

LambdaPoly unit_falling_factorial_deg(int n) {
  LambdaPoly r(Rational(1));
  for (int j = 1; j < n; ++j) r = r * LambdaPoly({Rational(1), Rational(-j)});
  return r;
}

Series deg_exp(bool symbolic_x, const Rational& scale, int order) {
  std::vector<XLambdaPoly> values;
  values.reserve(static_cast<std::size_t>(order) + 1);
  Rational power(1);
  for (int n = 0; n <= order; ++n) {
    XLambdaPoly ff = falling_factorial_deg(n);
    if (!symbolic_x) ff = specialize_x(ff, Rational(1));
    values.push_back(ff.scaled(LambdaPoly(power)));
    power *= scale;
  }
  return Series::from_egf(order, values);
}

Series exp_series(bool symbolic_x, const Rational& scale, int order) {
  std::vector<XLambdaPoly> values;
  values.reserve(static_cast<std::size_t>(order) + 1);
  Rational power(1);
  for (int n = 0; n <= order; ++n) {
    const LambdaPoly c(power);
    values.push_back(symbolic_x ? XLambdaPoly::monomial(c, static_cast<std::size_t>(n)) : embed(c));
    power *= scale;
  }
  return Series::from_egf(order, values);
}

Series deg_log(int order) {
  std::vector<XLambdaPoly> values(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) values[n] = embed(shifted_lambda_product(n));
  return Series::from_egf(order, values);
}

Series log1p_series(int order) {
  std::vector<XLambdaPoly> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) c[n] = embed(Rational(n % 2 == 1 ? 1 : -1, n));
  return Series(order, std::move(c));
}

namespace {

Rational inverse_power(int m, int k) { return Rational(m).pow(-k); }

}  // namespace

Series polylog_compose(int k, const Series& inner) {
  const int order = inner.order();
  std::vector<XLambdaPoly> outer(static_cast<std::size_t>(order) + 1);
  for (int m = 1; m <= order; ++m) outer[m] = embed(inverse_power(m, k));
  return series_compose(Series(order, std::move(outer)), inner);
}

Series deg_polylog_compose(int k, const Series& inner) {
  const int order = inner.order();
  std::vector<XLambdaPoly> outer(static_cast<std::size_t>(order) + 1);
  for (int m = 1; m <= order; ++m) {
    // (-lambda)^{m-1} (1)_{m,1/lambda} = (-1)^{m-1} prod_{j=1}^{m-1} (lambda - j)
    LambdaPoly c = shifted_lambda_product(m);
    if (m % 2 == 0) c = -c;
    outer[m] = embed(c.scaled(inverse_power(m, k) / factorial(m - 1)));
  }
  return series_compose(Series(order, std::move(outer)), inner);
}

// ---------------------------------------------------------------------------

namespace {

Series stirling_kernel(StirlingKind kind, bool degenerate, int order) {
  const Series one = Series::one(order);
  if (kind == StirlingKind::first) return degenerate ? deg_log(order) : log1p_series(order);
  return (degenerate ? deg_exp(false, Rational(1), order) : exp_series(false, Rational(1), order)) - one;
}

}  // namespace

StirlingTable::StirlingTable(StirlingKind kind, bool degenerate, int n_max)
    : kind_(kind), degenerate_(degenerate), n_max_(n_max) {
  if (n_max < 0) throw IndexOutOfRange("Stirling table size must be nonnegative");
  const Series f = stirling_kernel(kind, degenerate, n_max);
  rows_.assign(static_cast<std::size_t>(n_max) + 1, {});
  for (int n = 0; n <= n_max; ++n) rows_[n].resize(static_cast<std::size_t>(n) + 1);
  Series power = Series::one(n_max);
  for (int k = 0; k <= n_max; ++k) {
    const Rational inv_kfact = Rational(1) / factorial(k);
    for (int n = k; n <= n_max; ++n) {
      rows_[n][k] = egf_coeff(power, n).constant_term().scaled(inv_kfact);
    }
    power = power * f;
  }
}

const LambdaPoly& StirlingTable::at(int n, int k) const {
  if (n < 0 || n > n_max_) {
    throw IndexOutOfRange("Stirling row " + std::to_string(n) + " outside table of size " +
                          std::to_string(n_max_));
  }
  if (k < 0 || k > n) return zero_;
  return rows_[n][k];
}

LambdaPoly stirling(StirlingKind kind, bool degenerate, int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw IndexOutOfRange("Stirling index (" + std::to_string(n) + ", " + std::to_string(k) +
                          ") outside 0 <= k <= n");
  }
  const Series f = stirling_kernel(kind, degenerate, n);
  return egf_coeff(series_pow(f, k), n).constant_term().scaled(Rational(1) / factorial(k));
}

// ---------------------------------------------------------------------------

Series classical_family_series(ClassicalFamily family, int order) {
  const Series ext = exp_series(true, Rational(1), order);
  if (family == ClassicalFamily::euler) {
    const Series den = exp_series(false, Rational(1), order) + Series::one(order);
    return series_div(Series::constant(order, embed(Rational(2))), den) * ext;
  }
  const Series den = exp_series(false, Rational(1), order + 1) - Series::one(order + 1);
  return series_div(Series::t(order + 1), den) * ext;
}

Series degenerate_family_series(ClassicalFamily family, int order) {
  const Series ext = deg_exp(true, Rational(1), order);
  if (family == ClassicalFamily::euler) {
    const Series den = deg_exp(false, Rational(1), order) + Series::one(order);
    return series_div(Series::constant(order, embed(Rational(2))), den) * ext;
  }
  const Series den = deg_exp(false, Rational(1), order + 1) - Series::one(order + 1);
  return series_div(Series::t(order + 1), den) * ext;
}

Series poly_bernoulli_series(int k, PolyBernoulliForm form, int order) {
  const int inner_order = order + 1;
  const Series one = Series::one(inner_order);
  switch (form) {
    case PolyBernoulliForm::classical: {
      const Series inner = one - exp_series(false, Rational(-1), inner_order);
      const Series den = exp_series(false, Rational(1), inner_order) - one;
      return series_div(polylog_compose(k, inner), den) * exp_series(true, Rational(1), order);
    }
    case PolyBernoulliForm::degenerate: {
      const Series inner = one - deg_exp(false, Rational(-1), inner_order);
      return series_div(deg_polylog_compose(k, inner), inner) * deg_exp(true, Rational(-1), order);
    }
    case PolyBernoulliForm::degenerate_limit: {
      const Series inner = one - exp_series(false, Rational(-1), inner_order);
      return series_div(polylog_compose(k, inner), inner) * exp_series(true, Rational(-1), order);
    }
  }
  throw Error("unknown poly-Bernoulli form");
}

// ---------------------------------------------------------------------------

SpecialSequences::SpecialSequences(int order) : order_(order) {
  if (order < 0) throw OrderExceeded("truncation order must be nonnegative");
}

std::shared_ptr<const StirlingTable> SpecialSequences::stirling_table(StirlingKind kind, bool degenerate,
                                                                      int n_max) const {
  const auto key = std::make_pair(static_cast<int>(kind), degenerate);
  {
    std::lock_guard lock(mutex_);
    auto it = stirling_cache_.find(key);
    if (it != stirling_cache_.end() && it->second->n_max() >= n_max) return it->second;
  }
  auto table = std::make_shared<const StirlingTable>(kind, degenerate, std::max(n_max, order_));
  std::lock_guard lock(mutex_);
  auto& slot = stirling_cache_[key];
  if (!slot || slot->n_max() < table->n_max()) slot = table;
  return slot;
}

LambdaPoly SpecialSequences::stirling(StirlingKind kind, bool degenerate, int n, int k) const {
  if (k < 0 || n < 0 || k > n) {
    throw IndexOutOfRange("Stirling index (" + std::to_string(n) + ", " + std::to_string(k) +
                          ") outside 0 <= k <= n");
  }
  return stirling_table(kind, degenerate, n)->at(n, k);
}

const Series& SpecialSequences::cached_series(int tag, int k, int sub) const {
  const auto key = std::make_tuple(tag, k, sub);
  {
    std::lock_guard lock(mutex_);
    auto it = series_cache_.find(key);
    if (it != series_cache_.end()) return *it->second;
  }
  std::shared_ptr<const Series> computed;
  switch (tag) {
    case 0:
      computed = std::make_shared<const Series>(classical_family_series(static_cast<ClassicalFamily>(sub), order_));
      break;
    case 1:
      computed = std::make_shared<const Series>(degenerate_family_series(static_cast<ClassicalFamily>(sub), order_));
      break;
    default:
      computed = std::make_shared<const Series>(poly_bernoulli_series(k, static_cast<PolyBernoulliForm>(sub), order_));
      break;
  }
  std::lock_guard lock(mutex_);
  return *series_cache_.try_emplace(key, std::move(computed)).first->second;
}

int SpecialSequences::max_family_index() const { return order_; }

XLambdaPoly SpecialSequences::classical_family(ClassicalFamily family, int n) const {
  return egf_coeff(cached_series(0, 0, static_cast<int>(family)), n);
}

XLambdaPoly SpecialSequences::degenerate_family(ClassicalFamily family, int n) const {
  return egf_coeff(cached_series(1, 0, static_cast<int>(family)), n);
}

XLambdaPoly SpecialSequences::poly_bernoulli(int n, int k, PolyBernoulliForm form) const {
  return egf_coeff(cached_series(2, k, static_cast<int>(form)), n);
}

}  // namespace polyeuler
