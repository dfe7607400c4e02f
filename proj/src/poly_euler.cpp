#include "polyeuler/poly_euler.hpp"

#include <string>
#include <vector>

#include "polyeuler/errors.hpp"

namespace polyeuler {

namespace {

Rational pow2(int e) { return Rational(2).pow(e); }
Rational sign(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

XLambdaPoly scale(const XLambdaPoly& p, const Rational& c) { return p.scaled(LambdaPoly(c)); }
XLambdaPoly scale(const XLambdaPoly& p, const LambdaPoly& c) { return p.scaled(c); }

/// a x + b
XLambdaPoly linear_x(const Rational& a, const Rational& b) {
  return XLambdaPoly({LambdaPoly(b), LambdaPoly(a)});
}

/// (lambda)_j = prod_{i=0}^{j-1} (lambda - i) = lambda^j (1)_{j,1/lambda}.
LambdaPoly lambda_falling_factorial(int j) {
  LambdaPoly r(Rational(1));
  for (int i = 0; i < j; ++i) r = r * LambdaPoly({Rational(-i), Rational(1)});
  return r;
}

void require_n(int n, int min_n, const char* what) {
  if (n < min_n) {
    throw IndexOutOfRange(std::string(what) + " is stated for n >= " + std::to_string(min_n) +
                          ", got n = " + std::to_string(n));
  }
}

}  // namespace

void FamilySpec::validate() const {
  if (n_max < 0) throw OrderExceeded("n_max must be nonnegative");
  if (n_max > order) {
    throw OrderExceeded("n_max " + std::to_string(n_max) + " exceeds truncation order " +
                        std::to_string(order));
  }
}

Series poly_euler_series(int k, int order) {
  const int io = order + 1;
  const Series one = Series::one(io);
  const Series inner = one - exp_series(false, Rational(-2), io);
  const Series den = Series::t(io) * (exp_series(false, Rational(1), io) + one);
  return series_div(polylog_compose(k, inner), den) * exp_series(true, Rational(1), order);
}

Series deg_poly_euler_series(int k, int order) {
  const int io = order + 1;
  const Series one = Series::one(io);
  const Series inner = one - deg_exp(false, Rational(-2), io);
  const Series den = Series::t(io) * (deg_exp(false, Rational(1), io) + one);
  return series_div(deg_polylog_compose(k, inner), den) * deg_exp(true, Rational(1), order);
}

Families::Families(int order) : sequences_(order) {}

const Series& Families::cached(FamilyKind family, int k) const {
  const auto key = std::make_pair(static_cast<int>(family), k);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  auto computed = std::make_shared<const Series>(family == FamilyKind::poly_euler
                                                     ? poly_euler_series(k, order())
                                                     : deg_poly_euler_series(k, order()));
  std::lock_guard lock(mutex_);
  return *cache_.try_emplace(key, std::move(computed)).first->second;
}

const Series& Families::memoized(const std::string& name, int k, const std::function<Series()>& compute) const {
  const auto key = std::make_pair(name, k);
  {
    std::lock_guard lock(mutex_);
    auto it = derived_.find(key);
    if (it != derived_.end()) return *it->second;
  }
  auto computed = std::make_shared<const Series>(compute());
  std::lock_guard lock(mutex_);
  return *derived_.try_emplace(key, std::move(computed)).first->second;
}

const Series& Families::poly_euler_gf(int k) const { return cached(FamilyKind::poly_euler, k); }
const Series& Families::deg_poly_euler_gf(int k) const { return cached(FamilyKind::deg_poly_euler, k); }

XLambdaPoly Families::poly_euler(int n, int k) const { return egf_coeff(poly_euler_gf(k), n); }
XLambdaPoly Families::deg_poly_euler(int n, int k) const { return egf_coeff(deg_poly_euler_gf(k), n); }

XLambdaPoly Families::poly_euler_number(int n, int k) const {
  return specialize_x(poly_euler(n, k), Rational(0));
}

XLambdaPoly Families::deg_poly_euler_number(int n, int k) const {
  return specialize_x(deg_poly_euler(n, k), Rational(0));
}

Series Families::deg_poly_euler_number_gf(int k) const {
  const Series& gf = deg_poly_euler_gf(k);
  std::vector<XLambdaPoly> c;
  c.reserve(gf.coeffs().size());
  for (const auto& p : gf.coeffs()) c.push_back(specialize_x(p, Rational(0)));
  return Series(gf.order(), std::move(c));
}

Rational lemma21_coeff(const SpecialSequences& seq, int n, int k) {
  require_n(n, 1, "the polylogarithm coefficient formula");
  const auto s2 = seq.stirling_table(StirlingKind::second, false, n);
  Rational sum(0);
  for (int m = 1; m <= n; ++m) {
    sum += sign(n + m) * factorial(m) * Rational(m).pow(-k) * s2->at(n, m).constant_term();
  }
  return pow2(n) * sum;
}

// ---------------------------------------------------------------------------

XLambdaPoly euler_via_half_argument_bernoulli(const Families& fam, int n, int k, bool at_zero) {
  const auto& seq = fam.sequences();
  const auto s2 = seq.stirling_table(StirlingKind::second, false, n + 1);
  const XLambdaPoly half_x = linear_x(Rational(1, 2), Rational(0));
  XLambdaPoly total;
  for (int l = 0; l <= n; ++l) {
    Rational inner(0);
    for (int m = 0; m <= l; ++m) {
      for (int j = 1; j <= m + 1; ++j) {
        inner += binomial(l, m) * pow2(m) * sign(m + 1 + j) * factorial(j) /
                 (Rational(l - m + 1) * Rational(j).pow(k) * Rational(m + 1)) *
                 s2->at(m + 1, j).constant_term();
      }
    }
    const XLambdaPoly b = seq.classical_family(ClassicalFamily::bernoulli, n - l);
    const XLambdaPoly b_arg = at_zero ? specialize_x(b, Rational(0)) : substitute_x(b, half_x);
    total += scale(b_arg, binomial(n, l) * pow2(n - l) * inner);
  }
  return total;
}

XLambdaPoly euler_via_classical_euler(const Families& fam, int n, int k, bool at_zero) {
  const auto& seq = fam.sequences();
  const auto s2 = seq.stirling_table(StirlingKind::second, false, n + 1);
  XLambdaPoly total;
  for (int m = 0; m <= n; ++m) {
    Rational inner(0);
    for (int l = 1; l <= m + 1; ++l) {
      inner += pow2(m) * sign(m + 1 + l) * factorial(l) / (Rational(l).pow(k) * Rational(m + 1)) *
               s2->at(m + 1, l).constant_term();
    }
    XLambdaPoly e = seq.classical_family(ClassicalFamily::euler, n - m);
    if (at_zero) e = specialize_x(e, Rational(0));
    total += scale(e, binomial(n, m) * inner);
  }
  return total;
}

XLambdaPoly poly_euler_binomial_expansion(const Families& fam, int n, int k) {
  XLambdaPoly total;
  for (int l = 0; l <= n; ++l) {
    const LambdaPoly e = fam.poly_euler_number(n - l, k).constant_term();
    total += XLambdaPoly::monomial(e.scaled(binomial(n, l)), static_cast<std::size_t>(l));
  }
  return total;
}

XLambdaPoly poly_euler_derivative_rhs(const Families& fam, int n, int k) {
  if (n == 0) return {};
  return scale(fam.poly_euler(n - 1, k), Rational(n));
}

XLambdaPoly falling_factorial_stirling_expansion(const Families& fam, int n, int k, bool degenerate,
                                                 StirlingIndexOrder order) {
  const auto s2 = fam.sequences().stirling_table(StirlingKind::second, degenerate, n);
  XLambdaPoly total;
  for (int l = 0; l <= n; ++l) {
    const XLambdaPoly e = degenerate ? fam.deg_poly_euler_number(n - l, k) : fam.poly_euler_number(n - l, k);
    XLambdaPoly inner;
    for (int m = 0; m <= l; ++m) {
      const LambdaPoly& s = order == StirlingIndexOrder::printed ? s2->at(m, l) : s2->at(l, m);
      if (s.is_zero()) continue;
      inner += scale(falling_factorial(m), s);
    }
    total += scale(inner * e, binomial(n, l));
  }
  return total;
}

XLambdaPoly unit_shift_sum(const Families& fam, int n, int k) {
  require_n(n, 1, "the shifted-argument relation");
  const XLambdaPoly e = fam.poly_euler(n - 1, k);
  return scale(substitute_x(e, linear_x(Rational(1), Rational(1))) + e, Rational(n));
}

XLambdaPoly poly_bernoulli_difference(const Families& fam, int n, int k, BernoulliArgument reading) {
  const XLambdaPoly beta = fam.sequences().poly_bernoulli(n, k, PolyBernoulliForm::classical);
  const bool printed = reading == BernoulliArgument::printed;
  const XLambdaPoly upper = printed ? linear_x(Rational(1), Rational(2)) : linear_x(Rational(1, 2), Rational(1));
  const XLambdaPoly lower = printed ? x_var() : linear_x(Rational(1, 2), Rational(0));
  return scale(substitute_x(beta, upper) - substitute_x(beta, lower), pow2(n));
}

XLambdaPoly deg_poly_euler_binomial_expansion(const Families& fam, int n, int k) {
  XLambdaPoly total;
  for (int l = 0; l <= n; ++l) {
    const LambdaPoly e = fam.deg_poly_euler_number(n - l, k).constant_term();
    total += scale(falling_factorial_deg(l), e.scaled(binomial(n, l)));
  }
  return total;
}

XLambdaPoly deg_unit_value_sum(const Families& fam, int n, int k) {
  require_n(n, 1, "the unit-value relation");
  const XLambdaPoly e = fam.deg_poly_euler(n - 1, k);
  return specialize_x(e, Rational(1)) + specialize_x(e, Rational(0));
}

XLambdaPoly deg_unit_value_closed_form(const Families& fam, int n, int k) {
  require_n(n, 1, "the unit-value relation");
  const auto s2 = fam.sequences().stirling_table(StirlingKind::second, true, n);
  LambdaPoly sum;
  for (int l = 1; l <= n; ++l) {
    sum += (shifted_lambda_product(l) * s2->at(n, l)).scaled(sign(n - 1) * Rational(l).pow(1 - k));
  }
  return embed(sum.scaled(pow2(n) / Rational(n)));
}

XLambdaPoly stirling2_substitution_lhs(const Families& fam, int n, int k) {
  const auto s2 = fam.sequences().stirling_table(StirlingKind::second, true, n);
  LambdaPoly sum;
  for (int i = 1; i <= n; ++i) {
    for (int m = 0; m <= n - i; ++m) {
      const LambdaPoly e = fam.deg_poly_euler_number(m, k).constant_term();
      sum += (unit_falling_factorial_deg(i) * s2->at(n - i, m) * e)
                 .scaled(binomial(n, i) * pow2(n) * sign(m + n + 1));
    }
  }
  return embed(sum);
}

XLambdaPoly stirling2_substitution_rhs(const Families& fam, int n, int k) {
  const auto& seq = fam.sequences();
  const auto s2 = seq.stirling_table(StirlingKind::second, true, n);
  LambdaPoly sum;
  for (int m = 1; m <= n; ++m) {
    for (int l = 0; l <= n - m; ++l) {
      const LambdaPoly e = seq.degenerate_family(ClassicalFamily::euler, l).constant_term();
      sum += (shifted_lambda_product(m) * s2->at(n - m, l) * e)
                 .scaled(binomial(n, m) * pow2(n - m - 1) * sign(l + n - 1) * Rational(m).pow(1 - k));
    }
  }
  return embed(sum);
}

XLambdaPoly stirling1_substitution_lhs_scaled(const Families& fam, int n, int k, bool include_top_term) {
  const auto s1 = fam.sequences().stirling_table(StirlingKind::first, true, n);
  LambdaPoly sum;
  const int m_max = include_top_term ? n : n - 1;
  for (int m = 0; m <= m_max; ++m) {
    for (int l = 0; l <= m; ++l) {
      const LambdaPoly e = fam.deg_poly_euler_number(l, k).constant_term();
      sum += (lambda_falling_factorial(n - m) * s1->at(m, l) * e)
                 .scaled(binomial(n, m) * sign(l + 1) * pow2(-l - 1));
    }
  }
  return embed(sum);
}

XLambdaPoly stirling1_substitution_rhs_scaled(const Families& fam, int n, int k) {
  const auto& seq = fam.sequences();
  const auto s1 = seq.stirling_table(StirlingKind::first, true, n);
  LambdaPoly sum;
  for (int m = 1; m <= n; ++m) {
    for (int l = 0; l <= n - m; ++l) {
      const LambdaPoly e = seq.degenerate_family(ClassicalFamily::euler, l).constant_term();
      sum += (shifted_lambda_product(m) * s1->at(n - m, l) * e)
                 .scaled(binomial(n, m) * sign(l - 1) * pow2(-l - 1) * Rational(m).pow(1 - k));
    }
  }
  return embed(sum * lambda_var());
}

XLambdaPoly deg_poly_euler_via_poly_bernoulli(const Families& fam, int n, int k, PolyBernoulliSign sign_reading) {
  const auto& seq = fam.sequences();
  LambdaPoly sum;
  for (int l = 0; l <= n; ++l) {
    const LambdaPoly e = seq.degenerate_family(ClassicalFamily::euler, n - l).constant_term();
    for (int m = 0; m <= l; ++m) {
      const LambdaPoly beta =
          specialize_x(seq.poly_bernoulli(l - m, k, PolyBernoulliForm::degenerate), Rational(0)).constant_term();
      const Rational s = sign_reading == PolyBernoulliSign::printed ? sign(l) : sign(m);
      sum += (unit_falling_factorial_deg(m + 1) * beta * e)
                 .scaled(binomial(n, l) * binomial(l, m) * s * pow2(l) / Rational(m + 1));
    }
  }
  return embed(sum);
}

// ---------------------------------------------------------------------------

Series stirling2_substitution_lhs_series(const Families& fam, int k, int order) {
  const Series u = Series::one(order) - deg_exp(false, Rational(-2), order);
  return u * series_compose(fam.deg_poly_euler_number_gf(k), u);
}

Series stirling2_substitution_rhs_series(const Families& /*fam*/, int k, int order) {
  const Series u = Series::one(order) - deg_exp(false, Rational(-2), order);
  const Series e_of_u = series_compose(deg_exp(false, Rational(1), order), u);
  return series_div(deg_polylog_compose(k, Series::t(order)), e_of_u + Series::one(order));
}

namespace {

Series half_negative_deg_log(int order) { return deg_log(order).scaled(Rational(-1, 2)); }

}  // namespace

Series stirling1_substitution_lhs_series(const Families& fam, int k, int order) {
  const Series s = half_negative_deg_log(order);
  return s * series_compose(fam.deg_poly_euler_number_gf(k), s);
}

Series stirling1_substitution_rhs_series(const Families& /*fam*/, int k, int order) {
  const Series s = half_negative_deg_log(order);
  const Series e_of_s = series_compose(deg_exp(false, Rational(1), order), s);
  return series_div(deg_polylog_compose(k, -Series::t(order)), e_of_s + Series::one(order));
}

// ---------------------------------------------------------------------------

XLambdaPoly closed_form_rhs(const Families& fam, std::string_view id, int n, int k) {
  if (id == "L2.1") return embed(lemma21_coeff(fam.sequences(), n, k));
  if (id == "T2.2") return euler_via_half_argument_bernoulli(fam, n, k, false);
  if (id == "C2.3") return euler_via_half_argument_bernoulli(fam, n, k, true);
  if (id == "T2.4") return euler_via_classical_euler(fam, n, k, false);
  if (id == "C2.5") return euler_via_classical_euler(fam, n, k, true);
  if (id == "T2.6") return poly_euler_binomial_expansion(fam, n, k);
  if (id == "T2.7") return poly_euler_derivative_rhs(fam, n, k);
  if (id == "T2.8") return falling_factorial_stirling_expansion(fam, n, k, false, StirlingIndexOrder::printed);
  if (id == "T2.9") return poly_bernoulli_difference(fam, n, k, BernoulliArgument::printed);
  if (id == "T3.1") return deg_poly_euler_binomial_expansion(fam, n, k);
  if (id == "T3.2") return falling_factorial_stirling_expansion(fam, n, k, true, StirlingIndexOrder::printed);
  if (id == "T3.3") return deg_unit_value_closed_form(fam, n, k);
  if (id == "T3.4") return stirling2_substitution_rhs(fam, n, k);
  if (id == "T3.5") return stirling1_substitution_rhs_scaled(fam, n, k);
  if (id == "T3.6") return deg_poly_euler_via_poly_bernoulli(fam, n, k, PolyBernoulliSign::printed);
  throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

}  // namespace polyeuler
