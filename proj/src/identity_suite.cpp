#include "polyeuler/identity_suite.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "polyeuler/errors.hpp"

namespace polyeuler {

std::string_view to_string(VariantClass c) {
  switch (c) {
    case VariantClass::printed:
      return "printed";
    case VariantClass::variant:
      return "variant";
    case VariantClass::oracle:
      return "oracle";
    case VariantClass::reduction:
      return "reduction";
  }
  return "unknown";
}

bool IdentityReport::must_pass_satisfied() const { return !must_pass || verdict == Verdict::pass; }

namespace {

XLambdaPoly scale_by_lambda(const XLambdaPoly& p) { return p.scaled(lambda_var()); }

/// n-th egf coefficient of a derived series cached on `f` under `name`.
XLambdaPoly memo_coeff(const Families& f, const std::string& name, int k, int n,
                       const std::function<Series()>& build) {
  return egf_coeff(f.memoized(name, k, build), n);
}

XLambdaPoly classical_euler_poly(const Families& fam, int n) {
  return fam.sequences().classical_family(ClassicalFamily::euler, n);
}

/// sum_k S(n, k) x^k, the n-th row of a Stirling table as a polynomial.
XLambdaPoly stirling_row(const Families& fam, StirlingKind kind, bool degenerate, int n) {
  const auto table = fam.sequences().stirling_table(kind, degenerate, n);
  std::vector<LambdaPoly> row;
  for (int k = 0; k <= n; ++k) row.push_back(table->at(n, k));
  return XLambdaPoly(std::move(row));
}

XLambdaPoly at_lambda_zero(const XLambdaPoly& p) { return specialize_lambda(p, Rational(0)); }

Series one_minus_exp_neg2(int order) {
  return Series::one(order) - exp_series(false, Rational(-2), order);
}

Series one_minus_deg_exp_neg2(int order) {
  return Series::one(order) - deg_exp(false, Rational(-2), order);
}

struct Builder {
  std::vector<IdentitySpec>& out;

  IdentitySpec& add(std::string id, std::string variant, VariantClass cls, IdentityDomain domain, int min_n,
                    std::string description, SideEvaluator lhs, SideEvaluator rhs) {
    IdentitySpec s;
    s.id = std::move(id);
    s.variant = std::move(variant);
    s.variant_class = cls;
    s.domain = domain;
    s.min_n = min_n;
    s.description = std::move(description);
    s.lhs = std::move(lhs);
    s.rhs = std::move(rhs);
    out.push_back(std::move(s));
    return out.back();
  }
};

constexpr auto kClassical = IdentityDomain::classical;
constexpr auto kDegenerate = IdentityDomain::degenerate;
constexpr auto kPrinted = VariantClass::printed;
constexpr auto kVariant = VariantClass::variant;
constexpr auto kOracle = VariantClass::oracle;
constexpr auto kReduction = VariantClass::reduction;

void register_classical(Builder& b) {
  b.add("L2.1", "printed", kPrinted, kClassical, 1,
        "egf coefficients of Li_k(1 - e^{-2t}) as a signed Stirling-2 sum",
        [](const Families& f, int n, int k) {
          return memo_coeff(f, "polylog-of-1-exp(-2t)", k, n,
                            [&] { return polylog_compose(k, one_minus_exp_neg2(f.order())); });
        },
        [](const Families& f, int n, int k) { return embed(lemma21_coeff(f.sequences(), n, k)); })
      .must_pass = true;

  b.add("T2.2", "printed", kPrinted, kClassical, 0,
        "E_n^(k)(x) as a triple sum over Stirling-2 numbers and B_{n-l}(x/2)",
        [](const Families& f, int n, int k) { return f.poly_euler(n, k); },
        [](const Families& f, int n, int k) { return euler_via_half_argument_bernoulli(f, n, k, false); });
  b.add("C2.3", "printed", kPrinted, kClassical, 0,
        "poly-Euler numbers as a triple sum over Stirling-2 numbers and Bernoulli numbers",
        [](const Families& f, int n, int k) { return f.poly_euler_number(n, k); },
        [](const Families& f, int n, int k) { return euler_via_half_argument_bernoulli(f, n, k, true); });
  b.add("T2.4", "printed", kPrinted, kClassical, 0,
        "E_n^(k)(x) as a double sum over Stirling-2 numbers and E_{n-m}(x)",
        [](const Families& f, int n, int k) { return f.poly_euler(n, k); },
        [](const Families& f, int n, int k) { return euler_via_classical_euler(f, n, k, false); });
  b.add("C2.5", "printed", kPrinted, kClassical, 0,
        "poly-Euler numbers as a double sum over Stirling-2 numbers and Euler numbers",
        [](const Families& f, int n, int k) { return f.poly_euler_number(n, k); },
        [](const Families& f, int n, int k) { return euler_via_classical_euler(f, n, k, true); });
  b.add("T2.6", "printed", kPrinted, kClassical, 0, "binomial expansion of E_n^(k)(x) in powers of x",
        [](const Families& f, int n, int k) { return f.poly_euler(n, k); },
        [](const Families& f, int n, int k) { return poly_euler_binomial_expansion(f, n, k); })
      .must_pass = true;
  b.add("T2.7", "printed", kPrinted, kClassical, 0, "d/dx E_n^(k)(x) = n E_{n-1}^(k)(x)",
        [](const Families& f, int n, int k) { return f.poly_euler(n, k).derivative(); },
        [](const Families& f, int n, int k) { return poly_euler_derivative_rhs(f, n, k); })
      .must_pass = true;

  const auto t28_lhs = [](const Families& f, int n, int k) { return f.poly_euler(n, k); };
  b.add("T2.8", "printed", kPrinted, kClassical, 0,
        "E_n^(k)(x) via falling factorials and S_2(m, l), m <= l", t28_lhs,
        [](const Families& f, int n, int k) {
          return falling_factorial_stirling_expansion(f, n, k, false, StirlingIndexOrder::printed);
        });
  b.add("T2.8", "transposed-stirling", kVariant, kClassical, 0,
        "E_n^(k)(x) via falling factorials and S_2(l, m)", t28_lhs, [](const Families& f, int n, int k) {
          return falling_factorial_stirling_expansion(f, n, k, false, StirlingIndexOrder::transposed);
        });

  b.add("T2.9", "printed", kPrinted, kClassical, 1,
        "n E_{n-1}^(k)(x+1) + n E_{n-1}^(k)(x) = 2^n (beta_n^(k)(x+2) - beta_n^(k)(x))", unit_shift_sum,
        [](const Families& f, int n, int k) { return poly_bernoulli_difference(f, n, k, BernoulliArgument::printed); });
  b.add("T2.9", "rescaled-argument", kVariant, kClassical, 1,
        "n E_{n-1}^(k)(x+1) + n E_{n-1}^(k)(x) = 2^n (beta_n^(k)((x+2)/2) - beta_n^(k)(x/2))", unit_shift_sum,
        [](const Families& f, int n, int k) {
          return poly_bernoulli_difference(f, n, k, BernoulliArgument::rescaled);
        });

  auto& rk1 = b.add("R-k1-classical", "printed", kReduction, kClassical, 0,
                    "E_n^(1)(x) equals the Euler polynomial E_n(x)",
                    [](const Families& f, int n, int k) { return f.poly_euler(n, k); },
                    [](const Families& f, int n, int) { return classical_euler_poly(f, n); });
  rk1.fixed_k = std::vector<int>{1};
  rk1.must_pass = true;

  const auto pb_lhs = [](const Families& f, int n, int k) {
    return specialize_x(f.sequences().poly_bernoulli(n, k, PolyBernoulliForm::classical), Rational(0));
  };
  const auto bernoulli_number = [](const Families& f, int n) {
    return specialize_x(f.sequences().classical_family(ClassicalFamily::bernoulli, n), Rational(0));
  };
  auto& pb1 = b.add("PB-k1", "printed", kPrinted, kClassical, 0, "poly-Bernoulli numbers at k = 1 equal -B_n",
                    pb_lhs, [bernoulli_number](const Families& f, int n, int) { return -bernoulli_number(f, n); });
  pb1.fixed_k = std::vector<int>{1};
  auto& pb2 = b.add("PB-k1", "alternating-sign", kVariant, kClassical, 0,
                    "poly-Bernoulli numbers at k = 1 equal (-1)^n B_n", pb_lhs,
                    [bernoulli_number](const Families& f, int n, int) {
                      const XLambdaPoly bn = bernoulli_number(f, n);
                      return n % 2 == 0 ? bn : -bn;
                    });
  pb2.fixed_k = std::vector<int>{1};
  auto& pb3 = b.add("PB-k1", "unsigned", kVariant, kClassical, 0, "poly-Bernoulli numbers at k = 1 equal B_n",
                    pb_lhs, [bernoulli_number](const Families& f, int n, int) { return bernoulli_number(f, n); });
  pb3.fixed_k = std::vector<int>{1};
}

void register_degenerate(Builder& b) {
  b.add("T3.1", "printed", kPrinted, kDegenerate, 0,
        "E_{n,lambda}^(k)(x) as a binomial convolution with (x)_{l,lambda}",
        [](const Families& f, int n, int k) { return f.deg_poly_euler(n, k); },
        [](const Families& f, int n, int k) { return deg_poly_euler_binomial_expansion(f, n, k); })
      .must_pass = true;

  const auto t32_lhs = [](const Families& f, int n, int k) { return f.deg_poly_euler(n, k); };
  b.add("T3.2", "printed", kPrinted, kDegenerate, 0,
        "E_{n,lambda}^(k)(x) via falling factorials and S_{2,lambda}(m, l), m <= l", t32_lhs,
        [](const Families& f, int n, int k) {
          return falling_factorial_stirling_expansion(f, n, k, true, StirlingIndexOrder::printed);
        });
  b.add("T3.2", "transposed-stirling", kVariant, kDegenerate, 0,
        "E_{n,lambda}^(k)(x) via falling factorials and S_{2,lambda}(l, m)", t32_lhs,
        [](const Families& f, int n, int k) {
          return falling_factorial_stirling_expansion(f, n, k, true, StirlingIndexOrder::transposed);
        });

  auto& t33 = b.add("T3.3", "printed", kPrinted, kDegenerate, 1,
                    "E_{n-1,lambda}^(k)(1) + E_{n-1,lambda}^(k) as a degenerate Stirling-2 sum",
                    deg_unit_value_sum, deg_unit_value_closed_form);
  t33.must_pass = true;
  t33.must_pass_n_max = 1;

  b.add("T3.4", "printed", kPrinted, kDegenerate, 1,
        "substitution identity: (1)_{i,lambda} convolution of E_{m,lambda}^(k) equals the "
        "l_{k,lambda} convolution of E_{l,lambda}",
        stirling2_substitution_lhs, stirling2_substitution_rhs);
  b.add("T3.4", "oracle-lhs-series", kOracle, kDegenerate, 1,
        "left printed sum equals the egf coefficients of u sum E_m^(k) u^m/m!, u = 1 - e_lambda(-2t)",
        stirling2_substitution_lhs, [](const Families& f, int n, int k) {
          return memo_coeff(f, "stirling2-substitution-lhs", k, n,
                            [&] { return stirling2_substitution_lhs_series(f, k, f.order()); });
        });
  b.add("T3.4", "oracle-rhs-series", kOracle, kDegenerate, 1,
        "right printed sum equals the egf coefficients of l_{k,lambda}(t)/(e_lambda(u)+1), u = 1 - e_lambda(-2t)",
        stirling2_substitution_rhs, [](const Families& f, int n, int k) {
          return memo_coeff(f, "stirling2-substitution-rhs", k, n,
                            [&] { return stirling2_substitution_rhs_series(f, k, f.order()); });
        });
  b.add("T3.4", "series-identity", kOracle, kDegenerate, 1,
        "u sum E_m^(k) u^m/m! equals l_{k,lambda}(t)/(e_lambda(u)+1) as series, u = 1 - e_lambda(-2t)",
        [](const Families& f, int n, int k) {
          return memo_coeff(f, "stirling2-substitution-lhs", k, n,
                            [&] { return stirling2_substitution_lhs_series(f, k, f.order()); });
        },
        [](const Families& f, int n, int k) {
          return memo_coeff(f, "stirling2-substitution-rhs", k, n,
                            [&] { return stirling2_substitution_rhs_series(f, k, f.order()); });
        });

  b.add("T3.4", "inverse-substitution", kOracle, kDegenerate, 1,
        "w sum E_m^(k) w^m/m! equals l_{k,lambda}(t)/(e_lambda(w)+1) as series, w = -log_lambda(1-t)/2",
        [](const Families& f, int n, int k) {
          return egf_coeff(f.memoized("inverse-substitution-lhs", k, [&] {
            const Series w = series_compose(deg_log(f.order()), -Series::t(f.order())).scaled(Rational(-1, 2));
            return w * series_compose(f.deg_poly_euler_number_gf(k), w);
          }), n);
        },
        [](const Families& f, int n, int k) {
          return egf_coeff(f.memoized("inverse-substitution-rhs", k, [&] {
            const int order = f.order();
            const Series w = series_compose(deg_log(order), -Series::t(order)).scaled(Rational(-1, 2));
            const Series e_of_w = series_compose(deg_exp(false, Rational(1), order), w);
            return series_div(deg_polylog_compose(k, Series::t(order)), e_of_w + Series::one(order));
          }), n);
        });

  // The suspected typo sits in the printed left sum, so the registered
  // sides are swapped: lhs is the E_{l,lambda} sum shared by both entries.
  b.add("T3.5", "printed", kPrinted, kDegenerate, 1,
        "substitution identity with S_{1,lambda} (both sides multiplied by lambda)",
        stirling1_substitution_rhs_scaled,
        [](const Families& f, int n, int k) { return stirling1_substitution_lhs_scaled(f, n, k, true); });
  b.add("T3.5", "corrected-range", kVariant, kDegenerate, 1,
        "substitution identity with S_{1,lambda}, E^(k) sum over m <= n-1 (both sides multiplied by lambda)",
        stirling1_substitution_rhs_scaled,
        [](const Families& f, int n, int k) { return stirling1_substitution_lhs_scaled(f, n, k, false); });
  b.add("T3.5", "oracle-lhs-series", kOracle, kDegenerate, 1,
        "left printed sum equals the egf coefficients of s sum E_l^(k) s^l/l!, s = -log_lambda(1+t)/2 "
        "(times lambda)",
        [](const Families& f, int n, int k) { return stirling1_substitution_lhs_scaled(f, n, k, true); },
        [](const Families& f, int n, int k) {
          const Series& d = f.memoized("stirling1-substitution-lhs", k,
                                       [&] { return stirling1_substitution_lhs_series(f, k, f.order()); });
          return scale_by_lambda(egf_coeff(d, n));
        });
  b.add("T3.5", "oracle-rhs-series", kOracle, kDegenerate, 1,
        "right printed sum equals the egf coefficients of l_{k,lambda}(-t)/(e_lambda(s)+1), "
        "s = -log_lambda(1+t)/2 (times lambda)",
        stirling1_substitution_rhs_scaled, [](const Families& f, int n, int k) {
          const Series& c = f.memoized("stirling1-substitution-rhs", k,
                                       [&] { return stirling1_substitution_rhs_series(f, k, f.order()); });
          return scale_by_lambda(egf_coeff(c, n));
        });
  b.add("T3.5", "series-identity", kOracle, kDegenerate, 1,
        "s sum E_l^(k) s^l/l! equals l_{k,lambda}(-t)/(e_lambda(s)+1) as series, s = -log_lambda(1+t)/2",
        [](const Families& f, int n, int k) {
          return egf_coeff(f.memoized("stirling1-substitution-lhs", k,
                                      [&] { return stirling1_substitution_lhs_series(f, k, f.order()); }),
                           n);
        },
        [](const Families& f, int n, int k) {
          return egf_coeff(f.memoized("stirling1-substitution-rhs", k,
                                      [&] { return stirling1_substitution_rhs_series(f, k, f.order()); }),
                           n);
        });

  const auto t36_lhs = [](const Families& f, int n, int k) { return f.deg_poly_euler_number(n, k); };
  b.add("T3.6", "printed", kPrinted, kDegenerate, 0,
        "E_{n,lambda}^(k) via degenerate poly-Bernoulli and degenerate Euler numbers, sign (-1)^l", t36_lhs,
        [](const Families& f, int n, int k) {
          return deg_poly_euler_via_poly_bernoulli(f, n, k, PolyBernoulliSign::printed);
        });
  b.add("T3.6", "sign-corrected", kVariant, kDegenerate, 0,
        "E_{n,lambda}^(k) via degenerate poly-Bernoulli and degenerate Euler numbers, sign (-1)^m", t36_lhs,
        [](const Families& f, int n, int k) {
          return deg_poly_euler_via_poly_bernoulli(f, n, k, PolyBernoulliSign::corrected);
        });

  auto& rk1 = b.add("R-k1-degenerate", "printed", kReduction, kDegenerate, 0,
                    "E_{n,lambda}^(1)(x) equals the degenerate Euler polynomial E_{n,lambda}(x)",
                    [](const Families& f, int n, int k) { return f.deg_poly_euler(n, k); },
                    [](const Families& f, int n, int) {
                      return f.sequences().degenerate_family(ClassicalFamily::euler, n);
                    });
  rk1.fixed_k = std::vector<int>{1};
  rk1.must_pass = true;
  auto& rk1s = b.add("R-k1-degenerate", "polylog-series", kReduction, kDegenerate, 0,
                     "l_{1,lambda}(1 - e_lambda(-2t)) = 2t",
                     [](const Families& f, int n, int k) {
                       return memo_coeff(f, "deg-polylog-of-1-deg-exp(-2t)", k, n,
                                         [&] { return deg_polylog_compose(k, one_minus_deg_exp_neg2(f.order())); });
                     },
                     [](const Families&, int n, int) { return embed(Rational(n == 1 ? 2 : 0)); });
  rk1s.fixed_k = std::vector<int>{1};
  rk1s.must_pass = true;

  const auto limit = [&b](std::string variant, std::string description, SideEvaluator lhs, SideEvaluator rhs,
                          bool k_independent) {
    auto& s = b.add("R-lambda0", std::move(variant), kReduction, kDegenerate, 0, std::move(description),
                    std::move(lhs), std::move(rhs));
    s.must_pass = true;
    s.k_independent = k_independent;
  };
  limit("stirling1", "S_{1,lambda}(n, .) at lambda = 0 equals S_1(n, .)",
        [](const Families& f, int n, int) { return at_lambda_zero(stirling_row(f, StirlingKind::first, true, n)); },
        [](const Families& f, int n, int) { return stirling_row(f, StirlingKind::first, false, n); }, true);
  limit("stirling2", "S_{2,lambda}(n, .) at lambda = 0 equals S_2(n, .)",
        [](const Families& f, int n, int) { return at_lambda_zero(stirling_row(f, StirlingKind::second, true, n)); },
        [](const Families& f, int n, int) { return stirling_row(f, StirlingKind::second, false, n); }, true);
  limit("euler", "E_{n,lambda}(x) at lambda = 0 equals E_n(x)",
        [](const Families& f, int n, int) {
          return at_lambda_zero(f.sequences().degenerate_family(ClassicalFamily::euler, n));
        },
        [](const Families& f, int n, int) { return f.sequences().classical_family(ClassicalFamily::euler, n); },
        true);
  limit("bernoulli", "B_{n,lambda}(x) at lambda = 0 equals B_n(x)",
        [](const Families& f, int n, int) {
          return at_lambda_zero(f.sequences().degenerate_family(ClassicalFamily::bernoulli, n));
        },
        [](const Families& f, int n, int) {
          return f.sequences().classical_family(ClassicalFamily::bernoulli, n);
        },
        true);
  limit("poly-bernoulli",
        "beta_{n,lambda}^(k)(x) at lambda = 0 equals the classical series Li_k(1-e^{-t})/(1-e^{-t}) e^{-xt}",
        [](const Families& f, int n, int k) {
          return at_lambda_zero(f.sequences().poly_bernoulli(n, k, PolyBernoulliForm::degenerate));
        },
        [](const Families& f, int n, int k) {
          return f.sequences().poly_bernoulli(n, k, PolyBernoulliForm::degenerate_limit);
        },
        false);
  limit("poly-euler", "E_{n,lambda}^(k)(x) at lambda = 0 equals E_n^(k)(x)",
        [](const Families& f, int n, int k) { return at_lambda_zero(f.deg_poly_euler(n, k)); },
        [](const Families& f, int n, int k) { return f.poly_euler(n, k); }, false);
}

}  // namespace

std::vector<IdentitySpec> register_builtin() {
  std::vector<IdentitySpec> out;
  Builder b{out};
  register_classical(b);
  register_degenerate(b);
  return out;
}

std::vector<std::string> numbered_result_ids() {
  return {"L2.1", "T2.2", "C2.3", "T2.4", "C2.5", "T2.6", "T2.7", "T2.8",
          "T2.9", "T3.1", "T3.2", "T3.3", "T3.4", "T3.5", "T3.6"};
}

IdentityReport check_identity(const Families& fam, const IdentitySpec& spec, int n_max,
                              const std::vector<int>& k_set) {
  if (n_max + 2 > fam.order()) {
    throw OrderExceeded("n_max " + std::to_string(n_max) + " needs truncation order at least " +
                        std::to_string(n_max + 2) + ", configured order is " + std::to_string(fam.order()));
  }
  const auto start = std::chrono::steady_clock::now();

  IdentityReport report;
  report.id = spec.id;
  report.variant = spec.variant;
  report.variant_class = spec.variant_class;
  report.must_pass = spec.must_pass;
  report.checked_range.n_min = std::max(spec.min_n, 0);
  report.checked_range.n_max = n_max;
  report.checked_range.k_independent = spec.k_independent;
  if (!spec.k_independent) {
    std::vector<int> ks = spec.fixed_k ? *spec.fixed_k : k_set;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    report.checked_range.k = std::move(ks);
  }
  const std::vector<int> loop_k = spec.k_independent ? std::vector<int>{0} : report.checked_range.k;

  for (int n = report.checked_range.n_min; n <= n_max && !report.first_failure; ++n) {
    for (int k : loop_k) {
      XLambdaPoly diff = spec.lhs(fam, n, k) - spec.rhs(fam, n, k);
      if (!diff.is_zero()) {
        report.first_failure = IdentityFailure{n, k, std::move(diff)};
        break;
      }
    }
  }
  report.verdict = report.first_failure ? Verdict::fail : Verdict::pass;
  if (report.first_failure && spec.must_pass_n_max && report.first_failure->n > *spec.must_pass_n_max) {
    // Failure lies outside the range the must-pass contract covers.
    report.must_pass = false;
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    ++s.total;
    const bool ok = r.verdict == Verdict::pass;
    ok ? ++s.passed : ++s.failed;
    SuiteSummary::ClassCount* cc = nullptr;
    switch (r.variant_class) {
      case VariantClass::printed:
        cc = &s.printed;
        break;
      case VariantClass::variant:
        cc = &s.variant;
        break;
      case VariantClass::oracle:
        cc = &s.oracle;
        break;
      case VariantClass::reduction:
        cc = &s.reduction;
        break;
    }
    ok ? ++cc->passed : ++cc->failed;
    if (!ok) {
      r.must_pass ? ++s.must_pass_failed : ++s.discrepancy_count;
    }
  }
  return s;
}

SuiteResult run_suite(const Families& fam, const SuiteOptions& options) {
  const std::vector<IdentitySpec> registry = register_builtin();
  std::set<std::string> known;
  for (const auto& s : registry) known.insert(s.id);
  for (const auto& id : options.ids) {
    if (!known.contains(id)) throw UnknownIdentity("unknown identity '" + id + "'");
  }
  const std::set<std::string> wanted(options.ids.begin(), options.ids.end());

  SuiteResult result;
  for (const auto& spec : registry) {
    if (!wanted.empty() && !wanted.contains(spec.id)) continue;
    if (options.variants == VariantSelection::printed_only && spec.variant_class != VariantClass::printed &&
        spec.variant_class != VariantClass::reduction) {
      continue;
    }
    const int n_max = options.n_max.value_or(spec.default_n_max());
    result.reports.push_back(check_identity(fam, spec, n_max, options.k_set));
  }
  std::stable_sort(result.reports.begin(), result.reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.id, a.variant) < std::tie(b.id, b.variant);
  });
  result.summary = summarize(result.reports);
  return result;
}

}  // namespace polyeuler
