#include <random>

#include <gtest/gtest.h>

#include "polyeuler/errors.hpp"
#include "polyeuler/series.hpp"
#include "polyeuler/special_sequences.hpp"

using namespace polyeuler;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  return Rational(num(rng), den(rng));
}

XLambdaPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<LambdaPoly> xs;
  for (int i = deg(rng); i >= 0; --i) {
    std::vector<Rational> ls;
    for (int j = deg(rng); j >= 0; --j) ls.push_back(random_rational(rng));
    xs.emplace_back(std::move(ls));
  }
  return XLambdaPoly(std::move(xs));
}

Series random_series(std::mt19937& rng, int order) {
  std::vector<XLambdaPoly> c;
  for (int i = 0; i <= order; ++i) c.push_back(random_poly(rng));
  return Series(order, std::move(c));
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(-3, -6).to_fraction_string(), "1/2");
  EXPECT_EQ(Rational(3, -6).to_fraction_string(), "-1/2");
  EXPECT_EQ(Rational(3).to_fraction_string(), "3/1");
  EXPECT_EQ(Rational(0, 5).to_fraction_string(), "0/1");
  EXPECT_EQ(Rational(3).to_string(), "3");
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
}

TEST(Rational, BigValuesStayExact) {
  Rational a = Rational(1, 3).pow(60);
  EXPECT_EQ(a * Rational(3).pow(60), Rational(1));
  EXPECT_EQ(factorial(25).to_string(), "15511210043330985984000000");
  EXPECT_EQ(binomial(50, 25).to_string(), "126410606437752");
  EXPECT_EQ(binomial(5, 7), Rational(0));
}

TEST(Rational, Errors) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("0.5"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Polynomial, RingAxioms) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const XLambdaPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * embed(Rational(1)), a);
    EXPECT_TRUE((a * XLambdaPoly()).is_zero());
  }
}

TEST(Polynomial, CanonicalTrimming) {
  const XLambdaPoly p = x_var() - x_var();
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), -1);
  EXPECT_EQ(XLambdaPoly({LambdaPoly(), LambdaPoly()}), XLambdaPoly());
  EXPECT_EQ(lambda_degree(embed(lambda_var() * lambda_var()) * x_var()), 2);
}

TEST(Polynomial, ComposeAgreesWithEvaluation) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const XLambdaPoly p = random_poly(rng), q = random_poly(rng);
    const Rational l = random_rational(rng), x = random_rational(rng);
    const Rational inner = evaluate(q, l, x);
    EXPECT_EQ(evaluate(substitute_x(p, q), l, x), evaluate(p, l, inner));
  }
}

TEST(Polynomial, DerivativeIsLeibniz) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const XLambdaPoly a = random_poly(rng), b = random_poly(rng);
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
  }
}

TEST(Series, DivisionInvertsMultiplication) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = random_series(rng, 8);
    std::vector<XLambdaPoly> c{embed(random_rational(rng) + Rational(10))};
    for (int i = 1; i <= 8; ++i) c.push_back(random_poly(rng));
    const Series b(8, std::move(c));
    EXPECT_EQ(series_div(a * b, b), a);
  }
}

TEST(Series, DivisionCancelsValuation) {
  const int order = 8;
  const Series e = exp_series(true, Rational(1), order);
  const Series t2 = Series::monomial(order, embed(Rational(1)), 2);
  const Series q = series_div(e * t2, t2);
  EXPECT_EQ(q.order(), order - 2);
  EXPECT_EQ(q, e.truncated(order - 2));
}

TEST(Series, DivisionErrors) {
  const int order = 6;
  EXPECT_THROW(series_div(Series::one(order), Series(order)), LeadingCoefficientNotInvertible);
  const Series lambda_lead = Series::constant(order, embed(lambda_var())) + Series::t(order);
  EXPECT_THROW(series_div(Series::one(order), lambda_lead), LeadingCoefficientNotInvertible);
  const Series x_lead = Series::constant(order, x_var());
  EXPECT_THROW(series_div(Series::one(order), x_lead), LeadingCoefficientNotInvertible);
  EXPECT_THROW(series_div(Series::t(order), Series::monomial(order, embed(Rational(1)), 2)), ValuationMismatch);
}

TEST(Series, CompositionInverses) {
  const int order = 10;
  const Series exp_minus_one = exp_series(false, Rational(1), order) - Series::one(order);
  EXPECT_EQ(series_compose(log1p_series(order), exp_minus_one), Series::t(order));
  const Series deg_exp_minus_one = deg_exp(false, Rational(1), order) - Series::one(order);
  EXPECT_EQ(series_compose(deg_log(order), deg_exp_minus_one), Series::t(order));
  EXPECT_EQ(series_compose(deg_exp_minus_one, deg_log(order)), Series::t(order));
}

TEST(Series, CompositionIsAssociative) {
  std::mt19937 rng(5);
  const int order = 6;
  for (int trial = 0; trial < 5; ++trial) {
    Series f = random_series(rng, order), g = random_series(rng, order), h = random_series(rng, order);
    std::vector<XLambdaPoly> gc(g.coeffs().begin(), g.coeffs().end()), hc(h.coeffs().begin(), h.coeffs().end());
    gc[0] = XLambdaPoly();
    hc[0] = XLambdaPoly();
    g = Series(order, gc);
    h = Series(order, hc);
    EXPECT_EQ(series_compose(series_compose(f, g), h), series_compose(f, series_compose(g, h)));
  }
}

TEST(Series, CompositionErrors) {
  EXPECT_THROW(series_compose(Series::t(4), Series::one(4)), NonzeroInnerConstant);
  EXPECT_THROW(polylog_compose(2, Series::one(4)), NonzeroInnerConstant);
}

TEST(Series, EgfExtraction) {
  const Series e = exp_series(true, Rational(1), 8);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(egf_coeff(e, n), XLambdaPoly::monomial(LambdaPoly(Rational(1)), n));
  }
  EXPECT_THROW(egf_coeff(e, 9), OrderExceeded);
  EXPECT_THROW(Series(-1), OrderExceeded);
}

TEST(Series, MixedOrdersTruncateToMinimum) {
  const Series a = exp_series(true, Rational(1), 5), b = exp_series(true, Rational(1), 8);
  EXPECT_EQ((a * b).order(), 5);
  EXPECT_EQ((a + b).order(), 5);
}
