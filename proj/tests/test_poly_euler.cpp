#include <thread>

#include <gtest/gtest.h>

#include "polyeuler/errors.hpp"
#include "polyeuler/poly_euler.hpp"

using namespace polyeuler;

namespace {

std::vector<Rational> parse_all(const std::vector<const char*>& v) {
  std::vector<Rational> out;
  for (const char* s : v) out.push_back(Rational::parse(s));
  return out;
}

Rational at(const XLambdaPoly& p, const Rational& lambda, const Rational& x) { return evaluate(p, lambda, x); }

}  // namespace

// Reference values computed independently with plain fraction arithmetic on
// numeric series.
TEST(PolyEuler, ClassicalReferenceValues) {
  const Families fam(12);
  const struct {
    int k;
    Rational x;
    std::vector<const char*> values;
  } cases[] = {
      {2, 0, {"1", "-1", "13/18", "-1/12", "-91/150", "29/90", "505/294"}},
      {2, Rational(1, 3), {"1", "-2/3", "1/6", "37/108", "-1507/4050", "-463/810", "499993/357210"}},
      {3, 0, {"1", "-5/4", "149/108", "-10/9", "599/4500", "851/675", "-28531/30870"}},
      {-1, 0, {"1", "5/2", "19/3", "65/4", "211/5", "665/6", "2059/7"}},
      {0, Rational(1, 3), {"1", "5/6", "7/9", "85/108", "341/405", "455/486", "5461/5103"}},
  };
  for (const auto& c : cases) {
    const auto expected = parse_all(c.values);
    for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
      EXPECT_EQ(at(fam.poly_euler(n, c.k), 0, c.x), expected[n]) << "k=" << c.k << " n=" << n;
    }
  }
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(fam.poly_euler_number(n, 0), embed(Rational(1, n + 1)));
}

TEST(PolyEuler, DegenerateReferenceValues) {
  const Families fam(12);
  const Rational lambda(1, 5), x(1, 3);
  const auto k2 = parse_all({"1", "-17/30", "-1/18", "7601/13500", "-792043/2531250", "-2670547/3037500",
                             "563215213/318937500"});
  const auto km1 = parse_all({"1", "67/30", "3011/450", "64369/2700", "49019893/506250", "1336515137/3037500",
                              "100449618871/45562500"});
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(at(fam.deg_poly_euler(n, 2), lambda, x), k2[n]) << n;
    EXPECT_EQ(at(fam.deg_poly_euler(n, -1), lambda, x), km1[n]) << n;
  }
}

TEST(PolyEuler, AnchorValues) {
  const Families fam(12);
  for (int k = -2; k <= 3; ++k) {
    EXPECT_EQ(fam.poly_euler(0, k), embed(Rational(1)));
    EXPECT_EQ(fam.deg_poly_euler(0, k), embed(Rational(1)));
    const Rational e1 = Rational(2).pow(1 - k) - Rational(3, 2);
    EXPECT_EQ(fam.poly_euler_number(1, k), embed(e1)) << k;
    EXPECT_EQ(closed_form_rhs(fam, "C2.5", 1, k), embed(e1)) << k;
  }
  EXPECT_EQ(fam.poly_euler(1, 1), x_var() - embed(Rational(1, 2)));
  EXPECT_EQ(fam.poly_euler_number(1, 2), embed(Rational(-1)));
}

TEST(PolyEuler, KEqualsOneIsEuler) {
  const Families fam(14);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(fam.poly_euler(n, 1), fam.sequences().classical_family(ClassicalFamily::euler, n));
  }
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(fam.deg_poly_euler(n, 1), fam.sequences().degenerate_family(ClassicalFamily::euler, n));
  }
}

TEST(PolyEuler, DegenerateReducesAtLambdaZero) {
  const Families fam(12);
  for (int k : {-1, 1, 2, 3}) {
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(specialize_lambda(fam.deg_poly_euler(n, k), 0), fam.poly_euler(n, k));
  }
}

TEST(PolyEuler, UnitValueSumAtOne) {
  const Families fam(12);
  EXPECT_EQ(deg_unit_value_sum(fam, 1, 2), embed(Rational(2)));
  EXPECT_EQ(deg_unit_value_closed_form(fam, 1, 2), embed(Rational(2)));
}

TEST(PolyEuler, Lemma21Coefficient) {
  const Families fam(12);
  // Li_1(1 - e^{-2t}) = 2t, so the only nonzero coefficient at k = 1 is n = 1.
  EXPECT_EQ(lemma21_coeff(fam.sequences(), 1, 1), Rational(2));
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(lemma21_coeff(fam.sequences(), n, 1), Rational(0)) << n;
  EXPECT_THROW(lemma21_coeff(fam.sequences(), 0, 1), IndexOutOfRange);
}

TEST(PolyEuler, OrderLimits) {
  const Families fam(6);
  EXPECT_THROW(fam.poly_euler(7, 1), OrderExceeded);
  FamilySpec spec{FamilyKind::poly_euler, 1, 20, 16};
  EXPECT_THROW(spec.validate(), OrderExceeded);
  EXPECT_THROW(closed_form_rhs(fam, "Eq18", 1, 1), UnknownIdentity);
}

TEST(PolyEuler, ConcurrentLookupsAgree) {
  const Families fam(12);
  std::vector<XLambdaPoly> results(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&, i] { results[i] = fam.deg_poly_euler(8, 2); });
  }
  for (auto& t : threads) t.join();
  for (int i = 1; i < 4; ++i) EXPECT_EQ(results[i], results[0]);
  EXPECT_EQ(results[0], Families(12).deg_poly_euler(8, 2));
}
