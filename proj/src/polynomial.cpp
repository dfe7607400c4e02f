#include "polyeuler/polynomial.hpp"

#include <vector>

namespace polyeuler {

namespace {

/// Integer numerators of `a` over the lcm of its denominators.
mpz_class to_common_denominator(std::span<const Rational> a, std::vector<mpz_class>& ints) {
  mpz_class den = 1;
  for (const auto& r : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.raw().get_den_mpz_t());
  ints.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ints[i] = a[i].raw().get_num() * (den / a[i].raw().get_den());
  }
  return den;
}

}  // namespace

std::vector<Rational> multiply_rational_coeffs(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> ia;
  std::vector<mpz_class> ib;
  const mpz_class den = to_common_denominator(a, ia) * to_common_denominator(b, ib);
  std::vector<mpz_class> acc(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& c : acc) out.emplace_back(mpq_class(c, den));
  return out;
}

int lambda_degree(const XLambdaPoly& p) {
  int d = -1;
  for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
  return d;
}

XLambdaPoly specialize_lambda(const XLambdaPoly& p, const Rational& lambda) {
  std::vector<LambdaPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c.evaluate(lambda));
  return XLambdaPoly(std::move(out));
}

XLambdaPoly specialize_x(const XLambdaPoly& p, const Rational& x) {
  return XLambdaPoly(p.evaluate(LambdaPoly(x)));
}

XLambdaPoly substitute_x(const XLambdaPoly& p, const XLambdaPoly& arg) { return p.compose(arg); }

Rational evaluate(const XLambdaPoly& p, const Rational& lambda, const Rational& x) {
  return p.evaluate(LambdaPoly(x)).evaluate(lambda);
}

bool is_rational_constant(const XLambdaPoly& p) {
  return p.is_constant() && p.constant_term().is_constant();
}

Rational rational_constant(const XLambdaPoly& p) { return p.constant_term().constant_term(); }

}  // namespace polyeuler
