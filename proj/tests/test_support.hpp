#ifndef HHRES_TESTS_TEST_SUPPORT_HPP
#define HHRES_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "hhres/exactlin/rational.hpp"
#include "hhres/exactlin/rational_matrix.hpp"
#include "hhres/laurent/laurent_poly.hpp"

namespace hhres::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20261014);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// p/q with |p|, |q| <= bound, q > 0.
inline Rational random_rational(int bound = 10) {
  return Rational(uniform(-bound, bound), uniform(1, bound));
}

inline Rational random_nonzero_rational(int bound = 10) {
  Rational r;
  while (r.is_zero()) r = random_rational(bound);
  return r;
}

inline RationalMatrix random_matrix(std::size_t r, std::size_t c, double density = 0.5, int bound = 5) {
  RationalMatrix m(r, c);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng())) m.set(i, j, random_rational(bound));
  return m;
}

inline RationalMatrix random_invertible(std::size_t n) {
  while (true) {
    RationalMatrix m = random_matrix(n, n, 0.7, 4);
    if (rank(m) == n) return m;
  }
}

/// Random Laurent polynomial with up to `terms` terms and exponents in [lo, hi].
inline LaurentPoly random_laurent(const VarOrder& order, int terms, int lo, int hi, int bound = 10) {
  LaurentPoly p(order);
  const int k = uniform(1, terms);
  for (int t = 0; t < k; ++t) {
    Exponents e(order.size());
    for (std::size_t v = 0; v < order.size(); ++v) e[v] = uniform(lo, hi);
    p += LaurentPoly::monomial(order, e, random_nonzero_rational(bound));
  }
  return p;
}

}  // namespace hhres::testing

#endif  // HHRES_TESTS_TEST_SUPPORT_HPP
