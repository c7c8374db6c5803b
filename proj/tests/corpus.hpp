#ifndef HHRES_TESTS_CORPUS_HPP
#define HHRES_TESTS_CORPUS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hhres/hochschild/structure_algebra.hpp"
#include "hhres/kforms/differential_form.hpp"
#include "hhres/localcoh/upoly.hpp"
#include "hhres/tateop/banded_operator.hpp"
#include "hhres/tateop/cubical.hpp"
#include "test_support.hpp"

namespace hhres::testing {

/// Random order ideal (division-closed set of monomials containing 1) in two
/// variables with at most `max_size` elements.
inline std::vector<Exponents> random_order_ideal(std::size_t max_size) {
  std::set<Exponents> s{Exponents{0, 0}};
  const std::size_t target = static_cast<std::size_t>(uniform(1, static_cast<int>(max_size)));
  for (int guard = 0; s.size() < target && guard < 100; ++guard) {
    // try adding a monomial whose lower neighbours are present
    const Exponents e{uniform(0, 4), uniform(0, 4)};
    if (s.count(e)) continue;
    if (e[0] > 0 && !s.count(Exponents{e[0] - 1, e[1]})) continue;
    if (e[1] > 0 && !s.count(Exponents{e[0], e[1] - 1})) continue;
    s.insert(e);
  }
  return {s.begin(), s.end()};
}

/// Random commutative associative unital algebra of dimension <= 5, presented
/// in a randomly changed basis.
inline StructureAlgebra random_commutative_algebra() {
  const VarOrder xy({"x", "y"});
  StructureAlgebra a = StructureAlgebra::ground_field();
  switch (uniform(0, 3)) {
    case 0: {
      std::vector<Rational> p;
      const int d = uniform(1, 5);
      for (int k = 0; k < d; ++k) p.push_back(random_rational(4));
      p.push_back(random_nonzero_rational(3));
      a = StructureAlgebra::polynomial_quotient(p);
      break;
    }
    case 1:
      a = StructureAlgebra::monomial_quotient(xy, random_order_ideal(5));
      break;
    case 2:
      a = StructureAlgebra::direct_sum(StructureAlgebra::truncated_polynomial(static_cast<std::size_t>(uniform(1, 3))),
                                       StructureAlgebra::truncated_polynomial(static_cast<std::size_t>(uniform(1, 2))));
      break;
    default:
      a = StructureAlgebra::tensor(StructureAlgebra::dual_numbers(),
                                   StructureAlgebra::truncated_polynomial(static_cast<std::size_t>(uniform(1, 2))));
      break;
  }
  return StructureAlgebra::change_basis(a, random_invertible(a.dim()));
}

/// Upper triangular 2x2 matrices with basis e11, e12, e22.
inline StructureAlgebra upper_triangular() {
  std::vector<std::vector<std::vector<Rational>>> t(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3)));
  t[0][0][0] = 1;
  t[0][1][1] = 1;
  t[1][2][1] = 1;
  t[2][2][2] = 1;
  return StructureAlgebra({"e11", "e12", "e22"}, t, {1, 0, 1});
}


/// Random form of the given degree over `ring`, Laurent coefficients with
/// exponents in [lo, hi] on inverted variables and [0, hi] elsewhere.
inline DifferentialForm random_form(const RingSpec& ring, int degree, int terms, int lo, int hi) {
  const VarOrder& vars = ring.variables();
  DifferentialForm w(ring, degree);
  for (int t = 0; t < terms; ++t) {
    WedgeIndex idx;
    for (int v = 0; v < static_cast<int>(vars.size()); ++v) idx.push_back(v);
    std::shuffle(idx.begin(), idx.end(), rng());
    idx.resize(static_cast<std::size_t>(degree));
    Exponents e(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) e[v] = uniform(ring.is_inverted(v) ? lo : 0, hi);
    w = w + DifferentialForm::monomial_form(ring, LaurentPoly::monomial(vars, e, random_nonzero_rational(6)), idx);
  }
  return w;
}

/// Irreducible factor of a random test denominator, with its degree known.
inline UPoly random_irreducible() {
  switch (uniform(0, 4)) {
    case 0:
    case 1:
      return UPoly{Rational(uniform(-4, 4)), Rational(1)};
    case 2: {
      // x^2 + b x + c with negative discriminant
      const int b = uniform(-3, 3);
      const int c = uniform(b * b / 4 + 1, b * b / 4 + 5);
      return UPoly{Rational(c), Rational(b), Rational(1)};
    }
    case 3: {
      const int c[] = {2, 3, 5, 6, 7, -2, -3};
      return UPoly{Rational(-c[uniform(0, 6)]), Rational(0), Rational(0), Rational(1)};
    }
    default:
      // x^3 - x - 1 and x^3 + x + 1 have no rational roots
      return uniform(0, 1) ? UPoly{Rational(-1), Rational(-1), Rational(0), Rational(1)}
                           : UPoly{Rational(1), Rational(1), Rational(0), Rational(1)};
  }
}

/// Random rational 1-form coefficient on P^1 with denominator degree <= 6 and
/// numerator degree <= 6, together with the (known) factorization of the
/// denominator into distinct irreducibles with multiplicities.
struct RandomP1Form {
  UPoly num;
  std::vector<std::pair<UPoly, int>> den_factors;
  UPoly den() const {
    UPoly d = UPoly::constant(1);
    for (const auto& [p, k] : den_factors) d = d * p.pow(k);
    return d;
  }
};

inline RandomP1Form random_p1_form() {
  RandomP1Form f;
  int budget = uniform(1, 6);
  while (budget > 0) {
    UPoly p = random_irreducible();
    if (p.degree() > budget) continue;
    bool dup = false;
    for (const auto& [q, k] : f.den_factors) dup = dup || q == p;
    if (dup) continue;
    const int k = uniform(1, budget / p.degree());
    f.den_factors.emplace_back(p, k);
    budget -= k * p.degree();
    if (uniform(0, 2) == 0) break;
  }
  std::vector<Rational> c;
  const int deg = uniform(0, 6);
  for (int k = 0; k <= deg; ++k) c.push_back(random_rational(6));
  f.num = UPoly(c);
  if (f.num.is_zero()) f.num = UPoly::constant(1);
  return f;
}

/// Random finite matrix with up to `entries` columns, exponents in [lo, hi].
inline BandedOperator random_window(const VarOrder& order, int entries, int lo, int hi) {
  std::map<Exponents, LaurentPoly> cols;
  const int k = uniform(1, entries);
  for (int i = 0; i < k; ++i) {
    Exponents a(order.size());
    for (std::size_t v = 0; v < order.size(); ++v) a[v] = uniform(lo, hi);
    cols.try_emplace(a, LaurentPoly(order)).first->second += random_laurent(order, 2, lo, hi, 5);
  }
  return BandedOperator::window(order, cols);
}

/// Random operator built from multiplications, windows and half-line projectors.
inline BandedOperator random_operator(const VarOrder& order, int depth = 2) {
  const int pick = uniform(0, depth > 0 ? 5 : 2);
  switch (pick) {
    case 0:
      return BandedOperator::mult(random_laurent(order, 3, -3, 3, 5));
    case 1:
      return random_window(order, 3, -3, 3);
    case 2: {
      const std::size_t v = static_cast<std::size_t>(uniform(0, static_cast<int>(order.size()) - 1));
      const int c = uniform(-2, 2);
      return uniform(0, 1) ? BandedOperator::projector(order, v, c, std::nullopt)
                           : BandedOperator::projector(order, v, std::nullopt, c);
    }
    case 3:
      return random_operator(order, depth - 1) * random_operator(order, depth - 1);
    case 4:
      return random_operator(order, depth - 1) + random_rational(4) * random_operator(order, depth - 1);
    default:
      return commutator(random_operator(order, depth - 1), random_operator(order, depth - 1));
  }
}

/// Random element of I_tr: windows, window products, and products of Tate commutators.
inline BandedOperator random_trace_class(const CubicalContext& ctx) {
  const VarOrder& o = ctx.order();
  switch (uniform(0, 3)) {
    case 0:
      return random_window(o, 3, -3, 3);
    case 1:
      return random_window(o, 2, -3, 3) * random_operator(o, 1);
    case 2:
      return random_operator(o, 1) * random_window(o, 2, -3, 3);
    default: {
      const auto tate = [&](int level) {
        const LaurentPoly f = random_laurent(o, 3, -3, 3, 5), g = random_laurent(o, 3, -3, 3, 5);
        return commutator(ctx.lambda_plus(BandedOperator::mult(f), level), BandedOperator::mult(g));
      };
      BandedOperator x = tate(1);
      if (ctx.levels() == 2) x = x * tate(2);
      return x;
    }
  }
}

}  // namespace hhres::testing

#endif  // HHRES_TESTS_CORPUS_HPP
