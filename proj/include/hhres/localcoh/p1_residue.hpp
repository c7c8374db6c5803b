#ifndef HHRES_LOCALCOH_P1_RESIDUE_HPP
#define HHRES_LOCALCOH_P1_RESIDUE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/localcoh/upoly.hpp"

namespace hhres {

/// Degree bound for exact factorization over Q.
constexpr int kMaxFactorDegree = 16;

namespace detail {

/// Primitive integer multiple of a nonzero polynomial, positive leading coefficient.
inline std::vector<mpz_class> primitive_integer(const UPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) l = lcm(l, c.denominator());
  std::vector<mpz_class> g;
  mpz_class content = 0;
  for (const auto& c : f.coeffs()) {
    mpz_class v = c.numerator() * (l / c.denominator());
    content = gcd(content, v);
    g.push_back(v);
  }
  if (g.back() < 0) content = -content;
  for (auto& v : g) v /= content;
  return g;
}

inline UPoly from_integer(const std::vector<mpz_class>& g) {
  std::vector<Rational> c;
  for (const auto& v : g) c.emplace_back(v, mpz_class(1));
  return UPoly(std::move(c));
}

inline mpz_class eval_integer(const std::vector<mpz_class>& g, long x) {
  mpz_class r = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) r = r * x + *it;
  return r;
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Lagrange interpolation through (xs[i], ys[i]).
inline UPoly interpolate(const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
  UPoly h;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis = UPoly::constant(1);
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly{Rational(-xs[j]), Rational(1)};
      denom *= Rational(xs[i] - xs[j]);
    }
    h = h + (Rational(ys[i], mpz_class(1)) / denom) * basis;
  }
  return h;
}

/// A factor of degree exactly k of the primitive squarefree integer polynomial g, if any.
inline std::optional<UPoly> kronecker_factor(const std::vector<mpz_class>& g, int k) {
  const UPoly gp = from_integer(g);
  // sample points with small values first: they tend to have few divisors
  std::vector<std::pair<mpz_class, long>> cand;
  for (long x = -24; x <= 24; ++x) {
    const mpz_class v = eval_integer(g, x);
    if (v == 0) {
      if (k == 1) return UPoly{Rational(-x), Rational(1)};
      continue;
    }
    cand.emplace_back(abs(v), x);
  }
  std::sort(cand.begin(), cand.end());
  std::vector<std::pair<std::vector<mpz_class>, long>> pts;
  for (std::size_t i = 0; i < cand.size() && i < static_cast<std::size_t>(k) + 6; ++i)
    pts.emplace_back(positive_divisors(cand[i].first), cand[i].second);
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  pts.resize(static_cast<std::size_t>(k) + 1);
  std::vector<long> xs;
  for (const auto& p : pts) xs.push_back(p.second);
  const mpz_class lead = g.back();
  std::vector<mpz_class> ys(xs.size());
  std::optional<UPoly> found;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == xs.size()) {
      UPoly h = interpolate(xs, ys);
      if (h.degree() != k) return;
      for (const auto& c : h.coeffs())
        if (!c.is_integer()) return;
      if (lead % h.lead().numerator() != 0) return;
      if ((gp % h).is_zero()) found = h.monic();
      return;
    }
    for (const auto& d : pts[i].first) {
      ys[i] = d;
      rec(i + 1);
      if (i > 0) {
        ys[i] = -d;
        rec(i + 1);
      }
    }
  };
  rec(0);
  return found;
}

inline void factor_squarefree(const UPoly& f, std::vector<UPoly>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(f.monic());
    return;
  }
  const auto g = primitive_integer(f);
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    if (auto h = kronecker_factor(g, k)) {
      out.push_back(*h);
      factor_squarefree((f / *h).monic(), out);
      return;
    }
  }
  out.push_back(f.monic());
}

}  // namespace detail

/// Yun's squarefree decomposition of a nonconstant polynomial: monic pairwise
/// coprime squarefree a_i with f = lc * prod a_i^i.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() <= 0) return out;
  const UPoly m = f.monic();
  UPoly a = UPoly::gcd(m, m.derivative());
  UPoly b = m / a;
  UPoly c = m.derivative() / a;
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    a = UPoly::gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
  }
  return out;
}

/// Monic irreducible factors over Q with multiplicities, sorted.
inline std::vector<std::pair<UPoly, int>> factor(const UPoly& f) {
  if (f.is_zero()) throw PreconditionError("factorization of the zero polynomial");
  if (f.degree() > kMaxFactorDegree)
    throw ValidationError("polynomial degree " + std::to_string(f.degree()) + " exceeds the factorization bound " +
                          std::to_string(kMaxFactorDegree));
  std::vector<std::pair<UPoly, int>> out;
  for (const auto& [s, mult] : squarefree_decomposition(f)) {
    std::vector<UPoly> parts;
    detail::factor_squarefree(s, parts);
    for (auto& p : parts) out.emplace_back(std::move(p), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

inline bool is_irreducible(const UPoly& p) {
  if (p.degree() < 1) return false;
  const auto f = factor(p);
  return f.size() == 1 && f[0].second == 1;
}

/// Closed point of P^1 over Q: a monic irreducible polynomial, or infinity.
struct P1Point {
  bool infinity = false;
  UPoly poly;

  static P1Point at_infinity() { return {true, {}}; }
  static P1Point at(const UPoly& p) {
    if (!p.is_monic() || !is_irreducible(p))
      throw ValidationError("point descriptor " + p.to_string() + " is not a monic irreducible polynomial");
    return {false, p};
  }

  std::string to_string(const std::string& var = "x") const { return infinity ? "inf" : poly.to_string(var); }
};

/// Trace from Q[x]/(p) to Q of the class of h.
inline Rational residue_field_trace(const UPoly& h, const UPoly& p) {
  const int d = p.degree();
  Rational tr;
  UPoly basis = UPoly::constant(1);
  for (int j = 0; j < d; ++j) {
    // diagonal entry of multiplication by h in the basis 1, x, ..., x^{d-1}
    tr += ((h * basis) % p).coeff(j);
    basis = basis * UPoly::x();
  }
  return tr;
}

/// Multiplicity of the irreducible p in d.
inline int pole_order(const UPoly& d, const UPoly& p) {
  int k = 0;
  UPoly q = d;
  while (q.degree() >= p.degree()) {
    auto [a, r] = UPoly::divmod(q, p);
    if (!r.is_zero()) break;
    q = a;
    ++k;
  }
  return k;
}

/// Principal part R / p^k of f at the irreducible p (deg R < k deg p).
inline std::pair<UPoly, int> principal_part(const RatFunc& f, const UPoly& p) {
  const int k = pole_order(f.den(), p);
  if (k == 0) return {UPoly(), 0};
  const UPoly pk = p.pow(k);
  const UPoly q = f.den() / pk;
  return {(f.num() * UPoly::inverse_mod(q, pk)) % pk, k};
}

/// Residue of f dx at a closed point.
inline Rational p1_residue(const RatFunc& f, const P1Point& pt) {
  if (pt.infinity) {
    const UPoly rm = f.num() % f.den();
    if (rm.is_zero() || f.den().degree() - rm.degree() != 1) return Rational();
    return -(rm.lead() / f.den().lead());
  }
  const UPoly& p = pt.poly;
  auto [a, k] = principal_part(f, p);
  if (k == 0) return Rational();
  const UPoly dp = p.derivative();
  auto [g, u, v] = UPoly::ext_gcd(p, dp);
  // A / p^i == (u A + (v A)' / (i - 1)) / p^{i-1} up to exact derivatives
  for (int i = k; i >= 2; --i) {
    const UPoly ua = u * a, va = v * a;
    a = (ua + (Rational(1) / Rational(i - 1)) * va.derivative()) % p.pow(i - 1);
  }
  return residue_field_trace((a * UPoly::inverse_mod(dp, p)) % p, p);
}

struct P1Residue {
  P1Point point;
  int pole_order = 0;
  std::string principal_part;
  Rational residue;
};

/// Residues of f dx at every pole (finite poles sorted, then infinity).
inline std::vector<P1Residue> p1_residues(const RatFunc& f, const std::string& var = "x") {
  std::vector<P1Residue> out;
  if (f.den().degree() > 0)
    for (const auto& [p, mult] : factor(f.den())) {
      const P1Point pt{false, p};
      const auto [r, k] = principal_part(f, p);
      out.push_back({pt, k, RatFunc(r, p.pow(k)).to_string(var), p1_residue(f, pt)});
    }
  const int inf_order = f.num().is_zero() ? 0 : std::max(0, f.num().degree() - f.den().degree() + 2);
  out.push_back({P1Point::at_infinity(), inf_order, "", p1_residue(f, P1Point::at_infinity())});
  return out;
}

/// Sum of all residues of f dx on P^1; always zero.
inline Rational residue_sum_check(const RatFunc& f) {
  Rational s;
  for (const auto& r : p1_residues(f)) s += r.residue;
  return s;
}

}  // namespace hhres

#endif  // HHRES_LOCALCOH_P1_RESIDUE_HPP
