#ifndef HHRES_HOCHSCHILD_HKR_HPP
#define HHRES_HOCHSCHILD_HKR_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/hochschild/hoch_chain.hpp"
#include "hhres/hochschild/structure_algebra.hpp"
#include "hhres/kforms/differential_form.hpp"

namespace hhres {

/// Sign of a permutation given as an index vector.
inline int permutation_sign(const std::vector<std::size_t>& p) {
  int inversions = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

/// sum_{pi in S_k} sgn(pi) x_{pi(0)} (x) ... (x) x_{pi(k-1)}, added to `out` with weight `coef`.
template <class E>
void add_antisymmetrized(HochChain<E>& out, const Rational& coef, const std::vector<E>& xs) {
  std::vector<std::size_t> p(xs.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<E> f;
    f.reserve(xs.size());
    for (std::size_t k : p) f.push_back(xs[k]);
    out.add(Rational(permutation_sign(p)) * coef, std::move(f));
  } while (std::next_permutation(p.begin(), p.end()));
}

/// HKR map f_0 df_1 /\ ... /\ df_n |-> sum_{pi in S_{n+1}} sgn(pi) f_{pi(0)} (x) ... (x) f_{pi(n)}
/// on the polynomial algebra, applied monomial by monomial of f_0 with f_k = t_{i_k}.
/// Every tensor must have internal degree inside `window` when one is given.
inline HochChain<Exponents> hkr_chain(const DifferentialForm& omega, std::optional<GradeWindow> window = std::nullopt) {
  if (!omega.ring().is_polynomial()) throw ValidationError("HKR chain needs polynomial coefficients, got " + omega.ring().to_string());
  const std::size_t nv = omega.ring().size();
  HochChain<Exponents> out(omega.degree());
  for (const auto& [idx, f] : omega.terms()) {
    for (const auto& [e, c] : f.terms()) {
      std::vector<Exponents> xs{e};
      for (int v : idx) xs.push_back(Exponents(nv).with(static_cast<std::size_t>(v), 1));
      const int w = static_cast<int>(e.total()) + omega.degree();
      if (window && !window->contains(w))
        throw ValidationError("form term of internal degree " + std::to_string(w) + " outside the grade window");
      add_antisymmetrized(out, c, xs);
    }
  }
  return out.normalized();
}

}  // namespace hhres

#endif  // HHRES_HOCHSCHILD_HKR_HPP
