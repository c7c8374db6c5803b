#ifndef HHRES_RESSYM_SYMBOL_HPP
#define HHRES_RESSYM_SYMBOL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/hochschild/hkr.hpp"
#include "hhres/hochschild/hoch_chain.hpp"
#include "hhres/laurent/laurent_poly.hpp"
#include "hhres/laurent/residue_oracle.hpp"
#include "hhres/ressym/tate.hpp"
#include "hhres/tateop/banded_operator.hpp"
#include "hhres/tateop/cubical.hpp"

namespace hhres {

/// Orientation sign for two variables: tau(d d gamma) = kOrientationSign2 * Res.
inline constexpr int kOrientationSign2 = -1;

/// Composition algebra on banded operators, for b_apply.
struct OperatorAlgebra {
  using element = BandedOperator;
  LinComb<BandedOperator> multiply(const BandedOperator& a, const BandedOperator& b) const { return {{a * b, Rational(1)}}; }
};

using OperatorChain = HochChain<BandedOperator>;

struct SymbolStep {
  int level = 0;
  int window = 0;
  OperatorChain lifted;
  OperatorChain boundary;
  OperatorChain merged;
  OperatorChain output;
};

struct SymbolInput {
  VarOrder order;
  LaurentPoly f;
  std::vector<LaurentPoly> gs;
};

struct SymbolTrace {
  SymbolInput input;
  OperatorChain seed;
  std::vector<SymbolStep> steps;
  Rational raw;
  int sign = 1;
  Rational value;
  Rational oracle;
  std::optional<Rational> tate;
  bool agree = false;
};

namespace detail {

using NodeKey = const BandedOperator::Node*;

inline std::vector<NodeKey> keys_except(const std::vector<BandedOperator>& fs, std::size_t skip) {
  std::vector<NodeKey> k;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (i != skip) k.push_back(fs[i].node().get());
  return k;
}

/// Merges terms that share the same node in every slot but one, folding the
/// free slot into a single linear combination. Degree 0 collapses to one term.
inline OperatorChain merge_terms(const OperatorChain& c, const VarOrder& order) {
  OperatorChain out(c.degree());
  std::vector<OperatorChain::Term> pool;
  for (const auto& t : c.terms()) {
    bool zero = false;
    for (const auto& a : t.factors) zero = zero || a.is_structurally_zero();
    if (!zero) pool.push_back(t);
  }
  const std::size_t len = static_cast<std::size_t>(c.degree()) + 1;
  for (std::size_t k = 0; k < len && !pool.empty(); ++k) {
    std::map<std::vector<NodeKey>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < pool.size(); ++i) groups[keys_except(pool[i].factors, k)].push_back(i);
    std::vector<bool> used(pool.size(), false);
    std::vector<std::size_t> firsts;
    for (const auto& [key, idx] : groups)
      if (idx.size() > 1) firsts.push_back(idx.front());
    std::sort(firsts.begin(), firsts.end());
    for (std::size_t first : firsts) {
      const auto& idx = groups[keys_except(pool[first].factors, k)];
      std::vector<std::pair<Rational, BandedOperator>> lc;
      for (std::size_t i : idx) {
        lc.emplace_back(pool[i].coef, pool[i].factors[k]);
        used[i] = true;
      }
      std::vector<BandedOperator> f = pool[first].factors;
      f[k] = BandedOperator::linear_combination(order, lc);
      if (!f[k].is_structurally_zero()) out.add(Rational(1), std::move(f));
    }
    std::vector<OperatorChain::Term> rest;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!used[i]) rest.push_back(pool[i]);
    pool = std::move(rest);
  }
  for (auto& t : pool) out.add(t.coef, t.factors);
  return out;
}

}  // namespace detail

/// d = delta o Lambda at one level: lift by P^+, apply b, merge, rotate a
/// trace-class entry to the front and compress the rest by a local unit.
inline OperatorChain symbol_chain_d(const CubicalContext& ctx, const OperatorChain& c, int level,
                                    SymbolStep* audit = nullptr) {
  const int m = c.degree();
  if (m < 1) throw PreconditionError("symbol step needs a chain of degree >= 1");
  const VarOrder& order = ctx.order();

  std::map<detail::NodeKey, BandedOperator> lifts;
  OperatorChain lifted(m);
  for (const auto& t : c.terms()) {
    std::vector<BandedOperator> f;
    for (const auto& a : t.factors) {
      auto it = lifts.find(a.node().get());
      if (it == lifts.end()) it = lifts.emplace(a.node().get(), ctx.lambda_plus(a, level)).first;
      f.push_back(it->second);
    }
    lifted.add(t.coef, std::move(f));
  }

  const OperatorChain boundary = b_apply(OperatorAlgebra{}, lifted);
  OperatorChain merged(m - 1);
  if (m == 1) {
    std::vector<std::pair<Rational, BandedOperator>> lc;
    for (const auto& t : boundary.terms()) lc.emplace_back(t.coef, t.factors[0]);
    const BandedOperator s = BandedOperator::linear_combination(order, lc);
    if (!s.is_structurally_zero()) merged.add(Rational(1), {s});
  } else {
    merged = detail::merge_terms(boundary, order);
  }

  const std::size_t len = static_cast<std::size_t>(m);
  std::vector<OperatorChain::Term> rotated;
  int window = 0;
  for (const auto& t : merged.terms()) {
    std::optional<std::size_t> pos;
    for (std::size_t k = 0; k < len && !pos; ++k)
      if (ctx.ideal_membership(t.factors[k], level, IdealSign::Zero)) pos = k;
    if (!pos)
      throw Error("symbol step at level " + std::to_string(level) + ": no entry of a boundary term lies in I^0");
    const std::size_t steps = (len - *pos) % len;
    const bool flip = (m - 1) % 2 == 1 && steps % 2 == 1;
    std::vector<BandedOperator> f(len);
    for (std::size_t k = 0; k < len; ++k) f[k] = t.factors[(k + *pos) % len];
    rotated.push_back({flip ? -t.coef : t.coef, std::move(f)});
    window = std::max(window, ctx.certified_window(rotated.back().factors[0], level));
  }

  OperatorChain out(m - 1);
  const BandedOperator e = ctx.local_unit(level, window);
  std::map<detail::NodeKey, BandedOperator> compressed;
  for (auto& t : rotated) {
    for (std::size_t k = 1; k < len; ++k) {
      auto it = compressed.find(t.factors[k].node().get());
      if (it == compressed.end()) it = compressed.emplace(t.factors[k].node().get(), e * t.factors[k] * e).first;
      t.factors[k] = it->second;
    }
    out.add(t.coef, t.factors);
  }

  if (audit) {
    audit->level = level;
    audit->window = window;
    audit->lifted = lifted;
    audit->boundary = boundary;
    audit->merged = merged;
    audit->output = out;
  }
  return out;
}

/// sum over permutations pi of the g's: sgn(pi) f (x) g_pi(1) (x) ... (x) g_pi(n), as Mult operators.
inline OperatorChain symbol_seed(const CubicalContext& ctx, const LaurentPoly& f, const std::vector<LaurentPoly>& gs) {
  const int n = static_cast<int>(gs.size());
  std::vector<BandedOperator> ops;
  for (const auto& g : gs) ops.push_back(ctx.mult(g));
  const BandedOperator F = ctx.mult(f);
  std::vector<std::size_t> perm(gs.size());
  std::iota(perm.begin(), perm.end(), 0);
  OperatorChain seed(n);
  do {
    std::vector<BandedOperator> fs{F};
    for (std::size_t p : perm) fs.push_back(ops[p]);
    seed.add(Rational(permutation_sign(perm)), std::move(fs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return seed;
}

/// tau o d o ... o d applied to the seed, outermost level first, with the
/// oracle and (n = 1) Tate's formula alongside.
inline SymbolTrace abstract_symbol(const SymbolInput& in) {
  const std::size_t n = in.order.size();
  if (n < 1 || n > 2) throw ValidationError("abstract symbol supports one or two variables");
  if (in.gs.size() != n) throw ValidationError("expected " + std::to_string(n) + " functions g, got " + std::to_string(in.gs.size()));
  if (!(in.f.order() == in.order)) throw ValidationError("f over a different variable order");
  for (const auto& g : in.gs)
    if (!(g.order() == in.order)) throw ValidationError("g over a different variable order");

  const CubicalContext ctx(in.order);
  SymbolTrace tr;
  tr.input = in;
  tr.seed = symbol_seed(ctx, in.f, in.gs);
  OperatorChain c = tr.seed;
  for (int level = 1; level <= static_cast<int>(n); ++level) {
    SymbolStep step;
    c = symbol_chain_d(ctx, c, level, &step);
    tr.steps.push_back(std::move(step));
  }
  for (const auto& t : c.terms()) tr.raw += t.coef * ctx.trace(t.factors[0]);
  tr.sign = n == 2 ? kOrientationSign2 : 1;
  tr.value = Rational(tr.sign) * tr.raw;
  tr.oracle = residue_oracle_nd(in.f, in.gs);
  tr.agree = tr.value == tr.oracle;
  if (n == 1) {
    tr.tate = tate_residue_1d(in.f, in.gs[0]);
    tr.agree = tr.agree && *tr.tate == tr.oracle;
  }
  return tr;
}

}  // namespace hhres

#endif  // HHRES_RESSYM_SYMBOL_HPP
