#ifndef HHRES_LOCALCOH_CECH_HPP
#define HHRES_LOCALCOH_CECH_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hhres/error.hpp"
#include "hhres/exactlin/chain_complex.hpp"
#include "hhres/exactlin/rational_matrix.hpp"
#include "hhres/hochschild/structure_algebra.hpp"
#include "hhres/localcoh/gen_fraction.hpp"

namespace hhres {

/// All strictly increasing index lists of length m drawn from 0..n-1.
inline std::vector<WedgeIndex> wedge_indices(std::size_t n, int m) {
  std::vector<WedgeIndex> out;
  if (m < 0 || static_cast<std::size_t>(m) > n) return out;
  WedgeIndex cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < static_cast<int>(n); ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Multidegree-alpha piece of the stable Koszul / Cech complex
///   0 -> M -> (+)_i M[t_i^-1] -> ... -> M[t_S^-1] -> 0,  M = Omega^m over R[t_inv^-1],
/// where f dt_I has multidegree exponent(f) + e_I. Summand (S, I) is the
/// coefficient of dt_I in M[t_S^-1]; S is a bitmask over positions of the
/// support sequence. Cochain degree p is stored as chain degree -p.
struct CechPiece {
  std::vector<std::vector<std::pair<unsigned, WedgeIndex>>> summands;  // by p
  ChainComplexData complex{0, {0}, {}};

  std::map<int, std::size_t> cohomology() const {
    std::map<int, std::size_t> h;
    for (const auto& [n, d] : complex.homology_dims()) h[-n] = d;
    return h;
  }

  std::optional<std::size_t> index(int p, unsigned mask, const WedgeIndex& idx) const {
    const auto& row = summands.at(static_cast<std::size_t>(p));
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k].first == mask && row[k].second == idx) return k;
    return std::nullopt;
  }

  /// Cech differential C^{p} -> C^{p+1}.
  RationalMatrix differential(int p) const { return complex.differential(-p); }
};

inline CechPiece cech_piece(const SupportSeq& support, int m, const std::vector<int>& alpha) {
  const std::size_t nv = support.variables().size();
  if (alpha.size() != nv) throw ValidationError("multidegree length does not match the variables");
  const std::size_t len = support.length();
  const auto& seq = support.sequence();
  const auto idxs = wedge_indices(nv, m);
  CechPiece piece;
  piece.summands.resize(len + 1);
  auto valid = [&](unsigned mask, const WedgeIndex& idx) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (support.is_inverted(v)) continue;
      bool inv = false;
      for (std::size_t k = 0; k < len; ++k)
        if ((mask >> k & 1u) && seq[k] == v) inv = true;
      if (inv) continue;
      const int e = alpha[v] - (std::find(idx.begin(), idx.end(), static_cast<int>(v)) != idx.end() ? 1 : 0);
      if (e < 0) return false;
    }
    return true;
  };
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    const int p = __builtin_popcount(mask);
    for (const auto& idx : idxs)
      if (valid(mask, idx)) piece.summands[static_cast<std::size_t>(p)].emplace_back(mask, idx);
  }
  std::vector<std::size_t> dims;
  for (int p = static_cast<int>(len); p >= 0; --p) dims.push_back(piece.summands[static_cast<std::size_t>(p)].size());
  std::map<int, RationalMatrix> diffs;
  for (int p = 0; p < static_cast<int>(len); ++p) {
    const auto& src = piece.summands[static_cast<std::size_t>(p)];
    const auto& dst = piece.summands[static_cast<std::size_t>(p + 1)];
    RationalMatrix d(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& [mask, idx] = src[c];
      for (std::size_t j = 0; j < len; ++j) {
        if (mask >> j & 1u) continue;
        int before = 0;
        for (std::size_t i = 0; i < j; ++i)
          if (mask >> i & 1u) ++before;
        const unsigned target = mask | (1u << j);
        for (std::size_t r = 0; r < dst.size(); ++r)
          if (dst[r].first == target && dst[r].second == idx) d.set(r, c, Rational(before % 2 ? -1 : 1));
      }
    }
    diffs.emplace(-p, std::move(d));
  }
  piece.complex = ChainComplexData(-static_cast<int>(len), std::move(dims), std::move(diffs));
  return piece;
}

/// dim H^p per internal degree d, keyed d -> p -> dim.
using CechTable = std::map<int, std::map<int, std::size_t>>;

/// Local cohomology H^p_{(t_S)}(M) for M = Omega^m (m = 0 gives R) graded by total
/// degree (deg dt_i = 1). The multidegree-alpha complex only depends on alpha
/// clamped to [-1, 1] coordinatewise (inverted variables: not at all), so each
/// clamp pattern is computed once and weighted by the number of multidegrees of
/// total degree d realizing it. Throws ValidationError if a nonzero pattern is
/// realized infinitely often (the piece is not finite-dimensional).
inline CechTable cech_h_dims(const SupportSeq& support, int m, const GradeWindow& window) {
  const std::size_t nv = support.variables().size();
  if (m < 0 || static_cast<std::size_t>(m) > nv) throw ValidationError("form degree out of range");
  CechTable table;
  for (int d = window.lo; d <= window.hi; ++d)
    for (int p = 0; p <= static_cast<int>(support.length()); ++p) table[d][p] = 0;
  std::vector<int> pattern(nv, -1);
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < nv; ++v)
    if (!support.is_inverted(v)) free_vars.push_back(v);
  const bool has_inverted = free_vars.size() < nv;
  std::size_t combos = 1;
  for (std::size_t k = 0; k < free_vars.size(); ++k) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t c = code;
    int neg = 0, pos = 0;
    for (std::size_t v : free_vars) {
      pattern[v] = static_cast<int>(c % 3) - 1;
      c /= 3;
      if (pattern[v] < 0) ++neg;
      if (pattern[v] > 0) ++pos;
    }
    const auto h = cech_piece(support, m, pattern).cohomology();
    bool nonzero = false;
    for (const auto& [p, dim] : h) nonzero = nonzero || dim > 0;
    if (!nonzero) continue;
    for (int d = window.lo; d <= window.hi; ++d) {
      // number of integer vectors with neg coordinates <= -1, pos >= 1, rest 0, summing to d
      std::optional<std::size_t> count;
      if (has_inverted || (neg > 0 && pos > 0)) {
        count = std::nullopt;
      } else if (neg == 0 && pos == 0) {
        count = d == 0 ? 1 : 0;
      } else {
        const int k = neg > 0 ? neg : pos;
        const int s = neg > 0 ? -d : d;
        // compositions of s into k positive parts
        if (s < k) {
          count = 0;
        } else {
          mpz_class b;
          mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(s - 1), static_cast<unsigned long>(k - 1));
          count = b.get_ui();
        }
      }
      if (!count)
        throw ValidationError("local cohomology piece of degree " + std::to_string(d) +
                              " is infinite-dimensional for this support; use a support containing every variable");
      if (*count == 0) continue;
      for (const auto& [p, dim] : h) table[d][p] += dim * *count;
    }
  }
  return table;
}

/// Monomial basis of the degree-d piece of H^n_{(t_1..t_n)}(Omega^m) when the
/// support contains every variable: t^e dt_I with every exponent e_v <= -1 and
/// |e| + m = d.
inline std::vector<std::pair<Exponents, WedgeIndex>> top_cohomology_basis(const SupportSeq& support, int m, int d) {
  const std::size_t nv = support.variables().size();
  if (support.length() != nv || !support.inverted().empty())
    throw ValidationError("top cohomology basis needs a support containing every variable");
  std::vector<std::pair<Exponents, WedgeIndex>> out;
  const int s = d - m;  // sum of exponents
  if (s > -static_cast<int>(nv)) return out;
  for (const auto& idx : wedge_indices(nv, m)) {
    Exponents e(nv);
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
      if (v + 1 == nv) {
        if (left <= -1) {
          e[v] = left;
          out.emplace_back(e, idx);
        }
        return;
      }
      for (int x = -1; left - x <= -static_cast<int>(nv - v - 1); --x) {
        e[v] = x;
        rec(v + 1, left - x);
      }
    };
    rec(0, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Cech-side comparison of two numerators of top classes over `support`: for
/// every multidegree where either has a term, their difference must lie in the
/// image of the last Cech differential.
inline bool cech_same_class(const SupportSeq& support, const DifferentialForm& a, const DifferentialForm& b) {
  if (a.degree() != b.degree()) return false;
  const RingSpec full = support.full_localization();
  const DifferentialForm diff = a.in_ring(full) - b.in_ring(full);
  const int len = static_cast<int>(support.length());
  const unsigned top = (1u << support.length()) - 1;
  std::map<std::vector<int>, std::vector<std::pair<WedgeIndex, Rational>>> by_alpha;
  for (const auto& [idx, f] : diff.terms())
    for (const auto& [e, c] : f.terms()) {
      std::vector<int> alpha(e.begin(), e.end());
      for (int v : idx) alpha[static_cast<std::size_t>(v)] += 1;
      by_alpha[alpha].emplace_back(idx, c);
    }
  for (const auto& [alpha, entries] : by_alpha) {
    const CechPiece piece = cech_piece(support, diff.degree(), alpha);
    std::vector<Rational> v(piece.summands[static_cast<std::size_t>(len)].size());
    for (const auto& [idx, c] : entries) {
      const auto k = piece.index(len, top, idx);
      if (!k) throw Error("numerator term outside the top Cech group");
      v[*k] += c;
    }
    if (len == 0) {
      for (const auto& x : v)
        if (!x.is_zero()) return false;
      continue;
    }
    if (!in_column_span(piece.differential(len - 1), v)) return false;
  }
  return true;
}

}  // namespace hhres

#endif  // HHRES_LOCALCOH_CECH_HPP
