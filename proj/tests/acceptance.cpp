// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "hhres/cli/commands.hpp"
#include "hhres/cli/eval.hpp"
#include "hhres/hochschild/hh.hpp"
#include "hhres/hochschild/hkr.hpp"
#include "hhres/kforms/kahler.hpp"
#include "hhres/laurent/residue_oracle.hpp"
#include "hhres/localcoh/cech.hpp"
#include "hhres/localcoh/cousin.hpp"
#include "hhres/localcoh/p1_residue.hpp"
#include "hhres/ressym/ce_check.hpp"
#include "hhres/ressym/symbol.hpp"
#include "hhres/ressym/tate.hpp"
#include "hhres/tateop/cubical.hpp"
#include "test_support.hpp"

using namespace hhres;
using namespace hhres::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

bool run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) o.fail("time " + std::to_string(s) + " s over the " + std::to_string(limit_s) + " s limit");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  std::printf("%s %d  %s  [%s] %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), buf, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

const VarOrder T({"t"});
const VarOrder T2({"t1", "t2"});

/// p/q with |p|, |q| <= 10, nonzero.
Rational small_coefficient() {
  Rational r;
  while (r.is_zero()) r = Rational(uniform(-10, 10), uniform(1, 10));
  return r;
}

LaurentPoly random_pair_poly() {
  LaurentPoly p(T);
  const int k = uniform(1, 6);
  for (int i = 0; i < k; ++i) p += LaurentPoly::monomial(T, {uniform(-6, 6)}, small_coefficient());
  return p;
}

std::string power(const std::string& v, int k) { return v + "^" + std::to_string(k); }

// 1 -------------------------------------------------------------------------
Outcome tate_n1() {
  Outcome o;
  std::size_t checked = 0;
  const auto expect = [&](const std::string& f, const std::string& g, const Rational& want) {
    const auto r = cli::run_residue({"t", f, g, "all"});
    ++checked;
    if (r.exit_code != cli::kExitOk || r.report["verdict"] != "AGREE") {
      o.fail("f=" + f + " g=" + g + ": " + r.report.dump());
      return;
    }
    if (r.report["values"]["oracle"] != want.to_string()) o.fail("f=" + f + " g=" + g + " expected " + want.to_string());
  };
  for (int a = -8; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b) expect(power("t", a), power("t", b), Rational(a + b == 0 ? b : 0));
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly f = random_pair_poly(), g = random_pair_poly();
    if (!(cli::parse_laurent(f.to_string(), T) == f)) o.fail("printer/parser mismatch on " + f.to_string());
    expect(f.to_string(), g.to_string(), residue_oracle_nd(f, {g}));
  }
  o.detail = std::to_string(checked) + " pairs, tate = symbol = oracle";
  return o;
}

// 2 -------------------------------------------------------------------------
Outcome symbol_n2() {
  Outcome o;
  std::set<std::string> ratios;
  std::size_t total = 0, nonzero = 0;
  const auto m = [](int a, int b) { return LaurentPoly::monomial(T2, {a, b}); };
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d)
          for (int e = -3; e <= 3; ++e)
            for (int h = -3; h <= 3; ++h) {
              const SymbolTrace tr = abstract_symbol({T2, m(a, b), {m(c, d), m(e, h)}});
              ++total;
              if (tr.oracle.is_zero()) {
                if (!tr.raw.is_zero()) o.fail("nonzero symbol where the oracle vanishes");
                continue;
              }
              ++nonzero;
              ratios.insert((tr.raw / tr.oracle).to_string());
              if (!tr.agree) o.fail("pinned-sign value differs from the oracle");
            }
  if (ratios.size() != 1) o.fail(std::to_string(ratios.size()) + " distinct signs across the corpus");
  if (ratios.size() == 1 && *ratios.begin() != std::to_string(kOrientationSign2)) o.fail("derived sign differs from the pin");
  if (o.pass)
    o.detail = std::to_string(total) + " triples, " + std::to_string(nonzero) + " nonzero, epsilon = " + *ratios.begin();
  return o;
}

// 3 -------------------------------------------------------------------------
Outcome hkr_cycles() {
  Outcome o;
  const VarOrder xy({"x", "y"});
  const RingSpec ring(xy);
  const PolyAlgebra alg(xy);
  std::size_t by_degree[3] = {0, 0, 0};
  for (int k = 0; k < 100; ++k) {
    const int m = uniform(0, 2);
    DifferentialForm w(ring, m);
    for (int t = uniform(1, 4); t > 0; --t) {
      const int budget = 5 - m;
      const int i = uniform(0, budget), j = uniform(0, budget - i);
      WedgeIndex idx = m == 2 ? WedgeIndex{0, 1} : m == 1 ? WedgeIndex{uniform(0, 1)} : WedgeIndex{};
      w = w + DifferentialForm::monomial_form(ring, LaurentPoly::monomial(xy, {i, j}, random_nonzero_rational(6)), idx);
    }
    const auto c = hkr_chain(w);
    ++by_degree[m];
    if (m == 0) continue;  // b vanishes on C_0
    if (!b_apply(alg, c).is_zero()) o.fail("b(hkr(" + w.to_string() + ")) != 0");
  }
  o.detail = "100 forms (degree 0/1/2: " + std::to_string(by_degree[0]) + "/" + std::to_string(by_degree[1]) + "/" +
             std::to_string(by_degree[2]) + ")";
  return o;
}

// 4 -------------------------------------------------------------------------
Outcome hh_kahler() {
  Outcome o;
  std::vector<std::pair<std::string, StructureAlgebra>> algs{
      {"Q[e]/(e^2)", StructureAlgebra::dual_numbers()},
      {"Q[x]/(x^3)", StructureAlgebra::truncated_polynomial(3)},
      {"Q[x]/(x^4)", StructureAlgebra::truncated_polynomial(4)},
      {"Q[x,y]/(x^2,xy,y^2)", StructureAlgebra::monomial_quotient(VarOrder({"x", "y"}), {{0, 0}, {1, 0}, {0, 1}})}};
  for (int k = 0; k < 20; ++k) algs.emplace_back("random " + std::to_string(k), random_commutative_algebra());
  std::string dims;
  std::size_t idx = 0;
  for (const auto& [name, a] : algs) {
    const std::size_t hh1 = hh_dims(a, 1).at(1);
    const std::size_t kd = kahler_presentation(a).dim;
    if (hh1 != kd) o.fail(name + ": HH_1 = " + std::to_string(hh1) + ", Kahler = " + std::to_string(kd));
    if (idx++ < 4) dims += (dims.empty() ? "" : ",") + std::to_string(hh1);
  }
  o.detail = std::to_string(algs.size()) + " algebras (named: HH_1 = " + dims + ")";
  return o;
}

// 5 -------------------------------------------------------------------------
std::size_t negative_vectors(int n, int s) {
  if (n == 0) return s == 0 ? 1 : 0;
  std::size_t c = 0;
  for (int x = -1; x >= s - (-(n - 1)); --x) c += negative_vectors(n - 1, s - x);
  return c;
}

std::size_t binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

Outcome local_cohomology() {
  Outcome o;
  std::size_t pieces = 0;
  const std::vector<std::string> names{"x1", "x2", "x3"};
  for (int n = 1; n <= 3; ++n) {
    const VarOrder vars(std::vector<std::string>(names.begin(), names.begin() + n));
    std::vector<std::size_t> seq;
    for (int v = 0; v < n; ++v) seq.push_back(static_cast<std::size_t>(v));
    const SupportSeq s(vars, seq);
    const CechTable t = cech_h_dims(s, 0, GradeWindow{-8, 4});
    for (int d = -8; d <= 4; ++d)
      for (int p = 0; p <= n; ++p) {
        std::size_t got = 0;
        if (auto it = t.find(d); it != t.end())
          if (auto jt = it->second.find(p); jt != it->second.end()) got = jt->second;
        ++pieces;
        const std::size_t want = p == n ? negative_vectors(n, d) : 0;
        if (p == n && want != binomial(-d - 1, n - 1)) o.fail("enumeration and binomial count disagree");
        if (got != want)
          o.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + " H^" + std::to_string(p) + " = " +
                 std::to_string(got) + ", expected " + std::to_string(want));
      }
  }
  o.detail = std::to_string(pieces) + " pieces";
  return o;
}

// 6 -------------------------------------------------------------------------
Outcome cousin() {
  Outcome o;
  const VarOrder xy({"x", "y"});
  std::size_t routes = 0, nonzero = 0;
  for (int k = 0; k < 100; ++k) {
    const int m = uniform(0, 2);
    if (k % 2 == 0) {
      CousinCochain c0(xy, 0, m);
      c0.add(0, random_form(CousinCochain::stratum_support(xy, 0).full_localization(), m, 4, -3, 2));
      const CousinCochain c1 = cousin_differential(c0);
      nonzero += c1.is_zero() ? 0 : 1;
      if (!cousin_differential(c1).is_zero()) o.fail("d^2 != 0 from codimension 0");
      for (const auto& [mask, x] : c0.components())
        for (std::size_t j = 0; j < 2; ++j, ++routes)
          if (!cech_boundary_agrees(x, j)) o.fail("normal-form and Cech routes disagree");
    } else {
      CousinCochain c1(xy, 1, m);
      for (unsigned mask : {1u, 2u})
        c1.add(mask, random_form(CousinCochain::stratum_support(xy, mask).full_localization(), m, 3, -3, 2));
      nonzero += cousin_differential(c1).is_zero() ? 0 : 1;
      for (const auto& [mask, x] : c1.components()) {
        ++routes;
        if (!cech_boundary_agrees(x, mask == 1u ? 1 : 0)) o.fail("normal-form and Cech routes disagree");
      }
    }
  }
  o.detail = "100 classes (" + std::to_string(nonzero) + " with nonzero d), " + std::to_string(routes) + " route comparisons";
  return o;
}

// 7 -------------------------------------------------------------------------
Outcome p1_residue_theorem() {
  Outcome o;
  std::size_t quad = 0, cubic = 0;
  for (int k = 0; k < 100; ++k) {
    const RandomP1Form f = random_p1_form();
    for (const auto& [p, e] : f.den_factors) {
      quad += p.degree() == 2;
      cubic += p.degree() == 3;
    }
    const RatFunc r(f.num, f.den());
    const Rational s = residue_sum_check(r);
    if (!s.is_zero()) o.fail("sum of residues of " + r.to_string() + " dx is " + s.to_string());
  }
  if (quad == 0 || cubic == 0) o.fail("corpus lacks quadratic or cubic pole divisors");
  o.detail = "100 forms, " + std::to_string(quad) + " quadratic and " + std::to_string(cubic) + " cubic pole divisors";
  return o;
}

// 8 -------------------------------------------------------------------------
Outcome cubical_axioms() {
  Outcome o;
  std::size_t decomps = 0, traces = 0, defects = 0;
  for (const VarOrder& order : {T, T2}) {
    const CubicalContext ctx(order);
    for (int k = 0; k < 100; ++k) {
      const BandedOperator x = random_operator(order, 2);
      for (int i = 1; i <= ctx.levels(); ++i) {
        const auto [plus, minus] = ctx.decompose_pm(x, i);
        ++decomps;
        if (!operator_equal(plus + minus, x)) o.fail("plus + minus != op");
        if (!ctx.ideal_membership(plus, i, IdealSign::Plus)) o.fail("plus not in I+");
        if (!ctx.ideal_membership(minus, i, IdealSign::Minus)) o.fail("minus not in I-");
      }
      const BandedOperator a = random_trace_class(ctx), b = random_operator(order, 2);
      ++traces;
      if (!ctx.trace(commutator(a, b)).is_zero()) o.fail("trace of a commutator is nonzero");
      const BandedOperator u = random_operator(order, 2), v = random_operator(order, 2);
      for (int i = 1; i <= ctx.levels(); ++i) {
        const BandedOperator d = ctx.lambda_plus(u * v, i) - ctx.lambda_plus(u, i) * ctx.lambda_plus(v, i);
        ++defects;
        if (!ctx.ideal_membership(d, i, IdealSign::Zero)) o.fail("Lambda defect not in I0");
      }
    }
  }
  o.detail = std::to_string(decomps) + " splittings, " + std::to_string(traces) + " commutator traces, " +
             std::to_string(defects) + " defects";
  return o;
}

// 9 -------------------------------------------------------------------------
Outcome ce_lift() {
  Outcome o;
  std::size_t tuples = 0;
  const auto check = [&](const std::vector<BandedOperator>& ops) {
    ++tuples;
    if (!ce_cycle_check(ops)) o.fail("CE boundary does not vanish");
  };
  for (int a = -8; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b)
      check({BandedOperator::mult(LaurentPoly::monomial(T, {a})), BandedOperator::mult(LaurentPoly::monomial(T, {b}))});
  for (int k = 0; k < 200; ++k) check({BandedOperator::mult(random_pair_poly()), BandedOperator::mult(random_pair_poly())});
  const auto m = [](int a, int b) { return BandedOperator::mult(LaurentPoly::monomial(T2, {a, b})); };
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d)
          for (int e = -3; e <= 3; ++e)
            for (int h = -3; h <= 3; ++h) check({m(a, b), m(c, d), m(e, h)});
  o.detail = std::to_string(tuples) + " tuples";
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "Tate residue n=1, three-way agreement", 60, tate_n1);
  ok &= run(2, "Abstract symbol n=2 vs Jacobian oracle", 600, symbol_n2);
  ok &= run(3, "HKR chains are Hochschild cycles", 0, hkr_cycles);
  ok &= run(4, "HH_1 equals Kahler differentials", 0, hh_kahler);
  ok &= run(5, "Local cohomology vanishing and top-degree dimensions", 0, local_cohomology);
  ok &= run(6, "Cousin d^2 = 0 and Cech route agreement", 0, cousin);
  ok &= run(7, "Residue theorem on P^1", 0, p1_residue_theorem);
  ok &= run(8, "Cubical algebra axioms", 0, cubical_axioms);
  ok &= run(9, "Chevalley-Eilenberg lift of commuting tuples", 0, ce_lift);
  return ok ? 0 : 1;
}
