#ifndef HHRES_CLI_COMMANDS_HPP
#define HHRES_CLI_COMMANDS_HPP

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hhres/cli/eval.hpp"
#include "hhres/cli/expr.hpp"
#include "hhres/error.hpp"
#include "hhres/hochschild/algebra_file.hpp"
#include "hhres/hochschild/hh.hpp"
#include "hhres/kforms/kahler.hpp"
#include "hhres/laurent/residue_oracle.hpp"
#include "hhres/localcoh/cech.hpp"
#include "hhres/localcoh/gen_fraction.hpp"
#include "hhres/localcoh/p1_residue.hpp"
#include "hhres/ressym/symbol.hpp"
#include "hhres/ressym/tate.hpp"
#include "hhres/ressym/trace_json.hpp"

namespace hhres::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitDisagree = 2;

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
};

struct HhArgs {
  std::string algebra;
  int max_degree = 2;
  std::optional<std::string> grade_window;
};

struct LocalcohArgs {
  std::string ring;
  std::string support;
  std::string module = "omega^0";
  std::string window;
  std::string invert;
  std::optional<std::string> cls;
};

struct CousinP1Args {
  std::string form;
  std::optional<std::string> var;
};

struct ResidueArgs {
  std::string vars = "t";
  std::string f;
  std::string g;
  std::string method = "all";
};

struct Residue2Args {
  std::string vars = "t1,t2";
  std::string f;
  std::string g1;
  std::string g2;
  std::string method = "all";
};

struct AuditArgs {
  std::string vars;
  std::string f;
  std::vector<std::string> gs;
  std::optional<std::string> dump_trace;
};

namespace detail {

template <class Fn>
CommandResult guarded(const std::string& command, Fn fn) {
  const auto fail = [&](const std::string& kind, const std::string& msg) {
    CommandResult r;
    r.exit_code = kExitInvalid;
    r.report = {{"command", command}, {"error", {{"kind", kind}, {"message", msg}}}};
    return r;
  };
  try {
    CommandResult r = fn();
    r.report["command"] = command;
    return r;
  } catch (const ParseError& e) {
    return fail("parse", e.what());
  } catch (const ValidationError& e) {
    return fail("validation", e.what());
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what());
  } catch (const Error& e) {
    return fail("internal", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail("parse", e.what());
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline int parse_module(const std::string& m) {
  if (m == "O" || m == "R" || m == "omega^0") return 0;
  const std::string prefix = "omega^";
  if (m.rfind(prefix, 0) == 0 && m.size() > prefix.size()) {
    const std::string k = m.substr(prefix.size());
    if (k.find_first_not_of("0123456789") == std::string::npos && k.size() < 4) return std::stoi(k);
  }
  throw ValidationError("module must be O or omega^m, got '" + m + "'");
}

inline std::string verdict(const std::map<std::string, Rational>& values) {
  if (values.size() < 2) return "SINGLE";
  for (const auto& [k, v] : values)
    if (v != values.begin()->second) return "DISAGREE";
  return "AGREE";
}

inline nlohmann::json values_json(const std::map<std::string, Rational>& values) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : values) j[k] = v.to_string();
  return j;
}

inline std::set<std::string> methods(const std::string& m, const std::set<std::string>& allowed) {
  if (m == "all") return allowed;
  if (!allowed.count(m)) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : "|") + a;
    throw ValidationError("unknown method '" + m + "' (expected " + list + "|all)");
  }
  return {m};
}

template <class Algebra>
nlohmann::json hh_table_json(const HHTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [m, row] : t.pieces) {
    nlohmann::json pieces = nlohmann::json::array();
    std::size_t total = 0;
    for (const auto& [w, d] : row) {
      pieces.push_back({{"degree", w}, {"dim", d}});
      total += d;
    }
    nlohmann::json r = {{"m", m}, {"dim", total}};
    if (t.graded) r["pieces"] = pieces;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace detail

/// Hochschild homology table of an algebra file, with HH_1 checked against
/// the Kahler presentation for commutative algebras.
inline CommandResult run_hh(const HhArgs& a) {
  return detail::guarded("hh", [&] {
    if (a.max_degree < 0) throw ValidationError("--max-degree must be nonnegative");
    const AlgebraSpec spec = load_algebra_file(a.algebra);
    const std::optional<GradeWindow> window =
        a.grade_window ? std::optional<GradeWindow>(GradeWindow::parse(*a.grade_window)) : std::nullopt;
    CommandResult r;
    std::visit(
        [&](const auto& alg) {
          using A = std::decay_t<decltype(alg)>;
          const HHTable t = hh_dims(alg, a.max_degree, window);
          nlohmann::json info;
          bool commutative = true;
          if constexpr (std::is_same_v<A, StructureAlgebra>) {
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < alg.dim(); ++i) labels.push_back(alg.label(i));
            commutative = alg.is_commutative();
            info = {{"kind", "structure"}, {"dim", alg.dim()}, {"basis", labels}, {"commutative", commutative}};
          } else {
            info = {{"kind", "polynomial"}, {"variables", alg.variables().names()}, {"commutative", true}};
          }
          r.report["algebra"] = info;
          r.report["max_degree"] = a.max_degree;
          r.report["graded"] = t.graded;
          if (window) r.report["grade_window"] = std::to_string(window->lo) + ".." + std::to_string(window->hi);
          r.report["homology"] = detail::hh_table_json<A>(t);
          if (commutative && a.max_degree >= 1) {
            bool agree = true;
            nlohmann::json rows = nlohmann::json::array();
            if (!window) {
              if constexpr (std::is_same_v<A, StructureAlgebra>) {
                const std::size_t k = kahler_presentation(alg).dim;
                agree = k == t.at(1, 0);
                rows.push_back({{"degree", nullptr}, {"hh1", t.at(1, 0)}, {"kahler", k}});
              }
            } else {
              for (int w = window->lo; w <= window->hi; ++w) {
                const std::size_t k = kahler_presentation_graded(alg, w).dim;
                agree = agree && k == t.at(1, w);
                rows.push_back({{"degree", w}, {"hh1", t.at(1, w)}, {"kahler", k}});
              }
            }
            r.report["kahler_check"] = {{"rows", rows}, {"agree", agree}};
            if (!agree) r.exit_code = kExitDisagree;
          }
        },
        spec);
    return r;
  });
}

/// Local cohomology dimension table of Omega^m with supports, top-degree
/// bases, and optionally the normal form of one class.
inline CommandResult run_localcoh(const LocalcohArgs& a) {
  return detail::guarded("localcoh", [&] {
    const VarOrder vars = VarOrder::parse(a.ring);
    const SupportSeq support = SupportSeq::parse(vars, detail::split_list(a.support), detail::split_list(a.invert));
    const int m = detail::parse_module(a.module);
    const GradeWindow window = GradeWindow::parse(a.window);
    const CechTable table = cech_h_dims(support, m, window);
    const std::size_t depth = support.sequence().size();
    CommandResult r;
    r.report["ring"] = vars.names();
    r.report["support"] = support.to_string();
    r.report["module"] = m == 0 ? "O" : "omega^" + std::to_string(m);
    r.report["window"] = std::to_string(window.lo) + ".." + std::to_string(window.hi);
    nlohmann::json rows = nlohmann::json::array();
    for (int d = window.lo; d <= window.hi; ++d) {
      nlohmann::json dims = nlohmann::json::array();
      for (std::size_t p = 0; p <= depth; ++p) {
        std::size_t x = 0;
        auto it = table.find(d);
        if (it != table.end()) {
          auto jt = it->second.find(static_cast<int>(p));
          if (jt != it->second.end()) x = jt->second;
        }
        dims.push_back(x);
      }
      rows.push_back({{"degree", d}, {"dims", dims}});
    }
    r.report["table"] = rows;
    if (depth == vars.size() && support.inverted().empty()) {
      const RingSpec full = support.full_localization();
      nlohmann::json bases = nlohmann::json::array();
      for (int d = window.lo; d <= window.hi; ++d) {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& [e, idx] : top_cohomology_basis(support, m, d))
          basis.push_back(DifferentialForm::monomial_form(full, LaurentPoly::monomial(vars, e), idx).to_string());
        bases.push_back({{"degree", d}, {"basis", basis}});
      }
      r.report["top_bases"] = bases;
    }
    if (a.cls) {
      const DifferentialForm w = parse_form(*a.cls, support.full_localization());
      const GenFraction x(support, w);
      const GenFraction nf = x.normal_form();
      r.report["class"] = {{"input", w.to_string()}, {"normal_form", nf.numerator().to_string()}, {"zero", nf.is_zero_class()}};
    }
    return r;
  });
}

/// Residues of a rational 1-form on P^1 at every pole, and their sum.
inline CommandResult run_cousin_p1(const CousinP1Args& a) {
  return detail::guarded("cousin-p1", [&] {
    const ExprPtr e = parse(a.form);
    std::set<std::string> names = variables_of(*e);
    if (names.size() > 1) throw ValidationError("a P^1 form must use a single variable");
    const std::string var = a.var ? *a.var : names.empty() ? "x" : *names.begin();
    if (!names.empty() && *names.begin() != var) throw ValidationError("form uses '" + *names.begin() + "', not '" + var + "'");
    const RatFunc f = eval_p1_form(*e, var);
    const auto residues = p1_residues(f, var);
    Rational sum;
    nlohmann::json points = nlohmann::json::array();
    for (const auto& x : residues) {
      sum += x.residue;
      points.push_back({{"point", x.point.to_string(var)},
                        {"degree", x.point.infinity ? 1 : x.point.poly.degree()},
                        {"pole_order", x.pole_order},
                        {"principal_part", x.principal_part},
                        {"residue", x.residue.to_string()}});
    }
    CommandResult r;
    r.report["variable"] = var;
    r.report["form"] = f.to_string(var) + " d" + var;
    r.report["points"] = points;
    r.report["sum"] = sum.to_string();
    r.report["residue_theorem"] = sum.is_zero();
    if (!sum.is_zero()) r.exit_code = kExitDisagree;
    return r;
  });
}

/// Residue of f dg in one variable by Tate's formula, the abstract symbol and the oracle.
inline CommandResult run_residue(const ResidueArgs& a) {
  return detail::guarded("residue", [&] {
    const VarOrder order = VarOrder::parse(a.vars);
    if (order.size() != 1) throw ValidationError("residue takes exactly one variable; use residue2 for two");
    const auto ms = detail::methods(a.method, {"oracle", "symbol", "tate"});
    const LaurentPoly f = parse_laurent(a.f, order), g = parse_laurent(a.g, order);
    std::map<std::string, Rational> values;
    if (ms.count("tate")) values["tate"] = tate_residue_1d(f, g);
    if (ms.count("symbol")) values["symbol"] = abstract_symbol({order, f, {g}}).value;
    if (ms.count("oracle")) values["oracle"] = residue_oracle_nd(f, {g});
    CommandResult r;
    r.report["vars"] = order.names();
    r.report["f"] = f.to_string();
    r.report["g"] = g.to_string();
    r.report["values"] = detail::values_json(values);
    r.report["verdict"] = detail::verdict(values);
    if (r.report["verdict"] == "DISAGREE") r.exit_code = kExitDisagree;
    return r;
  });
}

/// Residue of f dg1 /\ dg2 in two variables; the symbol value carries the pinned sign.
inline CommandResult run_residue2(const Residue2Args& a) {
  return detail::guarded("residue2", [&] {
    const VarOrder order = VarOrder::parse(a.vars);
    if (order.size() != 2) throw ValidationError("residue2 takes exactly two variables");
    const auto ms = detail::methods(a.method, {"oracle", "symbol"});
    const LaurentPoly f = parse_laurent(a.f, order), g1 = parse_laurent(a.g1, order), g2 = parse_laurent(a.g2, order);
    std::map<std::string, Rational> values;
    CommandResult r;
    if (ms.count("symbol")) {
      const SymbolTrace tr = abstract_symbol({order, f, {g1, g2}});
      values["symbol"] = tr.value;
      r.report["raw_trace"] = tr.raw.to_string();
      r.report["sign"] = tr.sign;
    }
    if (ms.count("oracle")) values["oracle"] = residue_oracle_nd(f, {g1, g2});
    r.report["vars"] = order.names();
    r.report["f"] = f.to_string();
    r.report["g"] = {g1.to_string(), g2.to_string()};
    r.report["values"] = detail::values_json(values);
    r.report["verdict"] = detail::verdict(values);
    if (r.report["verdict"] == "DISAGREE") r.exit_code = kExitDisagree;
    return r;
  });
}

/// Full abstract-symbol audit trail, written to a file or embedded in the report.
inline CommandResult run_audit_symbol(const AuditArgs& a) {
  return detail::guarded("audit-symbol", [&] {
    const VarOrder order = VarOrder::parse(a.vars);
    std::vector<LaurentPoly> gs;
    for (const auto& g : a.gs) gs.push_back(parse_laurent(g, order));
    const SymbolTrace tr = abstract_symbol({order, parse_laurent(a.f, order), gs});
    const nlohmann::json trace = trace_to_json(tr);
    CommandResult r;
    r.report["value"] = tr.value.to_string();
    r.report["oracle"] = tr.oracle.to_string();
    r.report["agree"] = tr.agree;
    if (a.dump_trace && *a.dump_trace != "-") {
      std::ofstream out(*a.dump_trace);
      if (!out) throw ValidationError("cannot write trace file '" + *a.dump_trace + "'");
      out << trace.dump(2) << "\n";
      r.report["trace_file"] = *a.dump_trace;
    } else {
      r.report["trace"] = trace;
    }
    if (!tr.agree) r.exit_code = kExitDisagree;
    return r;
  });
}

}  // namespace hhres::cli

#endif  // HHRES_CLI_COMMANDS_HPP
