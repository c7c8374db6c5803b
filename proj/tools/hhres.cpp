#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hhres/cli/commands.hpp"

namespace {

int emit(const hhres::cli::CommandResult& r) {
  std::cout << r.report.dump(2) << "\n";
  if (r.report.contains("error")) std::cerr << "hhres: " << r.report["error"]["message"].get<std::string>() << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hhres::cli;
  CLI::App app{"Exact Hochschild homology, local cohomology and residues"};
  app.require_subcommand(1);

  HhArgs hh;
  auto* c_hh = app.add_subcommand("hh", "Hochschild homology of an algebra file");
  c_hh->add_option("--algebra", hh.algebra, "JSON algebra description")->required();
  c_hh->add_option("--max-degree", hh.max_degree, "Highest Hochschild degree")->required();
  c_hh->add_option("--grade-window", hh.grade_window, "Internal degrees A..B");

  LocalcohArgs lc;
  auto* c_lc = app.add_subcommand("localcoh", "Local cohomology with supports");
  c_lc->add_option("--ring", lc.ring, "Variables, e.g. \"x,y\"")->required();
  c_lc->add_option("--support", lc.support, "Support sequence, e.g. \"x,y\"")->required();
  c_lc->add_option("--module", lc.module, "O or omega^m")->capture_default_str();
  c_lc->add_option("--window", lc.window, "Internal degrees A..B")->required();
  c_lc->add_option("--invert", lc.invert, "Additionally inverted variables");
  c_lc->add_option("--class", lc.cls, "Form whose class is put in normal form");

  CousinP1Args cp;
  auto* c_cp = app.add_subcommand("cousin-p1", "Residues of a rational 1-form on P^1");
  c_cp->add_option("--form", cp.form, "e.g. \"d(x) * (x^2+1)^-1\"")->required();
  c_cp->add_option("--var", cp.var, "Coordinate name (default: the one in the form, else x)");

  ResidueArgs rs;
  auto* c_rs = app.add_subcommand("residue", "Residue of f dg in one variable");
  c_rs->add_option("--vars", rs.vars, "Variable")->capture_default_str();
  c_rs->add_option("--f", rs.f, "Laurent polynomial f")->required();
  c_rs->add_option("--g", rs.g, "Laurent polynomial g")->required();
  c_rs->add_option("--method", rs.method, "tate|symbol|oracle|all")->capture_default_str();

  Residue2Args r2;
  auto* c_r2 = app.add_subcommand("residue2", "Residue of f dg1/\\dg2 in two variables");
  c_r2->add_option("--vars", r2.vars, "Variables, innermost first")->capture_default_str();
  c_r2->add_option("--f", r2.f, "Laurent polynomial f")->required();
  c_r2->add_option("--g1", r2.g1, "Laurent polynomial g1")->required();
  c_r2->add_option("--g2", r2.g2, "Laurent polynomial g2")->required();
  c_r2->add_option("--method", r2.method, "symbol|oracle|all")->capture_default_str();

  AuditArgs au;
  auto* c_au = app.add_subcommand("audit-symbol", "Abstract symbol with every intermediate chain");
  c_au->add_option("--vars", au.vars, "Variables, innermost first")->required();
  c_au->add_option("--f", au.f, "Laurent polynomial f")->required();
  c_au->add_option("--g", au.gs, "Laurent polynomials g_i (repeat once per variable)")->required();
  c_au->add_option("--dump-trace", au.dump_trace, "Write the trace JSON here ('-' embeds it in the report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  if (*c_hh) return emit(run_hh(hh));
  if (*c_lc) return emit(run_localcoh(lc));
  if (*c_cp) return emit(run_cousin_p1(cp));
  if (*c_rs) return emit(run_residue(rs));
  if (*c_r2) return emit(run_residue2(r2));
  return emit(run_audit_symbol(au));
}
