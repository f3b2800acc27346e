// eqcoh: exact equivariant-cohomology engine (twisted Cartan/BRST/Weil
// models).  Exit codes: 0 pass, 1 mathematical check failure, 2 usage or
// parse error.
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqcoh/brst.hpp"
#include "eqcoh/cohomology.hpp"
#include "eqcoh/config.hpp"

namespace {

using namespace eqcoh;

struct CommonOpts {
  std::string config_path;
  int degree = -1;
  std::string model, invariance, basic, sign, mutate;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "Run configuration file")
      ->required();
  cmd->add_option("--degree", o.degree, "Override truncation N");
  cmd->add_option("--model", o.model, "cartan|weil")
      ->check(CLI::IsMember({"cartan", "weil"}));
  cmd->add_option("--invariance", o.invariance, "paper|per-generator")
      ->check(CLI::IsMember({"paper", "per-generator"}));
  cmd->add_option("--basic", o.basic, "all-pairs|twisted-pairs")
      ->check(CLI::IsMember({"all-pairs", "twisted-pairs"}));
  cmd->add_option("--sign", o.sign, "minus|plus")
      ->check(CLI::IsMember({"minus", "plus"}));
  cmd->add_option("--mutate", o.mutate,
                  "Documented formula mutation for negative testing")
      ->check(CLI::IsMember({"dW-drop-phi", "delta-drop-theta-theta-iota"}))
      ->group("");  // hidden
}

RunConfig effective_config(const CommonOpts& o) {
  RunConfig c = load_config(o.config_path);
  if (o.degree >= 0) {
    if (o.degree < 1) throw std::runtime_error("--degree must be >= 1");
    c.N = o.degree;
  }
  if (!o.model.empty())
    c.model = o.model == "cartan" ? Model::cartan : Model::weil_basic;
  if (!o.invariance.empty())
    c.invariance = o.invariance == "paper" ? InvarianceMode::paper_literal
                                           : InvarianceMode::per_generator;
  if (!o.basic.empty())
    c.basic = o.basic == "all-pairs" ? BasicMode::all_pairs
                                     : BasicMode::twisted_pairs;
  if (!o.sign.empty())
    c.sign = o.sign == "minus" ? SignConvention::minus : SignConvention::plus;
  return c;
}

WeilMutation weil_mutation(const CommonOpts& o) {
  return o.mutate == "dW-drop-phi" ? WeilMutation::drop_phi_in_dW
                                   : WeilMutation::none;
}

BrstMutation brst_mutation(const CommonOpts& o) {
  return o.mutate == "delta-drop-theta-theta-iota"
             ? BrstMutation::drop_theta_theta_iota
             : BrstMutation::none;
}

// Prints `CHECK <name> <pass|fail> <violations>` plus located detail lines.
bool emit_check(const std::string& name, const ValidationReport& r) {
  std::cout << "CHECK " << name << " " << (r.ok() ? "pass" : "fail") << " "
            << r.violations.size() << "\n";
  if (!r.ok()) std::cout << r.summary();
  return r.ok();
}

int cmd_validate(const CommonOpts& o) {
  RunConfig c = effective_config(o);
  LieAlgebraSpec lie = lie_from_config(c);
  bool ok = emit_check("lie", validate(lie));
  GdgaPtr mod = module_from_config(c, lie);
  ok &= emit_check("gdga", check_gdga(*mod, lie, c.N));
  Setup s;
  try {
    s = make_setup(lie, mod, c.N, weil_mutation(o), c.sign);
    ok &= emit_check("weil", check_weil_identities(s.a(), s.weil, c.N));
  } catch (const std::logic_error& e) {
    ValidationReport r;
    r.add("weil construction", e.what());
    emit_check("weil", r);
    ok = false;
  }
  return ok ? 0 : 1;
}

int cmd_check(const CommonOpts& o, const std::string& which) {
  RunConfig c = effective_config(o);
  Setup s = setup_from_config(c, weil_mutation(o));
  int N = c.N;
  bool ok = true;
  auto want = [&](const char* name) {
    return which == "all" || which == name;
  };
  if (want("lemma3"))
    ok &= emit_check("lemma3", cartan_d_squared_defect(s, N));
  if (want("lemma4"))
    ok &= emit_check("lemma4", delta_squared_check(s, N, brst_mutation(o)));
  if (want("lemma5")) ok &= emit_check("lemma5", psi_forms_agree(s, N));
  if (want("lemma6"))
    ok &= emit_check("lemma6", tensor_identities_check(s, N));
  if (want("lemma7"))
    ok &= emit_check("lemma7", twisted_cartan_formula_check(s, N));
  if (want("lemma8"))
    ok &= emit_check("lemma8", check_basic_preserved(s, N, c.basic));
  if (want("thm1"))
    ok &= emit_check("thm1", theorem1_check(s, N, brst_mutation(o)));
  if (want("thm2")) ok &= emit_check("thm2", theorem2_check(s, N, c.invariance));
  if (want("thm3")) {
    RankReport r = theorem3_check(s, N, c.invariance);
    int bad = static_cast<int>(r.issues.violations.size());
    for (const RankReport::Row& row : r.rows)
      if (row.cartan_dim != row.basic_dim || row.rank != row.cartan_dim) ++bad;
    std::cout << "CHECK thm3 " << (r.ok() ? "pass" : "fail") << " " << bad
              << "\n";
    std::cout << r.dims_line() << "\n";
    if (!r.issues.ok()) std::cout << r.issues.summary();
    ok &= r.ok();
  }
  return ok ? 0 : 1;
}

int cmd_cohomology(const CommonOpts& o, bool tsv) {
  RunConfig c = effective_config(o);
  Setup s = setup_from_config(c, weil_mutation(o));
  BettiTable t =
      equivariant_cohomology(s, c.N, c.model, c.invariance, c.basic);
  if (!tsv)
    std::cout << "# model=" << (c.model == Model::cartan ? "cartan" : "weil")
              << " degrees 0.." << c.N - 1 << " (top degree excluded)\n";
  std::cout << t.tsv();
  return 0;
}

int cmd_apply(const CommonOpts& o, const std::string& map_name,
              const std::string& expr) {
  RunConfig c = effective_config(o);
  Setup s = setup_from_config(c, weil_mutation(o));
  GradedElement x;
  try {
    x = s.a().parse(expr);
  } catch (const std::exception& e) {
    std::cerr << "error: cannot parse element: " << e.what() << "\n";
    return 2;
  }
  GradedElement out;
  if (map_name == "psi") {
    out = psi_op(s)(x);
  } else if (map_name == "psi_inv") {
    out = psi_inv_op(s)(x);
  } else if (map_name == "d_C") {
    try {
      out = apply_cartan_d(s, x);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  } else if (map_name == "delta") {
    out = delta(s, brst_mutation(o))(x);
  } else {  // D
    out = s.a().apply_derivation(total_d(s), x);
  }
  std::cout << s.a().to_string(out) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact twisted Cartan/BRST/Weil equivariant cohomology"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string which = "all";
  bool tsv = false;
  std::string map_name, expr;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Lie/gdga/Weil identity suites");
  add_common(validate_cmd, o);

  CLI::App* check_cmd =
      app.add_subcommand("check", "Named lemma/theorem checks");
  add_common(check_cmd, o);
  check_cmd->add_option("which", which, "lemma3..lemma8, thm1..thm3, all")
      ->check(CLI::IsMember({"lemma3", "lemma4", "lemma5", "lemma6", "lemma7",
                             "lemma8", "thm1", "thm2", "thm3", "all"}));

  CLI::App* coh_cmd =
      app.add_subcommand("cohomology", "Equivariant Betti table");
  add_common(coh_cmd, o);
  coh_cmd->add_flag("--tsv", tsv, "Raw TSV only (no comment header)");

  CLI::App* apply_cmd =
      app.add_subcommand("apply", "Apply a named operator to an element");
  add_common(apply_cmd, o);
  apply_cmd->add_option("map", map_name, "psi|psi_inv|d_C|delta|D")
      ->required()
      ->check(CLI::IsMember({"psi", "psi_inv", "d_C", "delta", "D"}));
  apply_cmd->add_option("expr", expr, "Element in the printing grammar")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o);
    if (check_cmd->parsed()) return cmd_check(o, which);
    if (coh_cmd->parsed()) return cmd_cohomology(o, tsv);
    return cmd_apply(o, map_name, expr);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
