#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqcoh/brst.hpp"
#include "eqcoh/cohomology.hpp"
#include "eqcoh/config.hpp"

namespace py = pybind11;
using namespace eqcoh;

namespace {

std::vector<std::string> report_lines(const ValidationReport& r) {
  std::vector<std::string> out;
  for (const auto& v : r.violations) out.push_back(v.where + ": " + v.detail);
  return out;
}

std::vector<std::string> validate_text(const std::string& text) {
  RunConfig c = parse_config(text);
  ValidationReport r = validate(lie_from_config(c));
  if (!r.ok()) return report_lines(r);
  Setup s = setup_from_config(c);
  r.merge(check_gdga(*s.mod, s.lie, s.N));
  r.merge(check_weil_identities(s.a(), s.weil, s.N));
  return report_lines(r);
}

std::vector<std::string> check_text(const std::string& text,
                                    const std::string& which) {
  RunConfig c = parse_config(text);
  Setup s = setup_from_config(c);
  ValidationReport r;
  if (which == "lemma3") {
    r = cartan_d_squared_defect(s, s.N);
  } else if (which == "lemma4") {
    r = delta_squared_check(s, s.N);
  } else if (which == "lemma5") {
    r = psi_forms_agree(s, s.N);
  } else if (which == "lemma6") {
    r = tensor_identities_check(s, s.N);
  } else if (which == "lemma7") {
    r = twisted_cartan_formula_check(s, s.N);
  } else if (which == "lemma8") {
    r = check_basic_preserved(s, s.N, c.basic);
  } else if (which == "thm1") {
    r = theorem1_check(s, s.N);
  } else if (which == "thm2") {
    r = theorem2_check(s, s.N, c.invariance);
  } else if (which == "thm3") {
    RankReport rr = theorem3_check(s, s.N, c.invariance);
    r = rr.issues;
    if (!rr.ok() && r.ok()) r.add("thm3", "rank/dimension mismatch");
  } else {
    throw std::runtime_error("unknown check: " + which);
  }
  return report_lines(r);
}

std::string cohomology_tsv(const std::string& text) {
  RunConfig c = parse_config(text);
  Setup s = setup_from_config(c);
  BettiTable t = c.model == Model::weil_basic
                     ? equivariant_cohomology(s, s.N, Model::weil_basic,
                                              c.invariance, c.basic)
                     : equivariant_cohomology(s, s.N, Model::cartan,
                                              c.invariance, c.basic);
  return t.tsv();
}

std::string apply_text(const std::string& text, const std::string& op,
                       const std::string& expr) {
  RunConfig c = parse_config(text);
  Setup s = setup_from_config(c);
  const Algebra& a = s.a();
  GradedElement x = a.parse(expr);
  GradedElement y;
  if (op == "d_C") {
    y = apply_cartan_d(s, x);
  } else if (op == "delta") {
    y = delta(s).fn(x);
  } else if (op == "D") {
    y = Operator::from_derivation(a, total_d(s)).fn(x);
  } else if (op == "psi") {
    y = psi_op(s).fn(x);
  } else if (op == "psi_inv") {
    y = psi_inv_op(s).fn(x);
  } else {
    throw std::runtime_error("unknown operator: " + op);
  }
  return a.to_string(y);
}

}  // namespace

PYBIND11_MODULE(_eqcoh, m) {
  m.doc() = "exact twisted equivariant cohomology engine";
  m.def("canonical_config", [](const std::string& text) {
    return print_config(parse_config(text));
  });
  m.def("validate", &validate_text,
        "Structural checks; returns a list of violations (empty = ok).");
  m.def("check", &check_text,
        "Run one named identity check (lemma3..lemma8, thm1..thm3).");
  m.def("cohomology_tsv", &cohomology_tsv,
        "Betti table of the configured model as TSV text.");
  m.def("apply", &apply_text,
        "Apply d_C | delta | D | psi | psi_inv to a parsed element.");
}
