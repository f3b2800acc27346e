#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "eqcoh/cartan.hpp"
#include "eqcoh/cohomology.hpp"
#include "eqcoh/setup.hpp"

namespace eqcoh {

/// One run description: Lie algebra + twist, module, truncation and the
/// model/mode switches.  Serialized as JSON with rational-string scalars
/// ("2/3", "1/2+1/3*I"); floating point is rejected on parse.
struct RunConfig {
  // Lie algebra: either a preset name or explicit data, never both.
  std::string lie_preset;
  int lie_dim = 0;
  std::vector<std::tuple<int, int, int, Rational>> constants;  // (i,j,k,q)
  std::vector<std::vector<Rational>> twist;  // empty = zero twist

  // Module block.
  std::string module_type = "point";  // point | polynomial_forms | weil
  int ambient_dim = 0;
  std::vector<std::vector<std::vector<Scalar>>> rep;  // one matrix per e_k
  int poly_cap = 0;

  // Run parameters.
  int N = 4;
  SignConvention sign = SignConvention::minus;
  InvarianceMode invariance = InvarianceMode::paper_literal;
  BasicMode basic = BasicMode::twisted_pairs;
  Model model = Model::cartan;
};

/// Throws std::runtime_error with a located message on malformed input
/// (including any floating-point literal).
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical serialization; parse(print(c)) == print-identical round trip.
std::string print_config(const RunConfig& c);

LieAlgebraSpec lie_from_config(const RunConfig& c);
GdgaPtr module_from_config(const RunConfig& c, const LieAlgebraSpec& lie);
Setup setup_from_config(const RunConfig& c,
                        WeilMutation mutation = WeilMutation::none);

}  // namespace eqcoh
