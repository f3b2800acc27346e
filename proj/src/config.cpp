#include "eqcoh/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace eqcoh {

namespace {

using json = nlohmann::ordered_json;

void reject_floats(const json& j, const std::string& where) {
  if (j.is_number_float())
    throw std::runtime_error("floating-point literal at " + where +
                             "; use rational strings like \"2/3\"");
  if (j.is_object())
    for (auto it = j.begin(); it != j.end(); ++it)
      reject_floats(it.value(), where + "." + it.key());
  if (j.is_array())
    for (size_t i = 0; i < j.size(); ++i)
      reject_floats(j[i], where + "[" + std::to_string(i) + "]");
}

Rational rational_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string(e.what()) + " at " + where);
    }
  }
  throw std::runtime_error("expected rational (int or string) at " + where);
}

Scalar scalar_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string(e.what()) + " at " + where);
    }
  }
  throw std::runtime_error("expected scalar (int or string) at " + where);
}

int int_at(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw std::runtime_error("expected integer at " + where);
  return j.get<int>();
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string())
    throw std::runtime_error("expected string at " + where);
  return j.get<std::string>();
}

template <typename T>
T keyword_at(const json& j, const std::string& where,
             const std::vector<std::pair<std::string, T>>& table) {
  std::string v = string_at(j, where);
  for (const auto& [name, value] : table)
    if (name == v) return value;
  std::string allowed;
  for (const auto& [name, value] : table)
    allowed += (allowed.empty() ? "" : "|") + name;
  throw std::runtime_error("expected one of " + allowed + " at " + where +
                           ", got \"" + v + "\"");
}

template <typename T>
std::string keyword_name(T value,
                         const std::vector<std::pair<std::string, T>>& table) {
  for (const auto& [name, v] : table)
    if (v == value) return name;
  return "?";
}

const std::vector<std::pair<std::string, SignConvention>> kSigns = {
    {"minus", SignConvention::minus}, {"plus", SignConvention::plus}};
const std::vector<std::pair<std::string, InvarianceMode>> kInvariances = {
    {"paper", InvarianceMode::paper_literal},
    {"per-generator", InvarianceMode::per_generator}};
const std::vector<std::pair<std::string, BasicMode>> kBasics = {
    {"all-pairs", BasicMode::all_pairs},
    {"twisted-pairs", BasicMode::twisted_pairs}};
const std::vector<std::pair<std::string, Model>> kModels = {
    {"cartan", Model::cartan}, {"weil", Model::weil_basic}};

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config parse error: ") + e.what());
  }
  reject_floats(j, "config");
  if (!j.is_object()) throw std::runtime_error("config must be an object");

  RunConfig c;
  if (!j.contains("lie_algebra"))
    throw std::runtime_error("missing lie_algebra block");
  const json& lie = j["lie_algebra"];
  if (lie.contains("preset")) {
    if (lie.contains("dim") || lie.contains("constants"))
      throw std::runtime_error(
          "lie_algebra: preset and explicit data are mutually exclusive");
    c.lie_preset = string_at(lie["preset"], "lie_algebra.preset");
    try {
      preset_by_name(c.lie_preset);
    } catch (const std::exception&) {
      throw std::runtime_error("lie_algebra.preset: unknown preset " +
                               c.lie_preset);
    }
  } else {
    if (!lie.contains("dim"))
      throw std::runtime_error("lie_algebra needs a preset or explicit dim");
    c.lie_dim = int_at(lie["dim"], "lie_algebra.dim");
    if (lie.contains("constants")) {
      const json& cs = lie["constants"];
      for (size_t t = 0; t < cs.size(); ++t) {
        std::string where = "lie_algebra.constants[" + std::to_string(t) + "]";
        if (!cs[t].is_array() || cs[t].size() != 4)
          throw std::runtime_error("expected [i,j,k,\"q\"] at " + where);
        c.constants.emplace_back(int_at(cs[t][0], where),
                                 int_at(cs[t][1], where),
                                 int_at(cs[t][2], where),
                                 rational_at(cs[t][3], where));
      }
    }
  }
  if (lie.contains("twist")) {
    const json& tw = lie["twist"];
    for (size_t r = 0; r < tw.size(); ++r) {
      std::vector<Rational> row;
      for (size_t cidx = 0; cidx < tw[r].size(); ++cidx)
        row.push_back(rational_at(tw[r][cidx],
                                  "lie_algebra.twist[" + std::to_string(r) +
                                      "][" + std::to_string(cidx) + "]"));
      c.twist.push_back(std::move(row));
    }
    int dim = c.lie_preset.empty() ? c.lie_dim : preset_by_name(c.lie_preset).dim;
    if (static_cast<int>(c.twist.size()) != dim)
      throw std::runtime_error("lie_algebra.twist must be dim x dim");
    for (const auto& row : c.twist)
      if (static_cast<int>(row.size()) != dim)
        throw std::runtime_error("lie_algebra.twist must be dim x dim");
  }

  if (j.contains("module")) {
    const json& mod = j["module"];
    c.module_type = string_at(mod.at("type"), "module.type");
    if (c.module_type != "point" && c.module_type != "polynomial_forms" &&
        c.module_type != "weil")
      throw std::runtime_error(
          "module.type must be point|polynomial_forms|weil");
    if (c.module_type == "polynomial_forms") {
      c.ambient_dim = int_at(mod.at("ambient_dim"), "module.ambient_dim");
      c.poly_cap = int_at(mod.at("poly_cap"), "module.poly_cap");
      const json& rep = mod.at("rep");
      for (size_t k = 0; k < rep.size(); ++k) {
        std::vector<std::vector<Scalar>> mat;
        for (size_t r = 0; r < rep[k].size(); ++r) {
          std::vector<Scalar> row;
          for (size_t cc = 0; cc < rep[k][r].size(); ++cc)
            row.push_back(scalar_at(
                rep[k][r][cc], "module.rep[" + std::to_string(k) + "][" +
                                   std::to_string(r) + "][" +
                                   std::to_string(cc) + "]"));
          mat.push_back(std::move(row));
        }
        c.rep.push_back(std::move(mat));
      }
    }
  }

  if (j.contains("truncation")) c.N = int_at(j["truncation"], "truncation");
  if (c.N < 1) throw std::runtime_error("truncation must be >= 1");
  if (j.contains("sign")) c.sign = keyword_at(j["sign"], "sign", kSigns);
  if (j.contains("invariance"))
    c.invariance = keyword_at(j["invariance"], "invariance", kInvariances);
  if (j.contains("basic")) c.basic = keyword_at(j["basic"], "basic", kBasics);
  if (j.contains("model")) c.model = keyword_at(j["model"], "model", kModels);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string print_config(const RunConfig& c) {
  json lie;
  if (!c.lie_preset.empty()) {
    lie["preset"] = c.lie_preset;
  } else {
    lie["dim"] = c.lie_dim;
    json cs = json::array();
    for (const auto& [i, jj, k, q] : c.constants)
      cs.push_back(json::array({i, jj, k, to_string(q)}));
    lie["constants"] = cs;
  }
  if (!c.twist.empty()) {
    json tw = json::array();
    for (const auto& row : c.twist) {
      json r = json::array();
      for (const Rational& q : row) r.push_back(to_string(q));
      tw.push_back(r);
    }
    lie["twist"] = tw;
  }

  json mod;
  mod["type"] = c.module_type;
  if (c.module_type == "polynomial_forms") {
    mod["ambient_dim"] = c.ambient_dim;
    json rep = json::array();
    for (const auto& mat : c.rep) {
      json m = json::array();
      for (const auto& row : mat) {
        json r = json::array();
        for (const Scalar& s : row) r.push_back(to_string(s));
        m.push_back(r);
      }
      rep.push_back(m);
    }
    mod["rep"] = rep;
    mod["poly_cap"] = c.poly_cap;
  }

  json j;
  j["lie_algebra"] = lie;
  j["module"] = mod;
  j["truncation"] = c.N;
  j["sign"] = keyword_name(c.sign, kSigns);
  j["invariance"] = keyword_name(c.invariance, kInvariances);
  j["basic"] = keyword_name(c.basic, kBasics);
  j["model"] = keyword_name(c.model, kModels);
  return j.dump(2) + "\n";
}

LieAlgebraSpec lie_from_config(const RunConfig& c) {
  LieAlgebraSpec lie;
  if (!c.lie_preset.empty()) {
    lie = preset_by_name(c.lie_preset);
  } else {
    lie.dim = c.lie_dim;
    lie.f.assign(c.lie_dim, std::vector<Rational>(c.lie_dim, Rational(0)));
    for (const auto& [i, j, k, q] : c.constants) lie.set_constant(i, j, k, q);
  }
  if (!c.twist.empty()) {
    if (static_cast<int>(c.twist.size()) != lie.dim)
      throw std::runtime_error("twist matrix must be " +
                               std::to_string(lie.dim) + "x" +
                               std::to_string(lie.dim));
    for (const auto& row : c.twist)
      if (static_cast<int>(row.size()) != lie.dim)
        throw std::runtime_error("twist matrix must be square");
    lie.f = c.twist;
  }
  return lie;
}

GdgaPtr module_from_config(const RunConfig& c, const LieAlgebraSpec& lie) {
  if (c.module_type == "point") return make_point(lie.dim);
  if (c.module_type == "polynomial_forms") {
    LinearActionSpec action;
    action.m = c.ambient_dim;
    action.rho = c.rep;
    action.poly_degree_cap = c.poly_cap;
    if (static_cast<int>(action.rho.size()) != lie.dim)
      throw std::runtime_error("module.rep needs one matrix per generator");
    if (action.poly_degree_cap < c.N)
      throw std::runtime_error("module.poly_cap must be >= truncation");
    return make_polynomial_forms(action, lie);
  }
  // weil: wrap W(g) itself, truncated with the same headroom the ambient
  // algebra uses.
  Algebra scratch(lie.dim, c.N + 2, make_point(lie.dim));
  WeilAlgebra w = build_weil(scratch, lie);
  return make_weil_as_module(w, c.N + 2);
}

Setup setup_from_config(const RunConfig& c, WeilMutation mutation) {
  LieAlgebraSpec lie = lie_from_config(c);
  ValidationReport lie_report = validate(lie);
  if (!lie_report.ok())
    throw std::runtime_error("invalid Lie algebra: " + lie_report.summary(3));
  return make_setup(lie, module_from_config(c, lie), c.N, mutation, c.sign);
}

}  // namespace eqcoh
