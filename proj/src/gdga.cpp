#include "eqcoh/gdga.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "eqcoh/graded.hpp"
#include "eqcoh/weil.hpp"

namespace eqcoh {

int GdgaInstance::max_degree() const {
  int d = 0;
  for (int v : degree) d = std::max(d, v);
  return d;
}

std::vector<int> GdgaInstance::basis_of_degree(int d) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (degree[i] == d) out.push_back(i);
  return out;
}

GdgaPtr make_point(int lie_dim) {
  auto a = std::make_shared<GdgaInstance>();
  a->kind = "point";
  a->lie_dim = lie_dim;
  a->degree = {0};
  a->weight = {0};
  a->label = {"1"};
  a->unit = 0;
  a->d_tab = {ModuleVec{}};
  a->iota_tab.assign(lie_dim, {ModuleVec{}});
  a->lie_tab.assign(lie_dim, {ModuleVec{}});
  a->mul_fn = [](int, int) { return ModuleVec{{0, Scalar(1)}}; };
  return a;
}

namespace {

// Internal monomial of the polynomial-forms instance: x^alpha dx_S.
struct FormMono {
  std::vector<int> alpha;
  uint32_t forms = 0;

  bool operator<(const FormMono& o) const {
    int da = std::popcount(forms), db = std::popcount(o.forms);
    if (da != db) return da < db;
    int wa = 0, wb = 0;
    for (int e : alpha) wa += e;
    for (int e : o.alpha) wb += e;
    if (wa != wb) return wa < wb;
    if (alpha != o.alpha) return alpha < o.alpha;
    return forms < o.forms;
  }
  bool operator==(const FormMono& o) const {
    return alpha == o.alpha && forms == o.forms;
  }
};

int form_merge_sign(uint32_t a, uint32_t b) {
  int inv = 0;
  for (int p = 0; p < 32; ++p)
    if (b & (1u << p)) inv += std::popcount(a >> (p + 1));
  return inv % 2 ? -1 : 1;
}

void enumerate_alphas(int m, int budget, std::vector<int>& cur, int pos,
                      std::vector<std::vector<int>>& out) {
  if (pos == m) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur[pos] = e;
    enumerate_alphas(m, budget - e, cur, pos + 1, out);
  }
}

struct FormTable {
  std::vector<FormMono> basis;
  std::map<FormMono, int> index;
  int cap = 0;

  int weight(const FormMono& f) const {
    int w = std::popcount(f.forms);
    for (int e : f.alpha) w += e;
    return w;
  }
};

}  // namespace

ValidationReport check_homomorphism(const LinearActionSpec& action,
                                    const LieAlgebraSpec& lie) {
  ValidationReport report;
  int n = lie.dim, m = action.m;
  if (static_cast<int>(action.rho.size()) != n) {
    report.add("rho", "expected one matrix per Lie algebra generator");
    return report;
  }
  auto entry = [&](int k, int a, int b) { return action.rho[k][a][b]; };
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          Scalar lhs;
          for (int i = 0; i < n; ++i) {
            Rational c = lie.structure(i + 1, j + 1, k + 1);
            if (c != 0) lhs += Scalar(c) * entry(i, a, b);
          }
          Scalar rhs;
          for (int t = 0; t < m; ++t)
            rhs += entry(j, a, t) * entry(k, t, b) -
                   entry(k, a, t) * entry(j, t, b);
          if (lhs != rhs)
            report.add("rho([e" + std::to_string(j + 1) + ",e" +
                           std::to_string(k + 1) + "])(" + std::to_string(a) +
                           "," + std::to_string(b) + ")",
                       "homomorphism defect " + to_string(lhs - rhs));
        }
  return report;
}

GdgaPtr make_polynomial_forms(const LinearActionSpec& action,
                              const LieAlgebraSpec& lie,
                              bool validate_action) {
  if (action.poly_degree_cap < 0)
    throw std::invalid_argument("make_polynomial_forms: negative cap");
  if (action.m < 1)
    throw std::invalid_argument("make_polynomial_forms: need m >= 1");
  if (validate_action) {
    ValidationReport hom = check_homomorphism(action, lie);
    if (!hom.ok())
      throw std::invalid_argument(
          "make_polynomial_forms: rho is not a Lie algebra homomorphism:\n" +
          hom.summary());
  }

  int m = action.m, n = lie.dim, cap = action.poly_degree_cap;
  auto table = std::make_shared<FormTable>();
  table->cap = cap;
  for (uint32_t forms = 0; forms < (1u << m); ++forms) {
    int fd = std::popcount(forms);
    if (fd > cap) continue;
    std::vector<std::vector<int>> alphas;
    std::vector<int> cur(m, 0);
    enumerate_alphas(m, cap - fd, cur, 0, alphas);
    for (auto& a : alphas) table->basis.push_back({a, forms});
  }
  std::sort(table->basis.begin(), table->basis.end());
  for (int i = 0; i < static_cast<int>(table->basis.size()); ++i)
    table->index[table->basis[i]] = i;

  auto inst = std::make_shared<GdgaInstance>();
  inst->kind = "polynomial_forms";
  inst->lie_dim = n;
  int size = static_cast<int>(table->basis.size());
  for (int i = 0; i < size; ++i) {
    const FormMono& f = table->basis[i];
    inst->degree.push_back(std::popcount(f.forms));
    inst->weight.push_back(table->weight(f));
    std::string lab;
    for (int a = 0; a < m; ++a) {
      if (f.alpha[a] == 0) continue;
      if (!lab.empty()) lab += "*";
      lab += "x" + std::to_string(a + 1);
      if (f.alpha[a] > 1) lab += "^" + std::to_string(f.alpha[a]);
    }
    for (int a = 0; a < m; ++a) {
      if (!(f.forms & (1u << a))) continue;
      if (!lab.empty()) lab += "*";
      lab += "dx" + std::to_string(a + 1);
    }
    inst->label.push_back(lab.empty() ? "1" : lab);
  }
  FormMono unit_m{std::vector<int>(m, 0), 0};
  inst->unit = table->index.at(unit_m);

  // d(x^alpha dx_S) = sum_a alpha_a x^(alpha - e_a) dx_a ^ dx_S.
  inst->d_tab.resize(size);
  for (int i = 0; i < size; ++i) {
    const FormMono& f = table->basis[i];
    ModuleVec out;
    for (int a = 0; a < m; ++a) {
      if (f.alpha[a] == 0 || (f.forms & (1u << a))) continue;
      FormMono g = f;
      g.alpha[a] -= 1;
      g.forms |= 1u << a;
      int sign = form_merge_sign(1u << a, f.forms);
      out[table->index.at(g)] = Scalar(f.alpha[a] * sign);
    }
    inst->d_tab[i] = out;
  }

  // iota_k(dx_a) = -sum_b rho(e_k)_{ab} x_b, extended as an odd derivation.
  inst->iota_tab.assign(n, std::vector<ModuleVec>(size));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < size; ++i) {
      const FormMono& f = table->basis[i];
      ModuleVec out;
      int t = 0;
      for (int a = 0; a < m; ++a) {
        if (!(f.forms & (1u << a))) continue;
        int pos_sign = (t % 2) ? -1 : 1;
        ++t;
        for (int b = 0; b < m; ++b) {
          Scalar coef = -action.rho[k][a][b];
          if (coef.is_zero()) continue;
          FormMono g = f;
          g.forms &= ~(1u << a);
          g.alpha[b] += 1;
          ModuleVec::key_type idx = table->index.at(g);
          Scalar add = Scalar(pos_sign) * coef;
          auto [it, inserted] = out.emplace(idx, add);
          if (!inserted) {
            it->second += add;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
      inst->iota_tab[k][i] = out;
    }

  // L_k = d iota_k + iota_k d, tabulated from the two tables above.
  auto apply = [&](const std::vector<ModuleVec>& tab, const ModuleVec& v) {
    ModuleVec out;
    for (const auto& [i, c] : v)
      for (const auto& [j, w] : tab[i]) {
        auto [it, inserted] = out.emplace(j, c * w);
        if (!inserted) {
          it->second += c * w;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    return out;
  };
  inst->lie_tab.assign(n, std::vector<ModuleVec>(size));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < size; ++i) {
      ModuleVec a = apply(inst->d_tab, inst->iota_tab[k][i]);
      ModuleVec b = apply(inst->iota_tab[k], inst->d_tab[i]);
      for (const auto& [j, c] : b) {
        auto [it, inserted] = a.emplace(j, c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) a.erase(it);
        }
      }
      inst->lie_tab[k][i] = a;
    }

  inst->mul_fn = [table](int i, int j) -> ModuleVec {
    const FormMono& a = table->basis[i];
    const FormMono& b = table->basis[j];
    if (a.forms & b.forms) return {};
    FormMono g;
    g.alpha.resize(a.alpha.size());
    for (size_t t = 0; t < a.alpha.size(); ++t)
      g.alpha[t] = a.alpha[t] + b.alpha[t];
    g.forms = a.forms | b.forms;
    if (table->weight(g) > table->cap) return {};
    return {{table->index.at(g), Scalar(form_merge_sign(a.forms, b.forms))}};
  };
  return inst;
}

GdgaPtr make_weil_as_module(const WeilAlgebra& weil, int truncation) {
  int n = weil.lie.dim;
  auto alg = std::make_shared<Algebra>(n, truncation, make_point(n));
  // Rebuild the operators against the internal algebra so generator images
  // carry its unit monomial.
  auto w = std::make_shared<WeilAlgebra>(
      build_weil(*alg, weil.lie, weil.mutation));

  auto basis = std::make_shared<std::vector<Monomial>>();
  auto index = std::make_shared<std::map<Monomial, int>>();
  for (int d = 0; d <= truncation; ++d)
    for (const Monomial& m : alg->basis_of_degree(d)) {
      index->emplace(m, static_cast<int>(basis->size()));
      basis->push_back(m);
    }

  auto inst = std::make_shared<GdgaInstance>();
  inst->kind = "weil_as_module";
  inst->lie_dim = n;
  int size = static_cast<int>(basis->size());
  for (int i = 0; i < size; ++i) {
    inst->degree.push_back(alg->degree((*basis)[i]));
    inst->weight.push_back(0);
    inst->label.push_back(alg->to_string(alg->monomial((*basis)[i])));
  }
  inst->unit = index->at(alg->unit_monomial());

  auto tabulate = [&](const Derivation& der) {
    std::vector<ModuleVec> tab(size);
    for (int i = 0; i < size; ++i) {
      ModuleVec out;
      for (const auto& [m, c] :
           alg->apply_derivation(der, alg->monomial((*basis)[i])))
        out[index->at(m)] = c;
      tab[i] = out;
    }
    return tab;
  };
  inst->d_tab = tabulate(w->d_w);
  for (int k = 0; k < n; ++k) {
    inst->iota_tab.push_back(tabulate(w->i_k[k]));
    inst->lie_tab.push_back(tabulate(w->l_k[k]));
  }
  inst->mul_fn = [alg, basis, index](int i, int j) -> ModuleVec {
    ModuleVec out;
    for (const auto& [m, c] :
         alg->mul(alg->monomial((*basis)[i]), alg->monomial((*basis)[j])))
      out[index->at(m)] = c;
    return out;
  };
  return inst;
}

namespace {

ModuleVec tab_apply(const std::vector<ModuleVec>& tab, const ModuleVec& v) {
  ModuleVec out;
  for (const auto& [i, c] : v)
    for (const auto& [j, w] : tab[i]) {
      auto [it, inserted] = out.emplace(j, c * w);
      if (!inserted) {
        it->second += c * w;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

ModuleVec vec_add(ModuleVec a, const ModuleVec& b) {
  for (const auto& [j, c] : b) {
    auto [it, inserted] = a.emplace(j, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

ModuleVec vec_sub(ModuleVec a, const ModuleVec& b) {
  for (const auto& [j, c] : b) {
    auto [it, inserted] = a.emplace(j, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

std::string vec_str(const GdgaInstance& a, const ModuleVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [j, c] : v) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + a.label[j];
  }
  return out;
}

}  // namespace

ValidationReport check_gdga(const GdgaInstance& a, const LieAlgebraSpec& lie,
                            int N) {
  if (a.kind == "weil_as_module" && a.max_degree() < N + 2)
    throw std::invalid_argument(
        "check_gdga: weil_as_module needs truncation >= N + 2");
  ValidationReport report;
  int n = a.lie_dim;
  auto unit_vec = [&](int i) { return ModuleVec{{i, Scalar(1)}}; };
  auto d = [&](const ModuleVec& v) { return tab_apply(a.d_tab, v); };
  auto io = [&](int k, const ModuleVec& v) {
    return tab_apply(a.iota_tab[k], v);
  };
  auto li = [&](int k, const ModuleVec& v) {
    return tab_apply(a.lie_tab[k], v);
  };
  auto bracket_op = [&](const std::vector<std::vector<ModuleVec>>& tabs,
                        int j, int k, const ModuleVec& v) {
    ModuleVec out;
    for (int i = 0; i < n; ++i) {
      Rational c = lie.structure(i + 1, j + 1, k + 1);
      if (c == 0) continue;
      for (const auto& [idx, w] : tab_apply(tabs[i], v)) {
        auto [it, inserted] = out.emplace(idx, Scalar(c) * w);
        if (!inserted) {
          it->second += Scalar(c) * w;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
    return out;
  };
  for (int i = 0; i < a.size(); ++i) {
    if (a.degree[i] > N) continue;
    ModuleVec x = unit_vec(i);
    auto fail = [&](const std::string& name, const ModuleVec& r) {
      if (!r.empty())
        report.add(name + " @ " + a.label[i], "residual " + vec_str(a, r));
    };
    fail("d^2", d(d(x)));
    for (int j = 0; j < n; ++j) {
      fail("{d,iota_" + std::to_string(j + 1) + "}-L",
           vec_sub(vec_add(d(io(j, x)), io(j, d(x))), li(j, x)));
      for (int k = 0; k < n; ++k) {
        std::string jk =
            "_" + std::to_string(j + 1) + "," + std::to_string(k + 1);
        fail("{iota,iota}" + jk, vec_add(io(j, io(k, x)), io(k, io(j, x))));
        fail("[L,iota]-iota_bracket" + jk,
             vec_sub(vec_sub(li(j, io(k, x)), io(k, li(j, x))),
                     bracket_op(a.iota_tab, j, k, x)));
        fail("[L,L]-L_bracket" + jk,
             vec_sub(vec_sub(li(j, li(k, x)), li(k, li(j, x))),
                     bracket_op(a.lie_tab, j, k, x)));
      }
    }
  }
  return report;
}

}  // namespace eqcoh
