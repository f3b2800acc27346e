#include "eqcoh/setup.hpp"

#include <stdexcept>

namespace eqcoh {

Setup make_setup(const LieAlgebraSpec& lie, GdgaPtr module, int N,
                 WeilMutation mutation, SignConvention sign) {
  if (N < 1) throw std::invalid_argument("make_setup: N must be >= 1");
  if (module->lie_dim != lie.dim)
    throw std::invalid_argument("make_setup: module built for different g");
  Setup s;
  s.lie = lie;
  s.mod = std::move(module);
  s.N = N;
  s.sign = sign;
  s.alg = std::make_shared<Algebra>(lie.dim, N + 2, s.mod);
  s.weil = build_weil(*s.alg, lie, mutation);
  return s;
}

Derivation mod_d(const Setup& s) {
  Derivation d;
  d.degree = 1;
  const GdgaInstance* mod = s.mod.get();
  const Algebra* alg = s.alg.get();
  d.mod_img = [mod, alg](int i) { return alg->module_elem(mod->d(i)); };
  return d;
}

namespace {

Derivation module_linear(const Setup& s, int degree,
                         std::function<ModuleVec(int)> table) {
  Derivation d;
  d.degree = degree;
  const Algebra* alg = s.alg.get();
  d.mod_img = [alg, table = std::move(table)](int i) {
    return alg->module_elem(table(i));
  };
  return d;
}

ModuleVec vec_axpy(ModuleVec acc, const Scalar& c, const ModuleVec& v) {
  for (const auto& [j, w] : v) {
    auto [it, inserted] = acc.emplace(j, c * w);
    if (!inserted) {
      it->second += c * w;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  return acc;
}

}  // namespace

Derivation mod_iota(const Setup& s, int k) {
  const GdgaInstance* mod = s.mod.get();
  return module_linear(s, -1, [mod, k](int i) { return mod->iota(k, i); });
}

Derivation mod_lie(const Setup& s, int k) {
  const GdgaInstance* mod = s.mod.get();
  return module_linear(s, 0, [mod, k](int i) { return mod->lie(k, i); });
}

Derivation mod_iota_twisted(const Setup& s, int k) {
  const GdgaInstance* mod = s.mod.get();
  auto lie = s.lie;
  int n = s.n();
  return module_linear(s, -1, [mod, lie, k, n](int i) {
    ModuleVec out = mod->iota(k, i);
    for (int j = 1; j <= n; ++j) {
      Rational f = lie.twist(k, j);
      if (f != 0)
        out = vec_axpy(std::move(out), Scalar::i() * Scalar(f),
                       mod->iota(j, i));
    }
    return out;
  });
}

Derivation mod_lie_twisted(const Setup& s, int k) {
  const GdgaInstance* mod = s.mod.get();
  auto lie = s.lie;
  int n = s.n();
  return module_linear(s, 0, [mod, lie, k, n](int i) {
    ModuleVec out = mod->lie(k, i);
    for (int j = 1; j <= n; ++j) {
      Rational f = lie.twist(k, j);
      if (f != 0)
        out = vec_axpy(std::move(out), Scalar::i() * Scalar(f),
                       mod->lie(j, i));
    }
    return out;
  });
}

}  // namespace eqcoh
