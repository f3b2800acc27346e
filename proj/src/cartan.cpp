#include "eqcoh/cartan.hpp"

#include <stdexcept>

#include "eqcoh/cohomology.hpp"

namespace eqcoh {

void require_theta_free(const Setup& s, const GradedElement& x) {
  for (const auto& [m, c] : x)
    if (m.theta != 0)
      throw std::invalid_argument("expected a theta-free element, got " +
                                  s.a().to_string(x));
}

namespace {

Scalar contraction_sign(const Setup& s) {
  return s.sign == SignConvention::minus ? Scalar(-1) : Scalar(1);
}

}  // namespace

Operator cartan_d(const Setup& s) {
  const Algebra& a = s.a();
  Operator out = Operator::from_derivation(a, mod_d(s));
  Scalar sgn = contraction_sign(s);
  for (int i = 1; i <= s.n(); ++i) {
    Operator term = compose(Operator::mul_by(a, a.phi(i), 2),
                            Operator::from_derivation(a, mod_iota_twisted(s, i)));
    out = add(out, scale(sgn, term));
  }
  out.degree = 1;
  const Setup* sp = &s;
  auto inner = out.fn;
  out.fn = [sp, inner](const GradedElement& x) {
    require_theta_free(*sp, x);
    return inner(x);
  };
  return out;
}

GradedElement apply_cartan_d(const Setup& s, const GradedElement& x) {
  return cartan_d(s)(x);
}

Operator cartan_curvature(const Setup& s) {
  const Algebra& a = s.a();
  Operator out = Operator::zero();
  for (int i = 1; i <= s.n(); ++i) {
    Operator term = compose(Operator::mul_by(a, a.phi(i), 2),
                            Operator::from_derivation(a, mod_lie_twisted(s, i)));
    out = add(out, scale(contraction_sign(s), term));
  }
  out.degree = 2;
  return out;
}

ValidationReport cartan_d_squared_defect(const Setup& s, int N) {
  ValidationReport report;
  const Algebra& a = s.a();
  Operator dc = cartan_d(s);
  Operator curv = cartan_curvature(s);
  for (int d = 0; d <= N; ++d)
    for (const Monomial& m : a.cartan_basis_of_degree(d)) {
      GradedElement x = a.monomial(m);
      GradedElement defect = dc(dc(x)) - curv(x);
      if (!defect.empty())
        report.add("d_C^2 @ " + a.to_string(x),
                   "defect " + a.to_string(defect));
    }
  return report;
}

std::vector<std::vector<GradedElement>> invariant_subspace(
    const Setup& s, int N, InvarianceMode mode) {
  const Algebra& a = s.a();
  std::vector<Operator> ops;
  if (mode == InvarianceMode::paper_literal) {
    Operator sum = Operator::zero();
    for (int i = 1; i <= s.n(); ++i)
      sum = add(sum, compose(Operator::mul_by(a, a.phi(i), 2),
                             Operator::from_derivation(
                                 a, mod_lie_twisted(s, i))));
    sum.degree = 2;
    ops.push_back(sum);
  } else {
    for (int k = 1; k <= s.n(); ++k) {
      // Coadjoint action on the phi's plus the twisted module action.
      Derivation der = mod_lie_twisted(s, k);
      der.phi_img = s.weil.l_k[k - 1].phi_img;
      ops.push_back(Operator::from_derivation(a, der));
    }
  }
  std::vector<std::vector<GradedElement>> out;
  for (int d = 0; d <= N; ++d)
    out.push_back(joint_kernel(a, a.cartan_basis_of_degree(d), ops));
  return out;
}

ModuleVec evaluate_at(const Setup& s, const GradedElement& x,
                      const LieVector& X) {
  if (X.dim() != s.n())
    throw std::invalid_argument("evaluate_at: dimension mismatch");
  require_theta_free(s, x);
  ModuleVec out;
  for (const auto& [m, c] : x) {
    Scalar coef = c;
    for (int i = 0; i < s.n(); ++i)
      for (int e = 0; e < m.phi[i]; ++e) coef *= X.coeff[i];
    if (coef.is_zero()) continue;
    auto [it, inserted] = out.emplace(m.mod, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

ModuleVec evaluation_differential(const Setup& s, const LieVector& X,
                                  const ModuleVec& v) {
  const GdgaInstance& mod = *s.mod;
  LieVector Y = twist_apply(s.lie, X);
  Scalar sgn = contraction_sign(s);
  ModuleVec out;
  auto acc = [&out](const Scalar& c, const ModuleVec& w) {
    for (const auto& [j, x] : w) {
      auto [it, inserted] = out.emplace(j, c * x);
      if (!inserted) {
        it->second += c * x;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  };
  for (const auto& [i, c] : v) {
    acc(c, mod.d(i));
    for (int k = 1; k <= s.n(); ++k) {
      Scalar cx = X.coeff[k - 1] + Scalar::i() * Y.coeff[k - 1];
      if (!cx.is_zero()) acc(sgn * cx * c, mod.iota(k, i));
    }
  }
  return out;
}

ValidationReport evaluation_intertwine_check(const Setup& s, int N) {
  ValidationReport report;
  const Algebra& a = s.a();
  Operator dc = cartan_d(s);
  for (int k = 1; k <= s.n(); ++k) {
    LieVector X = LieVector::basis(s.n(), k);
    for (int d = 0; d <= N; ++d)
      for (const Monomial& m : a.cartan_basis_of_degree(d)) {
        GradedElement x = a.monomial(m);
        ModuleVec lhs = evaluate_at(s, dc(x), X);
        ModuleVec rhs = evaluation_differential(s, X, evaluate_at(s, x, X));
        for (const auto& [j, c] : rhs) {
          auto [it, inserted] = lhs.emplace(j, -c);
          if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) lhs.erase(it);
          }
        }
        if (!lhs.empty())
          report.add("evaluate(e_" + std::to_string(k) + ") @ " +
                         a.to_string(x),
                     "lhs != rhs");
      }
  }
  return report;
}

}  // namespace eqcoh
