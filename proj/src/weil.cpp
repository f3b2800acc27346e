#include "eqcoh/weil.hpp"

#include <stdexcept>

namespace eqcoh {

WeilAlgebra build_weil(const Algebra& alg, const LieAlgebraSpec& lie,
                       WeilMutation mutation) {
  if (alg.n() != lie.dim)
    throw std::invalid_argument("build_weil: dimension mismatch");
  int n = lie.dim;
  WeilAlgebra w;
  w.lie = lie;
  w.mutation = mutation;

  w.d_w.degree = 1;
  w.d_w.theta_img.resize(n);
  w.d_w.phi_img.resize(n);
  Rational half(1, 2);
  for (int i = 1; i <= n; ++i) {
    GradedElement dtheta;
    if (mutation != WeilMutation::drop_phi_in_dW)
      dtheta = alg.phi(i);
    GradedElement dphi;
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Rational c = lie.structure(i, j, k);
        if (c == 0) continue;
        dtheta = dtheta - (Scalar(c * half) *
                           alg.mul(alg.theta(j), alg.theta(k)));
        dphi = dphi - (Scalar(c) * alg.mul(alg.theta(j), alg.phi(k)));
      }
    w.d_w.theta_img[i - 1] = dtheta;
    w.d_w.phi_img[i - 1] = dphi;
  }

  w.i_k.resize(n);
  w.l_k.resize(n);
  for (int k = 1; k <= n; ++k) {
    Derivation& ik = w.i_k[k - 1];
    ik.degree = -1;
    ik.theta_img.resize(n);
    ik.phi_img.resize(n);
    ik.theta_img[k - 1] = alg.one();

    Derivation& lk = w.l_k[k - 1];
    lk.degree = 0;
    lk.theta_img.resize(n);
    lk.phi_img.resize(n);
    for (int j = 1; j <= n; ++j) {
      GradedElement lt, lp;
      for (int m = 1; m <= n; ++m) {
        Rational c = lie.structure(j, k, m);
        if (c == 0) continue;
        lt = lt - (Scalar(c) * alg.theta(m));
        lp = lp - (Scalar(c) * alg.phi(m));
      }
      lk.theta_img[j - 1] = lt;
      lk.phi_img[j - 1] = lp;
    }
  }

  // Cross-validate the explicit Lie-derivative images against {d_W, i_k}
  // on every generator (skipped under a deliberate mutation).
  if (mutation == WeilMutation::none) {
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) {
        auto anti = [&](const GradedElement& g) {
          return alg.apply_derivation(w.d_w,
                                      alg.apply_derivation(w.i_k[k - 1], g)) +
                 alg.apply_derivation(w.i_k[k - 1],
                                      alg.apply_derivation(w.d_w, g));
        };
        if (anti(alg.theta(j)) !=
                alg.apply_derivation(w.l_k[k - 1], alg.theta(j)) ||
            anti(alg.phi(j)) !=
                alg.apply_derivation(w.l_k[k - 1], alg.phi(j)))
          throw std::logic_error(
              "build_weil: {d_W, i_k} disagrees with the Lie derivative "
              "images on generators");
      }
  }
  return w;
}

GradedElement d_w(const Algebra& alg, const WeilAlgebra& w,
                  const GradedElement& x) {
  return alg.apply_derivation(w.d_w, x);
}

GradedElement contract(const Algebra& alg, const WeilAlgebra& w, int k,
                       const GradedElement& x) {
  return alg.apply_derivation(w.i_k[k - 1], x);
}

GradedElement lie_derivative(const Algebra& alg, const WeilAlgebra& w, int k,
                             const GradedElement& x) {
  return alg.apply_derivation(w.l_k[k - 1], x);
}

Operator contract_op(const Algebra& alg, const WeilAlgebra& w,
                     const LieVector& x) {
  Operator out = Operator::zero();
  out.degree = -1;
  for (int k = 1; k <= alg.n(); ++k) {
    if (x.coeff[k - 1].is_zero()) continue;
    out = add(out, scale(x.coeff[k - 1],
                         Operator::from_derivation(alg, w.i_k[k - 1])));
  }
  return out;
}

Operator lie_op(const Algebra& alg, const WeilAlgebra& w, const LieVector& x) {
  Operator out = Operator::zero();
  for (int k = 1; k <= alg.n(); ++k) {
    if (x.coeff[k - 1].is_zero()) continue;
    out = add(out, scale(x.coeff[k - 1],
                         Operator::from_derivation(alg, w.l_k[k - 1])));
  }
  return out;
}

ValidationReport check_weil_identities(const Algebra& alg,
                                       const WeilAlgebra& w, int N) {
  if (N + 2 > alg.truncation())
    throw std::invalid_argument(
        "check_weil_identities: truncation must be at least N + 2");
  ValidationReport report;
  int n = alg.n();
  Operator dw = Operator::from_derivation(alg, w.d_w);
  std::vector<Operator> iop, lop;
  for (int k = 0; k < n; ++k) {
    iop.push_back(Operator::from_derivation(alg, w.i_k[k]));
    lop.push_back(Operator::from_derivation(alg, w.l_k[k]));
  }
  auto check = [&](const std::string& name, const Operator& op,
                   const GradedElement& x, const Monomial& m) {
    GradedElement r = op(x);
    if (!r.empty())
      report.add(name + " @ " + alg.to_string(alg.monomial(m)),
                 "residual " + alg.to_string(r));
  };
  for (int d = 0; d <= N; ++d) {
    for (const Monomial& m : alg.basis_of_degree(d)) {
      if (m.mod != alg.module().unit) continue;
      GradedElement x = alg.monomial(m);
      check("d_W^2", compose(dw, dw), x, m);
      for (int j = 0; j < n; ++j) {
        check("[L_" + std::to_string(j + 1) + ",d_W]",
              commutator(lop[j], dw), x, m);
        check("{d_W,i_" + std::to_string(j + 1) + "}-L",
              sub(anticommutator(dw, iop[j]), lop[j]), x, m);
        for (int k = 0; k < n; ++k) {
          std::string jk =
              "_" + std::to_string(j + 1) + "," + std::to_string(k + 1);
          check("{i,i}" + jk, anticommutator(iop[j], iop[k]), x, m);
          LieVector br = bracket(w.lie, LieVector::basis(n, j + 1),
                                 LieVector::basis(n, k + 1));
          check("[L,i]-i_bracket" + jk,
                sub(commutator(lop[j], iop[k]), contract_op(alg, w, br)), x,
                m);
          check("[L,L]-L_bracket" + jk,
                sub(commutator(lop[j], lop[k]), lie_op(alg, w, br)), x, m);
        }
      }
    }
  }
  return report;
}

}  // namespace eqcoh
