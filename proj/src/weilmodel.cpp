#include "eqcoh/weilmodel.hpp"

#include "eqcoh/cohomology.hpp"

namespace eqcoh {

namespace {

// Merges the Weil-side generator images of `weil_part` into the module
// action `mod_part`; both must have the same parity.
Derivation merge(const Derivation& weil_part, const Derivation& mod_part) {
  Derivation out = weil_part;
  out.mod_img = mod_part.mod_img;
  return out;
}

}  // namespace

Derivation total_d(const Setup& s) { return merge(s.weil.d_w, mod_d(s)); }

Derivation i_tilde(const Setup& s, int k) {
  return merge(s.weil.i_k[k - 1], mod_iota(s, k));
}

Derivation l_tilde(const Setup& s, int k) {
  return merge(s.weil.l_k[k - 1], mod_lie(s, k));
}

Derivation i_tilde_twisted_gen(const Setup& s, int k) {
  return merge(s.weil.i_k[k - 1], mod_iota_twisted(s, k));
}

Derivation l_tilde_twisted_gen(const Setup& s, int k) {
  return merge(s.weil.l_k[k - 1], mod_lie_twisted(s, k));
}

Operator i_tilde_twisted(const Setup& s, const LieVector& X,
                         const LieVector& Y) {
  if (X.dim() != s.n() || Y.dim() != s.n())
    throw std::invalid_argument("i_tilde_twisted: dimension mismatch");
  const Algebra& a = s.a();
  Operator out = Operator::zero();
  out.degree = -1;
  for (int k = 1; k <= s.n(); ++k) {
    Scalar xc = X.coeff[k - 1];
    if (!xc.is_zero()) {
      out = add(out, scale(xc, Operator::from_derivation(
                                   a, s.weil.i_k[k - 1])));
      out = add(out,
                scale(xc, Operator::from_derivation(a, mod_iota(s, k))));
    }
    Scalar yc = Scalar::i() * Y.coeff[k - 1];
    if (!yc.is_zero())
      out = add(out,
                scale(yc, Operator::from_derivation(a, mod_iota(s, k))));
  }
  return out;
}

Operator l_tilde_twisted(const Setup& s, const LieVector& X,
                         const LieVector& Y) {
  const Algebra& a = s.a();
  Operator out = Operator::zero();
  for (int k = 1; k <= s.n(); ++k) {
    Scalar xc = X.coeff[k - 1];
    if (!xc.is_zero()) {
      out = add(out, scale(xc, Operator::from_derivation(
                                   a, s.weil.l_k[k - 1])));
      out = add(out, scale(xc, Operator::from_derivation(a, mod_lie(s, k))));
    }
    Scalar yc = Scalar::i() * Y.coeff[k - 1];
    if (!yc.is_zero())
      out = add(out, scale(yc, Operator::from_derivation(a, mod_lie(s, k))));
  }
  return out;
}

ValidationReport tensor_identities_check(const Setup& s, int N) {
  ValidationReport report;
  const Algebra& a = s.a();
  int n = s.n();
  Operator D = Operator::from_derivation(a, total_d(s));
  std::vector<Operator> iop, lop;
  for (int k = 1; k <= n; ++k) {
    iop.push_back(Operator::from_derivation(a, i_tilde(s, k)));
    lop.push_back(Operator::from_derivation(a, l_tilde(s, k)));
  }
  auto tilde_for = [&](const LieVector& v, bool contraction) {
    Operator out = Operator::zero();
    for (int k = 1; k <= n; ++k) {
      if (v.coeff[k - 1].is_zero()) continue;
      out = add(out, scale(v.coeff[k - 1],
                           contraction ? iop[k - 1] : lop[k - 1]));
    }
    return out;
  };
  auto check = [&](const std::string& name, const Operator& op,
                   const GradedElement& x) {
    GradedElement r = op(x);
    if (!r.empty())
      report.add(name + " @ " + a.to_string(x), "residual " + a.to_string(r));
  };
  for (int d = 0; d <= N; ++d)
    for (const Monomial& m : a.basis_of_degree(d)) {
      GradedElement x = a.monomial(m);
      check("D^2", compose(D, D), x);
      for (int j = 0; j < n; ++j) {
        check("[L~_" + std::to_string(j + 1) + ",D]", commutator(lop[j], D),
              x);
        check("{D,i~_" + std::to_string(j + 1) + "}-L~",
              sub(anticommutator(D, iop[j]), lop[j]), x);
        for (int k = 0; k < n; ++k) {
          std::string jk =
              "_" + std::to_string(j + 1) + "," + std::to_string(k + 1);
          LieVector br = bracket(s.lie, LieVector::basis(n, j + 1),
                                 LieVector::basis(n, k + 1));
          check("{i~,i~}" + jk, anticommutator(iop[j], iop[k]), x);
          check("[L~,i~]-i~_bracket" + jk,
                sub(commutator(lop[j], iop[k]), tilde_for(br, true)), x);
          check("[L~,L~]-L~_bracket" + jk,
                sub(commutator(lop[j], lop[k]), tilde_for(br, false)), x);
        }
      }
    }
  return report;
}

ValidationReport twisted_cartan_formula_check(const Setup& s, int N) {
  ValidationReport report;
  const Algebra& a = s.a();
  int n = s.n();
  Operator D = Operator::from_derivation(a, total_d(s));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      LieVector X = LieVector::basis(n, j);
      LieVector Y = LieVector::basis(n, k);
      Operator lhs = anticommutator(D, i_tilde_twisted(s, X, Y));
      Operator rhs = l_tilde_twisted(s, X, Y);
      Operator diff = sub(lhs, rhs);
      for (int d = 0; d <= N; ++d)
        for (const Monomial& m : a.basis_of_degree(d)) {
          GradedElement r = diff(a.monomial(m));
          if (!r.empty())
            report.add("{D,i~_{e" + std::to_string(j) + "+i*e" +
                           std::to_string(k) + "}} @ " +
                           a.to_string(a.monomial(m)),
                       "residual " + a.to_string(r));
        }
    }
  return report;
}

std::vector<std::vector<GradedElement>> basic_subspace(const Setup& s, int N,
                                                       BasicMode mode) {
  const Algebra& a = s.a();
  std::vector<Operator> ops;
  for (int k = 1; k <= s.n(); ++k) {
    if (mode == BasicMode::all_pairs) {
      // X, Y range independently: the four separate generator families.
      ops.push_back(Operator::from_derivation(a, i_tilde(s, k)));
      ops.push_back(Operator::from_derivation(a, mod_iota(s, k)));
      ops.push_back(Operator::from_derivation(a, l_tilde(s, k)));
      ops.push_back(Operator::from_derivation(a, mod_lie(s, k)));
    } else {
      ops.push_back(Operator::from_derivation(a, i_tilde_twisted_gen(s, k)));
      ops.push_back(Operator::from_derivation(a, l_tilde_twisted_gen(s, k)));
    }
  }
  std::vector<std::vector<GradedElement>> out;
  for (int d = 0; d <= N; ++d)
    out.push_back(joint_kernel(a, a.basis_of_degree(d), ops));
  return out;
}

ValidationReport check_basic_preserved(const Setup& s, int N, BasicMode mode) {
  ValidationReport report;
  const Algebra& a = s.a();
  Operator D = Operator::from_derivation(a, total_d(s));
  auto bases = basic_subspace(s, N, mode);
  for (int d = 0; d < N; ++d) {
    try {
      matrix_of(a, D, bases[d], bases[d + 1], d);
    } catch (const std::runtime_error& e) {
      report.add("D on basic, degree " + std::to_string(d), e.what());
    }
  }
  return report;
}

}  // namespace eqcoh
