#pragma once

#include "eqcoh/graded.hpp"
#include "eqcoh/lie.hpp"
#include "eqcoh/report.hpp"

namespace eqcoh {

/// Documented formula mutations for negative testing (--mutate).
enum class WeilMutation {
  none,
  drop_phi_in_dW,  // d_W theta^i loses its phi^i term
};

/// W(g) with contraction i_k, differential d_W and Lie derivative L_k as
/// derivations on the ambient algebra (acting on the Weil factor only).
///
///   d_W theta^i = -1/2 sum_{j,k} c^i_{jk} theta^j theta^k + phi^i
///   d_W phi^i   = -sum_{j,k} c^i_{jk} theta^j phi^k
///   i_{e_r} theta^s = delta_r^s,  i_{e_r} phi^s = 0
///   L_k = {d_W, i_k}  (stored with the explicit generator images
///                      L_k theta^j = -sum_m c^j_{km} theta^m and the same
///                      on phi; the constructor cross-checks the two).
struct WeilAlgebra {
  LieAlgebraSpec lie;
  Derivation d_w;                    // odd, degree +1
  std::vector<Derivation> i_k;       // odd, degree -1
  std::vector<Derivation> l_k;       // even, degree 0
  WeilMutation mutation = WeilMutation::none;
};

WeilAlgebra build_weil(const Algebra& alg, const LieAlgebraSpec& lie,
                       WeilMutation mutation = WeilMutation::none);

GradedElement d_w(const Algebra& alg, const WeilAlgebra& w,
                  const GradedElement& x);
GradedElement contract(const Algebra& alg, const WeilAlgebra& w, int k,
                       const GradedElement& x);
GradedElement lie_derivative(const Algebra& alg, const WeilAlgebra& w, int k,
                             const GradedElement& x);

/// For X = sum X^k e_k: i_X = sum X^k i_k, and likewise L_X.
Operator contract_op(const Algebra& alg, const WeilAlgebra& w,
                     const LieVector& x);
Operator lie_op(const Algebra& alg, const WeilAlgebra& w, const LieVector& x);

/// Verifies the six Weil identities (d_W^2 = 0; [L_X, d_W] = 0;
/// {i_X, i_Y} = 0; [L_X, i_Y] = i_{[X,Y]}; [L_X, L_Y] = L_{[X,Y]};
/// {d_W, i_X} = L_X) on every pure-Weil basis monomial of degree <= N for
/// all basis pairs (X, Y).  Requires truncation >= N + 2.
ValidationReport check_weil_identities(const Algebra& alg,
                                       const WeilAlgebra& w, int N);

}  // namespace eqcoh
