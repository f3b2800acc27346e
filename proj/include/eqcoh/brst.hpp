#pragma once

#include "eqcoh/cartan.hpp"
#include "eqcoh/report.hpp"
#include "eqcoh/setup.hpp"
#include "eqcoh/weilmodel.hpp"

namespace eqcoh {

/// Documented BRST formula mutations for negative testing.
enum class BrstMutation {
  none,
  drop_theta_theta_iota,  // lose the 1/2 c theta theta iota~ curvature term
};

/// The six-term BRST differential on W(g) (x) A.  Every twisted
/// contraction is iota~_k = iota_k + sqrt(-1) f_k^j iota_j and every
/// twisted Lie derivative L~_k likewise.
Operator delta(const Setup& s,
               BrstMutation mutation = BrstMutation::none);

/// The independent route psi_inv . D . psi (the exponential-conjugation
/// form; the direction that matches the six-term formula exactly).
Operator delta_conjugated(const Setup& s);

Operator psi_op(const Setup& s);
Operator psi_inv_op(const Setup& s);

/// delta^2 = 0 on all basis monomials of degree <= N.
ValidationReport delta_squared_check(const Setup& s, int N,
                                     BrstMutation mutation = BrstMutation::none);

/// (a) all adjacent factor transpositions of the psi product agree and
/// (b) the truncated exponential series equals the product, on all basis
/// monomials of degree <= N; also checks that the m = n+1 series term
/// vanishes identically.
ValidationReport psi_forms_agree(const Setup& s, int N);

/// The Theorem 1 square: psi . delta = D . psi on all basis monomials of
/// degree <= N.
ValidationReport theorem1_check(const Setup& s, int N,
                                BrstMutation mutation = BrstMutation::none);

/// Every psi-image of an invariant Cartan basis vector satisfies the
/// twisted-pairs basic conditions; also verifies the two operator
/// identities from the proof on all basis monomials <= N.
ValidationReport theorem2_check(const Setup& s, int N, InvarianceMode mode);

/// Per-degree dimension/rank certificate that psi restricts to an
/// isomorphism (invariant Cartan subspace -> twisted-pairs basic
/// subspace), plus the theta-free-and-invariant check on psi_inv images.
struct RankReport {
  struct Row {
    int degree;
    int cartan_dim;
    int basic_dim;
    int rank;
  };
  std::vector<Row> rows;
  ValidationReport issues;

  bool ok() const;
  std::string dims_line() const;  // "0:1/1 1:0/0 ..."
};

RankReport theorem3_check(const Setup& s, int N, InvarianceMode mode);

}  // namespace eqcoh
