#pragma once

#include "eqcoh/report.hpp"
#include "eqcoh/setup.hpp"

namespace eqcoh {

/// Which reading of the invariance condition defines the Cartan complex.
/// `paper_literal` is the kernel of the single summed operator
/// sum_i phi^i (x) (L_i + sqrt(-1) f_i^j L_j); `per_generator` is the
/// joint kernel of the individual generator operators (the coadjoint
/// action on the phi's plus the twisted module Lie derivative).
enum class InvarianceMode { paper_literal, per_generator };

/// Throws std::invalid_argument if the element has a theta factor.
void require_theta_free(const Setup& s, const GradedElement& x);

/// The twisted Cartan differential
/// 1 (x) d - sum_i phi^i (x) (iota_i + sqrt(-1) f_i^j iota_j)
/// (sign of the contraction block per Setup::sign).
Operator cartan_d(const Setup& s);

GradedElement apply_cartan_d(const Setup& s, const GradedElement& x);

/// The curvature operator -sum_i phi^i (x) (L_i + sqrt(-1) f_i^j L_j) that
/// d_C^2 must equal everywhere.
Operator cartan_curvature(const Setup& s);

/// Evaluates d_C^2 against the curvature operator on every theta-free
/// basis monomial of degree <= N.
ValidationReport cartan_d_squared_defect(const Setup& s, int N);

/// Exact per-degree bases (degrees 0..N) of the invariant subalgebra in
/// the chosen mode.
std::vector<std::vector<GradedElement>> invariant_subspace(const Setup& s,
                                                           int N,
                                                           InvarianceMode mode);

/// Substitutes phi^i -> X^i, landing in the module.
ModuleVec evaluate_at(const Setup& s, const GradedElement& x,
                      const LieVector& X);

/// The paired module operator d - iota_{X^M} - sqrt(-1) iota_{Y^M} with
/// Y = twist_apply(X) (signs per Setup::sign), acting on ModuleVec.
ModuleVec evaluation_differential(const Setup& s, const LieVector& X,
                                  const ModuleVec& v);

/// Checks evaluate_at(d_C x, X) = evaluation_differential(X, evaluate_at(x))
/// on all theta-free basis monomials <= N for X over the basis vectors.
ValidationReport evaluation_intertwine_check(const Setup& s, int N);

}  // namespace eqcoh
