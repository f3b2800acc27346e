#pragma once

#include "eqcoh/report.hpp"
#include "eqcoh/setup.hpp"

namespace eqcoh {

/// Which finite operator family realizes Definition 4's "for any X, Y":
/// `all_pairs` lets X and Y range independently (equivalent to the four
/// separate generator families); `twisted_pairs` locks Y = f(X), the
/// pairing the main theorems actually use.
enum class BasicMode { all_pairs, twisted_pairs };

/// Total differential D = d_W (x) 1 + 1 (x) d.
Derivation total_d(const Setup& s);

/// i~_k = i_k (x) 1 + 1 (x) iota_k and L~_k = L_k (x) 1 + 1 (x) L_k.
Derivation i_tilde(const Setup& s, int k);
Derivation l_tilde(const Setup& s, int k);

/// The twisted generator family i_k (x) 1 + 1 (x) (iota_k + i f_k^j iota_j).
Derivation i_tilde_twisted_gen(const Setup& s, int k);
Derivation l_tilde_twisted_gen(const Setup& s, int k);

/// i~_{X + sqrt(-1) Y} = i_X (x) 1 + 1 (x) (iota_X + sqrt(-1) iota_Y),
/// and the matching Lie derivative, for arbitrary complexified X, Y.
Operator i_tilde_twisted(const Setup& s, const LieVector& X,
                         const LieVector& Y);
Operator l_tilde_twisted(const Setup& s, const LieVector& X,
                         const LieVector& Y);

/// The six tensor-algebra identities (D^2 = 0, [L~, D] = 0, {i~, i~} = 0,
/// [L~_X, i~_Y] = i~_[X,Y], [L~_X, L~_Y] = L~_[X,Y], {D, i~_X} = L~_X) on
/// every basis monomial of degree <= N.
ValidationReport tensor_identities_check(const Setup& s, int N);

/// {D, i~_{X+iY}} = L~_{X+iY} for all basis pairs (X, Y) = (e_j, e_k).
ValidationReport twisted_cartan_formula_check(const Setup& s, int N);

/// Per-degree exact bases (degrees 0..N) of the basic subspace.
std::vector<std::vector<GradedElement>> basic_subspace(const Setup& s, int N,
                                                       BasicMode mode);

/// D maps every basic basis vector of degree < N into the basic span of
/// the next degree (exact membership solve).
ValidationReport check_basic_preserved(const Setup& s, int N, BasicMode mode);

}  // namespace eqcoh
