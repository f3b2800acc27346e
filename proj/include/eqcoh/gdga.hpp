#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eqcoh/lie.hpp"
#include "eqcoh/report.hpp"
#include "eqcoh/scalar.hpp"

namespace eqcoh {

struct WeilAlgebra;  // weil.hpp

/// Sparse vector in the module basis: index -> coefficient.
using ModuleVec = std::map<int, Scalar>;

/// A finite exactly-computable g-differential algebra A: the stand-in for
/// the de Rham complex.  Everything is table-driven: a finite graded basis,
/// a product, and the linear action of d, iota_k, L_k on each basis
/// element.  Instances are immutable once built.
struct GdgaInstance {
  std::string kind;              // point | polynomial_forms | weil_as_module
  int lie_dim = 0;               // number of contraction/Lie-derivative slots
  std::vector<int> degree;       // per basis index
  std::vector<int> weight;       // conserved auxiliary grading (see notes)
  std::vector<std::string> label;
  int unit = 0;

  std::vector<ModuleVec> d_tab;                // d(basis[i])
  std::vector<std::vector<ModuleVec>> iota_tab;  // iota_tab[k-1][i]
  std::vector<std::vector<ModuleVec>> lie_tab;   // lie_tab[k-1][i]

  // mul_fn(i, j) with the graded sign already folded in; terms whose
  // weight exceeds the instance cap are dropped.
  std::function<ModuleVec(int, int)> mul_fn;

  int size() const { return static_cast<int>(degree.size()); }
  ModuleVec d(int i) const { return d_tab[i]; }
  ModuleVec iota(int k, int i) const { return iota_tab[k - 1][i]; }
  ModuleVec lie(int k, int i) const { return lie_tab[k - 1][i]; }
  ModuleVec mul(int i, int j) const { return mul_fn(i, j); }

  int max_degree() const;
  std::vector<int> basis_of_degree(int d) const;
};

using GdgaPtr = std::shared_ptr<const GdgaInstance>;

/// A linear g-action on R^m: rho[k-1] represents e_k.  Entries live in the
/// coefficient field (a complexified representation is fine; the module is
/// complexified anyway).  The induced vector field of e_k is
/// X_k = -sum_{a,b} rho(e_k)_{ab} x_b d/dx_a, the sign coming from the
/// exp(-tX) convention for the action on functions.
struct LinearActionSpec {
  int m = 0;
  std::vector<std::vector<std::vector<Scalar>>> rho;
  int poly_degree_cap = 0;
};

/// M = point: one basis element in degree 0, all operators zero.
GdgaPtr make_point(int lie_dim);

/// Polynomial differential forms on R^m under the linear action.  Basis
/// monomials x^alpha dx_S are kept while |alpha| + |S| <= cap; this
/// combined weight is preserved by d, iota_k and L_k, so every operator is
/// exact on the stored basis (no boundary leakage).
GdgaPtr make_polynomial_forms(const LinearActionSpec& action,
                              const LieAlgebraSpec& lie,
                              bool validate_action = true);

/// Wraps W(g), truncated at the given degree, as a module over itself with
/// (d, iota, L) := (d_W, i, L).
GdgaPtr make_weil_as_module(const WeilAlgebra& weil, int truncation);

/// Verifies the g-dga identities (d^2 = 0, {iota_j, iota_k} = 0,
/// {d, iota_k} = L_k, [L_j, iota_k] = iota_{[e_j,e_k]},
/// [L_j, L_k] = L_{[e_j,e_k]}) on every basis element of degree <= N.
ValidationReport check_gdga(const GdgaInstance& a, const LieAlgebraSpec& lie,
                            int N);

/// Checks rho([e_j,e_k]) = rho(e_j)rho(e_k) - rho(e_k)rho(e_j).
ValidationReport check_homomorphism(const LinearActionSpec& action,
                                    const LieAlgebraSpec& lie);

}  // namespace eqcoh
