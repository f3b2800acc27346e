#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "eqcoh/report.hpp"
#include "eqcoh/scalar.hpp"

namespace eqcoh {

/// A Lie algebra given by structure constants c^i_{jk} (so that
/// [e_j, e_k] = sum_i c^i_{jk} e_i), together with the twist matrix f_i^j.
/// Constants are stored sparsely with j < k only; the j > k value is
/// derived by antisymmetry.  All indices are 1-based, matching the usual
/// index conventions.
struct LieAlgebraSpec {
  int dim = 0;
  std::map<std::tuple<int, int, int>, Rational> c;  // (i,j,k) with j < k
  std::vector<std::vector<Rational>> f;             // f[i-1][j-1] = f_i^j

  LieAlgebraSpec() = default;
  explicit LieAlgebraSpec(int n) : dim(n) { set_zero_twist(); }

  void set_zero_twist() {
    f.assign(dim, std::vector<Rational>(dim, Rational(0)));
  }
  void set_constant(int i, int j, int k, Rational value);

  /// c^i_{jk} for arbitrary j, k (antisymmetry applied).
  Rational structure(int i, int j, int k) const;

  Rational twist(int i, int j) const { return f[i - 1][j - 1]; }
  bool twist_is_zero() const;
};

/// Element X = sum_i coeff[i-1] * e_i of the (complexified) algebra.
struct LieVector {
  std::vector<Scalar> coeff;

  LieVector() = default;
  explicit LieVector(int n) : coeff(n) {}
  static LieVector basis(int n, int k) {
    LieVector v(n);
    v.coeff[k - 1] = Scalar(1);
    return v;
  }
  int dim() const { return static_cast<int>(coeff.size()); }
};

/// Checks antisymmetry of the stored constants and the Jacobi identity on
/// every index tuple; the report locates each violated instance.
ValidationReport validate(const LieAlgebraSpec& spec);

/// [X, Y]^i = sum_{j,k} c^i_{jk} X^j Y^k.
LieVector bracket(const LieAlgebraSpec& spec, const LieVector& x,
                  const LieVector& y);

/// The twisted partner Y of X: Y^i = sum_j f_j^i X^j.
LieVector twist_apply(const LieAlgebraSpec& spec, const LieVector& x);

/// Reports every (i,k) where f fails to commute with the adjoint action,
/// i.e. sum_m (c^j_{im} f_m^k - f_j^m c^k_{im}) != 0 for some j.
ValidationReport twist_equivariance_check(const LieAlgebraSpec& spec);

// Bundled presets.  su2 uses c^i_{jk} = epsilon_{ijk}; so3 is an alias.
LieAlgebraSpec preset_abelian(int n);
LieAlgebraSpec preset_su2();
LieAlgebraSpec preset_so3();
LieAlgebraSpec preset_heisenberg3();

/// Resolves a preset by name ("abelian1", "abelian2", ..., "su2", "so3",
/// "heisenberg3"); throws std::invalid_argument for unknown names.
LieAlgebraSpec preset_by_name(const std::string& name);

}  // namespace eqcoh
