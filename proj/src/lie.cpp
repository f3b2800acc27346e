#include "eqcoh/lie.hpp"

#include <stdexcept>

namespace eqcoh {

void LieAlgebraSpec::set_constant(int i, int j, int k, Rational value) {
  if (i < 1 || i > dim || j < 1 || j > dim || k < 1 || k > dim)
    throw std::out_of_range("LieAlgebraSpec: index out of range");
  if (j == k) {
    if (value != 0)
      throw std::invalid_argument("LieAlgebraSpec: c^i_{jj} must be zero");
    return;
  }
  if (j > k) {
    set_constant(i, k, j, -value);
    return;
  }
  if (value == 0)
    c.erase({i, j, k});
  else
    c[{i, j, k}] = std::move(value);
}

Rational LieAlgebraSpec::structure(int i, int j, int k) const {
  if (j == k) return Rational(0);
  if (j > k) return -structure(i, k, j);
  auto it = c.find({i, j, k});
  return it == c.end() ? Rational(0) : it->second;
}

bool LieAlgebraSpec::twist_is_zero() const {
  for (const auto& row : f)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

ValidationReport validate(const LieAlgebraSpec& spec) {
  ValidationReport report;
  if (spec.dim < 1) {
    report.add("dim", "dimension must be positive");
    return report;
  }
  if (static_cast<int>(spec.f.size()) != spec.dim)
    report.add("twist", "twist matrix is not dim x dim");
  // Antisymmetry is enforced by the sparse j<k storage; what can still go
  // wrong is a key with j >= k slipped in through direct map access.
  for (const auto& [key, value] : spec.c) {
    auto [i, j, k] = key;
    if (j >= k)
      report.add("antisymmetry(" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(k) + ")",
                 "stored key must have j < k");
  }
  int n = spec.dim;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          Rational sum(0);
          for (int m = 1; m <= n; ++m) {
            sum += spec.structure(m, j, k) * spec.structure(i, m, l);
            sum += spec.structure(m, k, l) * spec.structure(i, m, j);
            sum += spec.structure(m, l, j) * spec.structure(i, m, k);
          }
          if (sum != 0)
            report.add("jacobi(" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + "," +
                           std::to_string(l) + ")",
                       "residual " + to_string(sum));
        }
  return report;
}

LieVector bracket(const LieAlgebraSpec& spec, const LieVector& x,
                  const LieVector& y) {
  if (x.dim() != spec.dim || y.dim() != spec.dim)
    throw std::invalid_argument("bracket: dimension mismatch");
  LieVector out(spec.dim);
  for (const auto& [key, value] : spec.c) {
    auto [i, j, k] = key;
    Scalar cij(value);
    out.coeff[i - 1] += cij * (x.coeff[j - 1] * y.coeff[k - 1] -
                               x.coeff[k - 1] * y.coeff[j - 1]);
  }
  return out;
}

LieVector twist_apply(const LieAlgebraSpec& spec, const LieVector& x) {
  if (x.dim() != spec.dim)
    throw std::invalid_argument("twist_apply: dimension mismatch");
  LieVector out(spec.dim);
  for (int i = 1; i <= spec.dim; ++i)
    for (int j = 1; j <= spec.dim; ++j)
      out.coeff[i - 1] += Scalar(spec.twist(j, i)) * x.coeff[j - 1];
  return out;
}

ValidationReport twist_equivariance_check(const LieAlgebraSpec& spec) {
  ValidationReport report;
  int n = spec.dim;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Rational sum(0);
        for (int m = 1; m <= n; ++m)
          sum += spec.structure(j, i, m) * spec.twist(m, k) -
                 spec.twist(j, m) * spec.structure(m, i, k);
        if (sum != 0)
          report.add("ad_commute(" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + ")",
                     "residual " + to_string(sum));
      }
  return report;
}

LieAlgebraSpec preset_abelian(int n) {
  if (n < 1) throw std::invalid_argument("abelian preset needs n >= 1");
  return LieAlgebraSpec(n);
}

LieAlgebraSpec preset_su2() {
  LieAlgebraSpec spec(3);
  spec.set_constant(3, 1, 2, Rational(1));
  spec.set_constant(2, 3, 1, Rational(1));
  spec.set_constant(1, 2, 3, Rational(1));
  return spec;
}

LieAlgebraSpec preset_so3() { return preset_su2(); }

LieAlgebraSpec preset_heisenberg3() {
  LieAlgebraSpec spec(3);
  spec.set_constant(3, 1, 2, Rational(1));
  return spec;
}

LieAlgebraSpec preset_by_name(const std::string& name) {
  if (name == "su2") return preset_su2();
  if (name == "so3") return preset_so3();
  if (name == "heisenberg3") return preset_heisenberg3();
  if (name.rfind("abelian", 0) == 0 && name.size() > 7) {
    int n = std::stoi(name.substr(7));
    return preset_abelian(n);
  }
  throw std::invalid_argument("unknown lie algebra preset: " + name);
}

}  // namespace eqcoh
