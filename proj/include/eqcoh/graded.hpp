#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "eqcoh/gdga.hpp"
#include "eqcoh/scalar.hpp"

namespace eqcoh {

/// Canonical basis monomial of Lambda(g*) (x) S(g*) (x) A: a strictly
/// increasing theta index set (stored as a bitmask), a phi exponent vector,
/// and a module basis index.  theta^i has degree 1, phi^i degree 2.
struct Monomial {
  uint32_t theta = 0;        // bit (i-1) set <=> theta^i present
  std::vector<int> phi;      // phi[i-1] = exponent of phi^i
  int mod = 0;               // module basis index

  int theta_count() const;
  int phi_weight() const;
  std::vector<int> theta_list() const;  // increasing 1-based indices

  bool operator==(const Monomial& o) const {
    return theta == o.theta && phi == o.phi && mod == o.mod;
  }
  // theta lexicographic (as increasing index lists), then phi, then module.
  bool operator<(const Monomial& o) const;
};

/// Finite sum of (monomial, scalar) terms; zero coefficients are never
/// stored, so equality is map equality.
using GradedElement = std::map<Monomial, Scalar>;

void add_term(GradedElement& e, const Monomial& m, const Scalar& c);
GradedElement operator+(const GradedElement& a, const GradedElement& b);
GradedElement operator-(const GradedElement& a, const GradedElement& b);
GradedElement operator*(const Scalar& c, const GradedElement& a);

/// An operator given by its images on the theta/phi generators and a
/// linear action on the module factor, extended by the signed Leibniz
/// rule.  `degree` fixes the parity used in the Koszul sign.
struct Derivation {
  int degree = 0;
  std::vector<GradedElement> theta_img;  // size n (may be empty = all zero)
  std::vector<GradedElement> phi_img;
  std::function<GradedElement(int)> mod_img;  // nullptr = zero on module
};

/// The ambient truncated algebra W(g) (x) A: dimension, truncation degree
/// and the module instance.  All products and derivations truncate eagerly
/// at `truncation`.
class Algebra {
 public:
  Algebra(int lie_dim, int truncation, GdgaPtr module);

  int n() const { return n_; }
  int truncation() const { return truncation_; }
  const GdgaInstance& module() const { return *module_; }
  GdgaPtr module_ptr() const { return module_; }

  int degree(const Monomial& m) const;
  int degree(const GradedElement& e) const;  // max term degree; -1 for 0
  bool is_homogeneous(const GradedElement& e) const;

  Monomial unit_monomial() const;
  GradedElement one() const;
  GradedElement theta(int i) const;
  GradedElement phi(int i) const;
  GradedElement module_elem(int idx) const;
  GradedElement module_elem(const ModuleVec& v) const;
  GradedElement monomial(const Monomial& m) const;

  GradedElement mul(const GradedElement& a, const GradedElement& b) const;
  GradedElement truncate(const GradedElement& e, int N) const;

  GradedElement apply_derivation(const Derivation& d,
                                 const GradedElement& x) const;

  /// All monomials of total degree d in canonical order (theta lex, then
  /// phi lex, then module index).
  std::vector<Monomial> basis_of_degree(int d) const;
  /// Same, restricted to theta-free monomials (the Cartan side).
  std::vector<Monomial> cartan_basis_of_degree(int d) const;

  std::string to_string(const GradedElement& e) const;
  GradedElement parse(const std::string& text) const;

 private:
  int n_;
  int truncation_;
  GdgaPtr module_;

  GradedElement mul_monomials(const Monomial& a, const Scalar& ca,
                              const Monomial& b, const Scalar& cb) const;
};

/// Linear operator on GradedElement with a fixed degree shift; closed
/// under the usual operator algebra.
struct Operator {
  int degree = 0;
  std::function<GradedElement(const GradedElement&)> fn;

  GradedElement operator()(const GradedElement& x) const { return fn(x); }

  static Operator zero();
  static Operator identity();
  static Operator from_derivation(const Algebra& a, Derivation d);
  /// Left multiplication x -> e * x (e homogeneous of the given degree).
  static Operator mul_by(const Algebra& a, GradedElement e, int degree);
};

Operator compose(const Operator& p, const Operator& q);  // x -> p(q(x))
Operator add(const Operator& p, const Operator& q);
Operator sub(const Operator& p, const Operator& q);
Operator scale(const Scalar& c, const Operator& p);
Operator commutator(const Operator& p, const Operator& q);
Operator anticommutator(const Operator& p, const Operator& q);

}  // namespace eqcoh
