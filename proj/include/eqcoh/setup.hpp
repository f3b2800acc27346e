#pragma once

#include <memory>

#include "eqcoh/gdga.hpp"
#include "eqcoh/graded.hpp"
#include "eqcoh/lie.hpp"
#include "eqcoh/weil.hpp"

namespace eqcoh {

/// Sign of the contraction terms in the Cartan differential and the paired
/// evaluation operator: `minus` is this model's convention
/// (d - iota_X - sqrt(-1) iota_Y); `plus` is the variant with + signs.
enum class SignConvention { minus, plus };

/// One fully assembled computation context: Lie algebra + twist, module,
/// Weil operators, and the ambient truncated algebra.  The algebra is
/// truncated two degrees above the reported budget N so that every
/// two-step identity checked at degree <= N is exact.
struct Setup {
  LieAlgebraSpec lie;
  GdgaPtr mod;
  std::shared_ptr<Algebra> alg;
  WeilAlgebra weil;
  int N = 0;
  SignConvention sign = SignConvention::minus;

  const Algebra& a() const { return *alg; }
  int n() const { return lie.dim; }
};

Setup make_setup(const LieAlgebraSpec& lie, GdgaPtr module, int N,
                 WeilMutation mutation = WeilMutation::none,
                 SignConvention sign = SignConvention::minus);

/// The twisted module contraction 1 (x) (iota_k + sqrt(-1) f_k^j iota_j)
/// and the matching Lie derivative, as derivations on the tensor algebra.
Derivation mod_d(const Setup& s);
Derivation mod_iota(const Setup& s, int k);          // untwisted 1 (x) iota_k
Derivation mod_lie(const Setup& s, int k);           // untwisted 1 (x) L_k
Derivation mod_iota_twisted(const Setup& s, int k);
Derivation mod_lie_twisted(const Setup& s, int k);

}  // namespace eqcoh
