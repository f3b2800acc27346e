#include "doctest.h"
#include "eqcoh/cohomology.hpp"
#include "eqcoh/setup.hpp"

using namespace eqcoh;

namespace {

Setup point_setup(const LieAlgebraSpec& lie, int N,
                  WeilMutation mutation = WeilMutation::none) {
  return make_setup(lie, make_point(lie.dim), N, mutation);
}

}  // namespace

TEST_CASE("d_W on generators") {
  SUBCASE("abelian") {
    Setup s = point_setup(preset_abelian(1), 4);
    CHECK(d_w(s.a(), s.weil, s.a().theta(1)) == s.a().phi(1));
    CHECK(d_w(s.a(), s.weil, s.a().phi(1)).empty());
  }
  SUBCASE("su2: d_W theta^1 = -theta^2 theta^3 + phi^1") {
    Setup s = point_setup(preset_su2(), 4);
    const Algebra& a = s.a();
    GradedElement expected =
        Scalar(-1) * a.mul(a.theta(2), a.theta(3)) + a.phi(1);
    CHECK(d_w(a, s.weil, a.theta(1)) == expected);
  }
}

TEST_CASE("contraction on generators and by Leibniz") {
  Setup s = point_setup(preset_su2(), 4);
  const Algebra& a = s.a();
  CHECK(contract(a, s.weil, 1, a.theta(1)) == a.one());
  CHECK(contract(a, s.weil, 1, a.theta(2)).empty());
  CHECK(contract(a, s.weil, 1, a.phi(2)).empty());
  CHECK(contract(a, s.weil, 1, a.mul(a.theta(1), a.phi(1))) == a.phi(1));
}

TEST_CASE("Lie derivative: stored images vs {d_W, i_k} oracle") {
  for (const char* name : {"su2", "heisenberg3"}) {
    Setup s = point_setup(preset_by_name(name), 4);
    const Algebra& a = s.a();
    int n = s.n();
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) {
        for (const GradedElement& g : {a.theta(j), a.phi(j)}) {
          GradedElement oracle = contract(a, s.weil, k, d_w(a, s.weil, g)) +
                                 d_w(a, s.weil, contract(a, s.weil, k, g));
          CHECK(lie_derivative(a, s.weil, k, g) == oracle);
        }
        // Lemma 1 closed form on theta.
        GradedElement expected;
        for (int m = 1; m <= n; ++m) {
          Rational c = s.lie.structure(j, k, m);
          if (c != 0) expected = expected + Scalar(-c) * a.theta(m);
        }
        CHECK(lie_derivative(a, s.weil, k, a.theta(j)) == expected);
      }
  }
  // su2 spot value: L_1 theta^2 = theta^3.
  Setup s = point_setup(preset_su2(), 4);
  CHECK(lie_derivative(s.a(), s.weil, 1, s.a().theta(2)) == s.a().theta(3));
}

TEST_CASE("all six identities hold for the presets") {
  for (const char* name : {"abelian1", "abelian2", "su2", "heisenberg3"}) {
    Setup s = point_setup(preset_by_name(name), 5);
    CHECK(check_weil_identities(s.a(), s.weil, 5).ok());
  }
}

TEST_CASE("identities need truncation headroom") {
  LieAlgebraSpec lie = preset_su2();
  Algebra tight(3, 4, make_point(3));
  WeilAlgebra w = build_weil(tight, lie);
  CHECK_THROWS(check_weil_identities(tight, w, 4));
}

TEST_CASE("drop-phi mutation: identities survive, triviality does not") {
  // The mutated d_W is a Chevalley-Eilenberg-type differential: it still
  // satisfies the whole operator calculus, so the detectable symptom is
  // the cohomology of (W(g), d_W) becoming nontrivial.
  Setup mutated = point_setup(preset_abelian(1), 6,
                              WeilMutation::drop_phi_in_dW);
  CHECK(check_weil_identities(mutated.a(), mutated.weil, 5).ok());
  BettiTable t = weil_cohomology(mutated, 5);
  bool all_trivial_above_zero = true;
  for (const BettiRow& r : t.rows)
    if (r.degree > 0 && r.betti != 0) all_trivial_above_zero = false;
  CHECK_FALSE(all_trivial_above_zero);

  // Unmutated control.
  Setup s = point_setup(preset_abelian(1), 6);
  for (const BettiRow& r : weil_cohomology(s, 5).rows)
    CHECK(r.betti == (r.degree == 0 ? 1 : 0));
}

TEST_CASE("i_X and L_X are linear in X") {
  Setup s = point_setup(preset_su2(), 4);
  const Algebra& a = s.a();
  LieVector x(3);
  x.coeff = {Scalar(2), Scalar(Rational(-1, 2)), Scalar::i()};
  GradedElement probe = a.mul(a.theta(1), a.theta(2));
  GradedElement direct = contract_op(a, s.weil, x)(probe);
  GradedElement sum;
  for (int k = 1; k <= 3; ++k)
    sum = sum + x.coeff[k - 1] * contract(a, s.weil, k, probe);
  CHECK(direct == sum);
}
