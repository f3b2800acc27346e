#include "doctest.h"
#include "eqcoh/cohomology.hpp"
#include "eqcoh/weil.hpp"

using namespace eqcoh;

namespace {

std::vector<int> bettis(const BettiTable& t) {
  std::vector<int> out;
  for (const auto& r : t.rows) out.push_back(r.betti);
  return out;
}

Setup rotation_setup(Rational twist, int N) {
  LieAlgebraSpec lie = preset_abelian(1);
  lie.f = {{twist}};
  LinearActionSpec action;
  action.m = 2;
  action.rho = {{{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}}};
  action.poly_degree_cap = N + 2;
  return make_setup(lie, make_polynomial_forms(action, lie), N);
}

}  // namespace

TEST_CASE("matrix_of on explicit bases") {
  Setup s = make_setup(preset_abelian(1), make_point(1), 4);
  const Algebra& a = s.a();
  SUBCASE("d_W from span{theta} to span{phi} is the 1x1 identity") {
    Operator d = Operator::from_derivation(a, s.weil.d_w);
    DegreeMatrix m = matrix_of(a, d, {a.theta(1)}, {a.phi(1)}, 1);
    CHECK(m.m.rows == 1);
    CHECK(m.m.cols == 1);
    CHECK(m.m.at(0, 0) == Scalar(1));
  }
  SUBCASE("zero operator gives the zero matrix") {
    DegreeMatrix m = matrix_of(a, Operator::zero(), {a.theta(1)}, {a.phi(1)}, 1);
    CHECK(m.m.is_zero());
  }
  SUBCASE("an image outside the codomain span throws") {
    Operator d = Operator::from_derivation(a, s.weil.d_w);
    CHECK_THROWS_AS(matrix_of(a, d, {a.theta(1)}, {a.theta(1)}, 1),
                    std::runtime_error);
  }
}

TEST_CASE("betti rejects a non-complex") {
  Setup s = make_setup(preset_abelian(1), make_point(1), 4);
  const Algebra& a = s.a();
  // (mult by theta^1) + d_W squares to mult by phi^1, nonzero.
  Operator bad = add(Operator::mul_by(a, a.theta(1), 1),
                     Operator::from_derivation(a, s.weil.d_w));
  std::vector<std::vector<GradedElement>> bases;
  for (int d = 0; d <= 4; ++d) {
    std::vector<GradedElement> b;
    for (const auto& m : a.basis_of_degree(d)) b.push_back(a.monomial(m));
    bases.push_back(b);
  }
  CHECK_THROWS_AS(betti(a, bad, bases), std::runtime_error);
}

TEST_CASE("W(g) is acyclic in positive degrees") {
  for (const char* name : {"abelian1", "su2"}) {
    LieAlgebraSpec lie = preset_by_name(name);
    Setup s = make_setup(lie, make_point(lie.dim), 4);
    CHECK(bettis(weil_cohomology(s, 4)) == std::vector<int>{1, 0, 0, 0});
  }
}

TEST_CASE("dropping phi from d_W destroys Weil acyclicity") {
  Setup s = make_setup(preset_abelian(1), make_point(1), 4,
                       WeilMutation::drop_phi_in_dW);
  CHECK(bettis(weil_cohomology(s, 4)) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("circle equivariant cohomology of a point is a polynomial ring") {
  Setup s = make_setup(preset_abelian(1), make_point(1), 5);
  std::vector<int> expect = {1, 0, 1, 0, 1};
  CHECK(bettis(equivariant_cohomology(s, 5, Model::cartan,
                                      InvarianceMode::per_generator,
                                      BasicMode::twisted_pairs)) == expect);
  CHECK(bettis(equivariant_cohomology(s, 5, Model::weil_basic,
                                      InvarianceMode::per_generator,
                                      BasicMode::twisted_pairs)) == expect);
}

TEST_CASE("su(2) equivariant cohomology of a point starts at the Casimir") {
  Setup s = make_setup(preset_su2(), make_point(3), 5);
  std::vector<int> expect = {1, 0, 0, 0, 1};
  CHECK(bettis(equivariant_cohomology(s, 5, Model::cartan,
                                      InvarianceMode::per_generator,
                                      BasicMode::twisted_pairs)) == expect);
  CHECK(bettis(equivariant_cohomology(s, 5, Model::weil_basic,
                                      InvarianceMode::per_generator,
                                      BasicMode::twisted_pairs)) == expect);
}

TEST_CASE("both models agree on a twisted polynomial module") {
  Setup s = rotation_setup(Rational(1), 3);
  BettiTable c = equivariant_cohomology(s, 3, Model::cartan,
                                        InvarianceMode::per_generator,
                                        BasicMode::twisted_pairs);
  BettiTable w = equivariant_cohomology(s, 3, Model::weil_basic,
                                        InvarianceMode::per_generator,
                                        BasicMode::twisted_pairs);
  CHECK(bettis(c) == bettis(w));
}

TEST_CASE("tsv output is stable") {
  Setup s = make_setup(preset_abelian(1), make_point(1), 3);
  BettiTable t = equivariant_cohomology(s, 3, Model::cartan,
                                        InvarianceMode::per_generator,
                                        BasicMode::twisted_pairs);
  CHECK(t.tsv() ==
        "degree\tdim\tker\tim\tbetti\n"
        "0\t1\t1\t0\t1\n"
        "1\t0\t0\t0\t0\n"
        "2\t1\t1\t0\t1\n");
}
