#include "doctest.h"
#include "eqcoh/brst.hpp"
#include "eqcoh/weilmodel.hpp"

using namespace eqcoh;

namespace {

Setup spin_setup(int N) {
  LieAlgebraSpec lie = preset_su2();
  for (int k = 0; k < 3; ++k) lie.f[k][k] = Rational(1);
  Scalar i = Scalar::i();
  Scalar mhi = Scalar(Rational(-1, 2)) * i;
  Scalar hi = Scalar(Rational(1, 2)) * i;
  LinearActionSpec action;
  action.m = 2;
  action.rho = {
      {{Scalar(0), mhi}, {mhi, Scalar(0)}},
      {{Scalar(0), Scalar(Rational(-1, 2))}, {Scalar(Rational(1, 2)), Scalar(0)}},
      {{mhi, Scalar(0)}, {Scalar(0), hi}},
  };
  action.poly_degree_cap = N + 2;
  return make_setup(lie, make_polynomial_forms(action, lie), N);
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

bool ops_agree(const Setup& s, const Operator& p, const Operator& q, int N) {
  const Algebra& a = s.a();
  for (int d = 0; d <= N; ++d)
    for (const auto& m : a.basis_of_degree(d)) {
      if (!(sub(p, q).fn(a.monomial(m)).empty())) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("delta on W(u(1)) generators matches hand computation") {
  Setup s = make_setup(preset_abelian(1), make_point(1), 4);
  const Algebra& a = s.a();
  Operator d = delta(s);
  // delta(theta) = phi (abelian, point module: every extra term vanishes).
  CHECK((d.fn(a.theta(1)) - a.phi(1)).empty());
  CHECK(d.fn(a.phi(1)).empty());
  CHECK(d.fn(a.one()).empty());
}

TEST_CASE("Lemma 4: delta squares to zero") {
  CHECK(delta_squared_check(make_setup(preset_abelian(1), make_point(1), 4), 4)
            .ok());
  CHECK(delta_squared_check(make_setup(preset_su2(), make_point(3), 4), 4).ok());
  CHECK(delta_squared_check(rotation_setup(Rational(1), 3), 3).ok());
  CHECK(delta_squared_check(spin_setup(3), 3).ok());
}

TEST_CASE("dropping the theta-theta-iota block breaks delta^2 on a twisted module") {
  Setup s = spin_setup(3);
  ValidationReport r =
      delta_squared_check(s, 3, BrstMutation::drop_theta_theta_iota);
  CHECK_FALSE(r.ok());
  // On a point module the contraction acts by zero, so the same mutation
  // is invisible there.
  Setup p = make_setup(preset_su2(), make_point(3), 4);
  CHECK(delta_squared_check(p, 4, BrstMutation::drop_theta_theta_iota).ok());
}

TEST_CASE("two constructions of delta agree: direct sum vs conjugation") {
  for (Setup s : {make_setup(preset_su2(), make_point(3), 4),
                  rotation_setup(Rational(1), 3), spin_setup(2)}) {
    CHECK(ops_agree(s, delta(s), delta_conjugated(s), s.N));
  }
}

TEST_CASE("psi is invertible: psi_inv . psi = id") {
  for (Setup s : {make_setup(preset_su2(), make_point(3), 4),
                  rotation_setup(Rational(1), 3)}) {
    Operator comp = compose(psi_inv_op(s), psi_op(s));
    Operator id = Operator::identity();
    CHECK(ops_agree(s, comp, id, s.N));
  }
}

TEST_CASE("Lemma 5: product and exponential forms of psi agree") {
  CHECK(psi_forms_agree(make_setup(preset_su2(), make_point(3), 4), 4).ok());
  CHECK(psi_forms_agree(rotation_setup(Rational(1), 3), 3).ok());
}

TEST_CASE("Theorem 1: psi . delta = D . psi") {
  CHECK(theorem1_check(make_setup(preset_abelian(1), make_point(1), 4), 4).ok());
  CHECK(theorem1_check(make_setup(preset_su2(), make_point(3), 4), 4).ok());
  CHECK(theorem1_check(rotation_setup(Rational(1), 3), 3).ok());
  CHECK(theorem1_check(spin_setup(2), 2).ok());
}

TEST_CASE("Theorem 2: psi sends invariants to basic elements") {
  CHECK(theorem2_check(make_setup(preset_abelian(1), make_point(1), 4), 4,
                       InvarianceMode::per_generator)
            .ok());
  CHECK(theorem2_check(make_setup(preset_su2(), make_point(3), 4), 4,
                       InvarianceMode::per_generator)
            .ok());
  CHECK(theorem2_check(rotation_setup(Rational(1), 3), 3,
                       InvarianceMode::per_generator)
            .ok());
}

TEST_CASE("Theorem 3: psi is a bijection onto the basic subspace") {
  auto r1 = theorem3_check(make_setup(preset_abelian(1), make_point(1), 4), 4,
                           InvarianceMode::per_generator);
  CHECK(r1.ok());
  CHECK(r1.dims_line() == "0:1/1 1:0/0 2:1/1 3:0/0 4:1/1");
  auto r2 = theorem3_check(make_setup(preset_su2(), make_point(3), 4), 4,
                           InvarianceMode::per_generator);
  CHECK(r2.ok());
  CHECK(r2.dims_line() == "0:1/1 1:0/0 2:0/0 3:0/0 4:1/1");
}
