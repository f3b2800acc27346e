#include "doctest.h"
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
      GradedElement x = a.monomial(m);
      if (!(sub(p, q).fn(x).empty())) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("tensor identities hold on point and polynomial modules") {
  CHECK(tensor_identities_check(make_setup(preset_su2(), make_point(3), 4), 3)
            .ok());
  CHECK(tensor_identities_check(rotation_setup(Rational(1), 3), 3).ok());
}

TEST_CASE("twisted Cartan formula {D, i~} = L~ on twisted pairs") {
  CHECK(twisted_cartan_formula_check(rotation_setup(Rational(1), 3), 3).ok());
  CHECK(twisted_cartan_formula_check(spin_setup(3), 2).ok());
}

TEST_CASE("complexified contraction is bilinear over the basis family") {
  Setup s = rotation_setup(Rational(2), 3);
  LieVector e1 = LieVector::basis(1, 1);
  LieVector x(1);
  x.coeff = {Scalar(Rational(3, 2))};
  const Algebra& a = s.a();
  Operator lhs = i_tilde_twisted(s, x, x);
  Operator rhs = scale(Scalar(Rational(3, 2)), i_tilde_twisted(s, e1, e1));
  CHECK(ops_agree(s, lhs, rhs, 3));
}

TEST_CASE("with zero twist the generator families reduce to the classical ones") {
  LieAlgebraSpec lie = preset_su2();
  lie.set_zero_twist();
  Setup s = make_setup(lie, make_point(3), 4);
  for (int k = 1; k <= 3; ++k) {
    Operator itw = Operator::from_derivation(s.a(), i_tilde_twisted_gen(s, k));
    Operator icl = Operator::from_derivation(s.a(), i_tilde(s, k));
    Operator ltw = Operator::from_derivation(s.a(), l_tilde_twisted_gen(s, k));
    Operator lcl = Operator::from_derivation(s.a(), l_tilde(s, k));
    CHECK(ops_agree(s, itw, icl, 4));
    CHECK(ops_agree(s, ltw, lcl, 4));
  }
}

TEST_CASE("basic modes coincide when f = 0 and differ in rank never") {
  // twisted_pairs imposes the sub-family with Y = f(X); when f = 0 both
  // modes must produce equal-dimension spaces.
  LieAlgebraSpec lie = preset_abelian(1);
  lie.set_zero_twist();
  Setup s = make_setup(lie, make_point(1), 4);
  auto ap = basic_subspace(s, 4, BasicMode::all_pairs);
  auto tp = basic_subspace(s, 4, BasicMode::twisted_pairs);
  REQUIRE(ap.size() == tp.size());
  for (size_t d = 0; d < ap.size(); ++d) CHECK(ap[d].size() == tp[d].size());
}

TEST_CASE("basic subspace of W(u(1)) (x) point is spanned by phi powers") {
  Setup s = make_setup(preset_abelian(1), make_point(1), 4);
  auto basic = basic_subspace(s, 4, BasicMode::twisted_pairs);
  CHECK(basic[0].size() == 1);
  CHECK(basic[1].size() == 0);
  CHECK(basic[2].size() == 1);
  CHECK(basic[3].size() == 0);
  CHECK(basic[4].size() == 1);
}

TEST_CASE("D preserves the basic subspace") {
  CHECK(check_basic_preserved(make_setup(preset_abelian(1), make_point(1), 4),
                              4, BasicMode::twisted_pairs)
            .ok());
  CHECK(check_basic_preserved(rotation_setup(Rational(1), 3), 3,
                              BasicMode::twisted_pairs)
            .ok());
  CHECK(check_basic_preserved(make_setup(preset_su2(), make_point(3), 4), 4,
                              BasicMode::all_pairs)
            .ok());
}
