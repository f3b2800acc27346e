#include <random>

#include "doctest.h"
#include "eqcoh/setup.hpp"

using namespace eqcoh;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

GradedElement random_homogeneous(const Algebra& a, std::mt19937& rng,
                                 int degree) {
  auto basis = a.basis_of_degree(degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  GradedElement e;
  for (const Monomial& m : basis)
    add_term(e, m, Scalar(Rational(coeff(rng)), Rational(coeff(rng))));
  return e;
}

}  // namespace

TEST_CASE("basis dimensions match the closed formula") {
  // dim W(g)_d = sum_{a+2b=d} C(n,a) * C(b+n-1, n-1) on the point module.
  for (int n : {1, 2, 3}) {
    Algebra a(n, 8, make_point(n));
    for (int d = 0; d <= 8; ++d) {
      long long expected = 0;
      for (int theta = 0; theta <= n && theta <= d; ++theta)
        if ((d - theta) % 2 == 0)
          expected += binom(n, theta) * binom((d - theta) / 2 + n - 1, n - 1);
      CHECK(static_cast<long long>(a.basis_of_degree(d).size()) == expected);
    }
  }
}

TEST_CASE("graded commutativity") {
  Algebra a(3, 7, make_point(3));
  std::mt19937 rng(5);
  for (int da = 0; da <= 3; ++da)
    for (int db = 0; db <= 3; ++db) {
      GradedElement x = random_homogeneous(a, rng, da);
      GradedElement y = random_homogeneous(a, rng, db);
      GradedElement xy = a.mul(x, y);
      GradedElement yx = a.mul(y, x);
      Scalar sign = (da * db) % 2 == 0 ? Scalar(1) : Scalar(-1);
      CHECK(xy == sign * yx);
    }
}

TEST_CASE("products associate and respect the unit") {
  Algebra a(2, 8, make_point(2));
  std::mt19937 rng(11);
  GradedElement x = random_homogeneous(a, rng, 1);
  GradedElement y = random_homogeneous(a, rng, 2);
  GradedElement z = random_homogeneous(a, rng, 3);
  CHECK(a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z)));
  CHECK(a.mul(a.one(), x) == x);
  CHECK(a.mul(x, a.one()) == x);
}

TEST_CASE("derivations obey the signed Leibniz rule") {
  LieAlgebraSpec lie = preset_su2();
  Setup s = make_setup(lie, make_point(3), 5);
  const Algebra& a = s.a();
  std::mt19937 rng(23);
  for (int da = 0; da <= 2; ++da)
    for (int db = 0; db <= 2; ++db) {
      GradedElement x = random_homogeneous(a, rng, da);
      GradedElement y = random_homogeneous(a, rng, db);
      // d_W (odd): d(xy) = d(x) y + (-1)^{|x|} x d(y).
      GradedElement lhs = a.apply_derivation(s.weil.d_w, a.mul(x, y));
      Scalar sx = da % 2 == 0 ? Scalar(1) : Scalar(-1);
      GradedElement rhs = a.mul(a.apply_derivation(s.weil.d_w, x), y) +
                          sx * a.mul(x, a.apply_derivation(s.weil.d_w, y));
      CHECK(lhs == rhs);
      // L_1 (even): L(xy) = L(x) y + x L(y).
      GradedElement llhs = a.apply_derivation(s.weil.l_k[0], a.mul(x, y));
      GradedElement lrhs = a.mul(a.apply_derivation(s.weil.l_k[0], x), y) +
                           a.mul(x, a.apply_derivation(s.weil.l_k[0], y));
      CHECK(llhs == lrhs);
    }
}

TEST_CASE("printing round-trips through parse") {
  LieAlgebraSpec lie = preset_abelian(1);
  LinearActionSpec action;
  action.m = 2;
  action.rho = {{{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}}};
  action.poly_degree_cap = 4;
  Algebra a(1, 6, make_polynomial_forms(action, lie));
  std::mt19937 rng(31);
  for (int d = 0; d <= 4; ++d) {
    GradedElement x = random_homogeneous(a, rng, d);
    CHECK(a.parse(a.to_string(x)) == x);
  }
  CHECK(a.parse("0") == GradedElement{});
  CHECK(a.parse("t1*p1^2") == a.mul(a.theta(1), a.mul(a.phi(1), a.phi(1))));
  CHECK(a.parse("(1/2+1/3*I)*t1 - p1") ==
        Scalar(Rational(1, 2), Rational(1, 3)) * a.theta(1) +
            Scalar(-1) * a.phi(1));
}

TEST_CASE("truncation discards high degrees in products") {
  Algebra a(1, 3, make_point(1));
  GradedElement p = a.phi(1);
  CHECK(a.mul(p, p).empty());  // degree 4 > truncation 3
  CHECK_FALSE(a.mul(p, a.theta(1)).empty());
}
