#include "doctest.h"
#include "eqcoh/scalar.hpp"

using namespace eqcoh;

TEST_CASE("field arithmetic is exact") {
  Scalar a(Rational(1, 3), Rational(2, 5));
  Scalar b(Rational(-4, 7), Rational(1, 2));
  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK((a * b) / b == a);
  CHECK(a + (-a) == Scalar(0));
  CHECK(a * Scalar(1) == a);
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("conjugation and norm") {
  Scalar a(Rational(3, 4), Rational(-2, 3));
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).im == 0);
  CHECK((a * a.conj()).re == a.norm());
  CHECK(a.norm() == Rational(3, 4) * Rational(3, 4) +
                        Rational(2, 3) * Rational(2, 3));
}

TEST_CASE("inverse and division by zero") {
  Scalar a(Rational(2, 7), Rational(-5, 3));
  CHECK(a * a.inv() == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inv(), std::domain_error);
}

TEST_CASE("printing round-trips") {
  for (const char* text : {"0", "1", "-1", "2/3", "-5/7", "1*I", "-1*I",
                           "1/2*I", "1/2+1/3*I", "-3/4-1/4*I", "2-1*I"}) {
    Scalar s = parse_scalar(text);
    CHECK(to_string(s) == text);
    CHECK(parse_scalar(to_string(s)) == s);
  }
  // Shorthand accepted on input only.
  CHECK(parse_scalar("I") == Scalar::i());
  CHECK(parse_scalar("2-I") == Scalar(Rational(2), Rational(-1)));
}

TEST_CASE("printing normalizes") {
  CHECK(to_string(Scalar(Rational(2, 4))) == "1/2");
  CHECK(to_string(Scalar(Rational(0), Rational(-1))) == "-1*I");
  CHECK(to_string(Scalar(Rational(4, 2), Rational(0))) == "2");
}

TEST_CASE("parse rejects junk") {
  CHECK_THROWS(parse_scalar("1.5"));
  CHECK_THROWS(parse_scalar("x"));
  CHECK_THROWS(parse_scalar(""));
  CHECK_THROWS(parse_rational("1/2*I"));
}
