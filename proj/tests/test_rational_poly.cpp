#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nij/multipoly.hpp"

using namespace nij;

namespace {

// small random polynomials with coefficients from a fixed pool
MultiPoly random_poly(std::mt19937& rng, int n, int max_deg, int max_terms) {
  static const Rational pool[] = {Rational(1),     Rational(-1),   Rational(2),
                                  Rational(-3),    Rational(1, 2), Rational(-2, 3),
                                  Rational(5, 7)};
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(0, max_deg);
  std::uniform_int_distribution<int> coeff(0, 6);
  MultiPoly p(n);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(n);
    for (int i = 0; i < n; ++i) m[i] = (unsigned)expo(rng);
    p.add_term(m, pool[coeff(rng)]);
  }
  return p;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
  CHECK((Rational(7, 3) - Rational(1, 3)).str() == "2");
  CHECK((Rational(1) / Rational(3)).str() == "1/3");
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse(" 5 ") == Rational(5));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
}

TEST_CASE("polynomial product and identities") {
  // (x+1)(x-1) = x^2 - 1
  MultiPoly x = MultiPoly::var(1, 0);
  MultiPoly one = MultiPoly::constant(1, Rational(1));
  CHECK((x + one) * (x - one) == x * x - one);
  // p + 0 = p
  MultiPoly p = MultiPoly::parse("3/2*x1^2 - x1", 1);
  CHECK(p + MultiPoly::zero(1) == p);
  // (1/2)x * (2/3)y = (1/3)xy
  MultiPoly hx = Rational(1, 2) * MultiPoly::var(2, 0);
  MultiPoly ty = Rational(2, 3) * MultiPoly::var(2, 1);
  CHECK(hx * ty == Rational(1, 3) * (MultiPoly::var(2, 0) * MultiPoly::var(2, 1)));
}

TEST_CASE("partial derivatives") {
  MultiPoly x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1);
  CHECK((x * x * y).partial(0) == Rational(2) * (x * y));  // d/dx x^2 y = 2xy
  CHECK((x * x).partial(1).is_zero());                     // d/dy x^2 = 0
  MultiPoly p = x * x * x - x;
  CHECK(p.partial(0) == Rational(3) * (x * x) - MultiPoly::constant(2, Rational(1)));
  CHECK_THROWS_AS(p.partial(2), DimensionError);
  CHECK_THROWS_AS(p.partial(-1), DimensionError);
}

TEST_CASE("mismatched variable counts are rejected") {
  MultiPoly p(2), q(3);
  CHECK_THROWS_AS(p + q, DimensionError);
  CHECK_THROWS_AS(p * q, DimensionError);
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 1 + iter % 3;
    MultiPoly a = random_poly(rng, n, 3, 4);
    MultiPoly b = random_poly(rng, n, 3, 4);
    MultiPoly c = random_poly(rng, n, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("mixed partials commute and Leibniz rule holds") {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 2 + iter % 2;
    MultiPoly p = random_poly(rng, n, 4, 5);
    MultiPoly q = random_poly(rng, n, 4, 5);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
      CHECK((p * q).partial(i) == p.partial(i) * q + p * q.partial(i));
    }
  }
}

TEST_CASE("string grammar round trip") {
  CHECK(MultiPoly::parse("3/2*x1^2*x2 - x3", 3).str() == "3/2*x1^2*x2 - x3");
  CHECK(MultiPoly::parse("0", 2).str() == "0");
  CHECK(MultiPoly::parse("-x1", 2).str() == "-x1");
  CHECK(MultiPoly::parse("x1*x1", 2) == MultiPoly::parse("x1^2", 2));
  CHECK(MultiPoly::parse("2x1", 2) == MultiPoly::parse("2*x1", 2));  // optional star
  CHECK(MultiPoly::parse("x1 + x1", 1) == Rational(2) * MultiPoly::var(1, 0));
  CHECK(MultiPoly::parse("1/2*x1 - 1/2*x1", 1).is_zero());

  std::mt19937 rng(4242);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 1 + iter % 4;
    MultiPoly p = random_poly(rng, n, 3, 6);
    CHECK(MultiPoly::parse(p.str(), n) == p);
  }
}

TEST_CASE("parse errors are reported with positions") {
  CHECK_THROWS_AS(MultiPoly::parse("x5", 2), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("3*", 2), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("", 2), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("x1 x1 +", 2), ParseError);
}

TEST_CASE("canonical form stores no zero terms") {
  MultiPoly p = MultiPoly::parse("x1 - x1 + x2", 2);
  CHECK(p.terms().size() == 1);
  CHECK(p.degree() == 1);
  MultiPoly z = MultiPoly::parse("x1^3 - x1^3", 2);
  CHECK(z.is_zero());
  CHECK(z.degree() == 0);
}
