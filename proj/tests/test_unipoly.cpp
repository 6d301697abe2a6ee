#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/composition.hpp"
#include "qlab/unipoly.hpp"
#include "test_util.hpp"

using qlab::ExactScalar;
using qlab::UniPoly;

TEST_CASE("falling factorial evaluation") {
  CHECK(UniPoly::falling_factorial(4).eval(ExactScalar(4)) == ExactScalar(24));
  CHECK(UniPoly().eval(ExactScalar(17)) == ExactScalar(0));
  for (int N = 1; N <= 12; ++N)
    for (int k = 0; k < N; ++k)
      CHECK(UniPoly::falling_factorial(N).eval(ExactScalar(k)) == ExactScalar(0));
}

TEST_CASE("falling factorial coefficients are Stirling numbers") {
  CHECK(UniPoly::falling_factorial(1) == UniPoly::variable());
  CHECK(UniPoly::falling_factorial(2) ==
        UniPoly::monomial(2, ExactScalar(1)) - UniPoly::variable());
  for (int N = 1; N <= 12; ++N) {
    UniPoly b = UniPoly::falling_factorial(N);
    CHECK(b.degree() == N);
    for (int k = 0; k <= N; ++k) CHECK(b.coeff(k) == ExactScalar(qlab::stirling1(N, k)));
  }
}

TEST_CASE("exact division") {
  UniPoly t = UniPoly::variable("t");
  UniPoly one(1, "t");

  UniPoly b3 = UniPoly::falling_factorial(3, "t");
  CHECK(b3.div_exact(t - one) == t * t - ExactScalar(2) * t);
  CHECK((t * t - one).div_exact(t + one) == t - one);

  qlab::testing::Gen gen;
  for (int i = 0; i < 50; ++i) {
    UniPoly p = gen.unipoly();
    CHECK(p.div_exact(UniPoly(1)) == p);
    UniPoly q = gen.unipoly(3);
    if (q.is_zero()) continue;
    CHECK((p * q).div_exact(q) == p);
  }

  UniPoly x = UniPoly::variable();
  CHECK_THROWS_AS((x * x + UniPoly(1)).div_exact(x - UniPoly(1)), std::domain_error);
  CHECK_THROWS_AS(x.div_exact(UniPoly()), std::domain_error);
}

TEST_CASE("ring axioms and degree bookkeeping on random polynomials") {
  qlab::testing::Gen gen;
  for (int i = 0; i < 60; ++i) {
    UniPoly a = gen.unipoly(), b = gen.unipoly(), c = gen.unipoly();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == UniPoly());
    ExactScalar x = gen.rational();
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
  }
  UniPoly x = UniPoly::variable();
  CHECK((x * x + x - x * x).degree() == 1);
  CHECK(UniPoly().degree() == -1);
}

TEST_CASE("canonical text and lossless parsing") {
  UniPoly p = UniPoly::monomial(2, ExactScalar(3, 2)) - UniPoly::variable() + UniPoly(5);
  CHECK(p.str() == "3/2*x^2 - x + 5");
  CHECK(UniPoly::parse(p.str()) == p);
  CHECK(UniPoly().str() == "0");
  CHECK(UniPoly::parse("0").is_zero());
  CHECK((-UniPoly::variable()).str() == "-x");

  UniPoly q = UniPoly::parse("t^2 - 2*t");
  CHECK(q.var() == "t");
  CHECK(q.degree() == 2);
  CHECK(q.eval(ExactScalar(3)) == ExactScalar(3));

  CHECK_THROWS(UniPoly::parse("x + y"));
  CHECK_THROWS(UniPoly::parse("x + "));
  CHECK_THROWS(UniPoly::parse(""));

  qlab::testing::Gen gen;
  for (int i = 0; i < 100; ++i) {
    UniPoly r = gen.unipoly(8);
    CHECK(UniPoly::parse(r.str()) == r);
  }
}
