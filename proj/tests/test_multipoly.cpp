#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/multipoly.hpp"
#include "test_util.hpp"

using qlab::ExactScalar;
using qlab::MultiPoly;

TEST_CASE("alphabet is fixed and enforced") {
  auto js = qlab::make_symbols({"J", "S"});
  auto ja = qlab::make_symbols({"J", "A"});
  MultiPoly p = MultiPoly::symbol(js, "J");
  MultiPoly q = MultiPoly::symbol(ja, "J");
  CHECK_THROWS_AS(p + q, std::invalid_argument);
  CHECK_THROWS_AS(p * q, std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::symbol(js, "A"), std::invalid_argument);
  CHECK_THROWS_AS(qlab::make_symbols({"J", "J"}), std::invalid_argument);

  // Equal alphabets built independently are interchangeable.
  auto js2 = qlab::make_symbols({"J", "S"});
  CHECK(p + MultiPoly::symbol(js2, "S") == MultiPoly::parse(js, "J + S"));
}

TEST_CASE("ring axioms on random values") {
  auto syms = qlab::make_symbols({"a", "b", "c"});
  qlab::testing::Gen gen;
  for (int i = 0; i < 40; ++i) {
    MultiPoly p = gen.multipoly(syms), q = gen.multipoly(syms), r = gen.multipoly(syms);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == MultiPoly(syms));
  }
}

TEST_CASE("no explicit zero terms survive arithmetic") {
  auto syms = qlab::make_symbols({"a", "b"});
  MultiPoly a = MultiPoly::symbol(syms, "a");
  MultiPoly p = a * a - a * a;
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  CHECK((a + (-a)).term_count() == 0);
}

TEST_CASE("substitution and evaluation") {
  auto syms = qlab::make_symbols({"J", "S", "n"});
  MultiPoly J = MultiPoly::symbol(syms, "J");
  MultiPoly S = MultiPoly::symbol(syms, "S");
  MultiPoly p = J * J - S;
  CHECK(p.substitute("S", J * J).is_zero());
  CHECK(p.substitute("n", MultiPoly::constant(syms, ExactScalar(5))) == p);

  MultiPoly q = J * J * S;
  CHECK(q.eval({{"J", ExactScalar(2)}, {"S", ExactScalar(3)}}) == ExactScalar(12));
  CHECK_THROWS_AS(q.eval({{"J", ExactScalar(2)}}), std::invalid_argument);

  CHECK(p.pow(0).is_one());
  CHECK(p.pow(2) == p * p);
}

TEST_CASE("canonical text ordering and lossless parsing") {
  auto syms = qlab::make_symbols({"J", "S"});
  MultiPoly J = MultiPoly::symbol(syms, "J");
  MultiPoly S = MultiPoly::symbol(syms, "S");

  MultiPoly p = ExactScalar(3, 2) * (J * J * S) - J + MultiPoly::constant(syms, ExactScalar(5));
  CHECK(p.str() == "3/2*J^2*S - J + 5");
  CHECK(MultiPoly::parse(syms, p.str()) == p);

  // Total degree first, then lexicographic within a degree.
  MultiPoly q = J * S + S * S + J + MultiPoly::constant(syms, ExactScalar(5));
  CHECK(q.str() == "J*S + S^2 + J + 5");

  CHECK(MultiPoly(syms).str() == "0");
  CHECK(MultiPoly::parse(syms, "0").is_zero());
  CHECK(MultiPoly::parse(syms, "J*J") == J.pow(2));
  CHECK_THROWS(MultiPoly::parse(syms, "J + X"));
  CHECK_THROWS(MultiPoly::parse(syms, ""));

  qlab::testing::Gen gen;
  for (int i = 0; i < 80; ++i) {
    MultiPoly r = gen.multipoly(syms);
    CHECK(MultiPoly::parse(syms, r.str()) == r);
  }
}
