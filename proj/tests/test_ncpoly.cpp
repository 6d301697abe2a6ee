#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/ncpoly.hpp"
#include "test_util.hpp"

using qlab::ExactScalar;
using qlab::NCOperatorPoly;
using qlab::UniPoly;
using qlab::Word;

namespace {

NCOperatorPoly random_nc(qlab::testing::Gen& gen) {
  NCOperatorPoly p;
  int terms = gen.range(1, 3);
  for (int t = 0; t < terms; ++t) {
    Word w(gen.range(0, 3));
    for (auto& k : w) k = gen.range(1, 3);
    p += NCOperatorPoly::term(w, gen.unipoly(2, "t"));
  }
  return p;
}

}  // namespace

TEST_CASE("products concatenate words") {
  NCOperatorPoly p = NCOperatorPoly::generator(1) * NCOperatorPoly::generator(2);
  CHECK(p.term_count() == 1);
  CHECK(p.coeff(Word{1, 2}) == UniPoly(1));

  NCOperatorPoly q = (NCOperatorPoly::generator(1) + NCOperatorPoly::generator(2)) *
                     NCOperatorPoly::generator(1);
  CHECK(q == NCOperatorPoly::term(Word{1, 1}, UniPoly(1)) +
                 NCOperatorPoly::term(Word{2, 1}, UniPoly(1)));
  CHECK(q != NCOperatorPoly::term(Word{1, 1}, UniPoly(1)) +
                 NCOperatorPoly::term(Word{1, 2}, UniPoly(1)));
}

TEST_CASE("free algebra axioms on random elements") {
  qlab::testing::Gen gen;
  for (int i = 0; i < 40; ++i) {
    NCOperatorPoly a = random_nc(gen), b = random_nc(gen), c = random_nc(gen);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(NCOperatorPoly::identity() * a == a);
    CHECK(a * NCOperatorPoly::identity() == a);
    CHECK(a - a == NCOperatorPoly());
    CHECK(a.reversed().reversed() == a);
    CHECK((a * b).reversed() == b.reversed() * a.reversed());
  }
}

TEST_CASE("coefficient evaluation in t") {
  // (P_4 - P_2^2) t - P_4
  UniPoly t = UniPoly::variable("t");
  NCOperatorPoly pi4 = t * (NCOperatorPoly::generator(2) -
                            NCOperatorPoly::generator(1) * NCOperatorPoly::generator(1)) -
                       NCOperatorPoly::generator(2);
  CHECK(pi4.eval_t(ExactScalar(0)) == -NCOperatorPoly::generator(2));
  CHECK(pi4.eval_t(ExactScalar(1)) ==
        -(NCOperatorPoly::generator(1) * NCOperatorPoly::generator(1)));
  CHECK(NCOperatorPoly().eval_t(ExactScalar(5)) == NCOperatorPoly());
  CHECK(pi4.degree_t() == 1);
}

TEST_CASE("commutative substitution") {
  UniPoly x = UniPoly::variable();
  std::map<int, UniPoly> images{{1, x}, {2, x * (x + UniPoly(2))}};

  NCOperatorPoly p = NCOperatorPoly::generator(2) -
                     NCOperatorPoly::generator(1) * NCOperatorPoly::generator(1);
  CHECK(p.substitute_commutative(images) == ExactScalar(2) * x);
  CHECK(NCOperatorPoly::identity().substitute_commutative({}) == UniPoly(1));

  NCOperatorPoly ab = NCOperatorPoly::generator(1) * NCOperatorPoly::generator(2);
  NCOperatorPoly ba = NCOperatorPoly::generator(2) * NCOperatorPoly::generator(1);
  CHECK(ab.substitute_commutative(images) == ba.substitute_commutative(images));

  CHECK_THROWS_AS(NCOperatorPoly::generator(3).substitute_commutative(images),
                  std::invalid_argument);
  UniPoly t = UniPoly::variable("t");
  CHECK_THROWS_AS((t * NCOperatorPoly::generator(1)).substitute_commutative(images),
                  std::invalid_argument);

  qlab::testing::Gen gen;
  std::map<int, UniPoly> rimg{{1, gen.unipoly(2)}, {2, gen.unipoly(2)}, {3, gen.unipoly(2)}};
  for (int i = 0; i < 25; ++i) {
    NCOperatorPoly a = random_nc(gen).eval_t(ExactScalar(1));
    NCOperatorPoly b = random_nc(gen).eval_t(ExactScalar(1));
    CHECK((a + b).substitute_commutative(rimg) ==
          a.substitute_commutative(rimg) + b.substitute_commutative(rimg));
    CHECK((a * b).substitute_commutative(rimg) ==
          a.substitute_commutative(rimg) * b.substitute_commutative(rimg));
  }
}

TEST_CASE("printing") {
  CHECK(qlab::word_str(Word{}) == "1");
  CHECK(qlab::word_str(Word{1, 1, 2}) == "P_2^2 P_4");
  CHECK(qlab::word_str(Word{5}, true) == "P_{10}");
  CHECK(qlab::word_str(Word{5}, false) == "P_10");

  NCOperatorPoly p = ExactScalar(-3, 2) * NCOperatorPoly::generator(1);
  CHECK(p.str() == "-3/2*P_2");
  CHECK(NCOperatorPoly().str() == "0");

  UniPoly t = UniPoly::variable("t");
  NCOperatorPoly q = (t - UniPoly(1, "t")) * (NCOperatorPoly::generator(1) * NCOperatorPoly::generator(2));
  CHECK(q.str() == "(t - 1)*P_2 P_4");
}

TEST_CASE("first differing word") {
  NCOperatorPoly a = NCOperatorPoly::generator(1) + NCOperatorPoly::generator(2);
  NCOperatorPoly b = NCOperatorPoly::generator(1) + ExactScalar(2) * NCOperatorPoly::generator(2);
  auto diff = NCOperatorPoly::first_difference(a, b);
  REQUIRE(diff.has_value());
  CHECK(*diff == Word{2});
  CHECK_FALSE(NCOperatorPoly::first_difference(a, a).has_value());
}
