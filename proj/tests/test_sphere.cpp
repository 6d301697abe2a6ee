#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/sphere.hpp"

using qlab::ExactScalar;
using qlab::SphereContext;
using qlab::UniPoly;

TEST_CASE("context invariants") {
  SphereContext s5{ExactScalar(5)};
  CHECK(s5.x0() == ExactScalar(-15, 4));
  CHECK_FALSE(s5.even_integer_dim());
  CHECK(s5.order_allowed(11));

  SphereContext s4{ExactScalar(4)};
  CHECK(s4.x0() == ExactScalar(-2));
  CHECK(s4.even_integer_dim());
  CHECK(s4.order_allowed(2));
  CHECK_FALSE(s4.order_allowed(3));

  SphereContext frac{ExactScalar(7, 2)};
  CHECK_FALSE(frac.even_integer_dim());

  CHECK_THROWS_AS(SphereContext{ExactScalar(2)}, std::invalid_argument);
}

TEST_CASE("eigenvalue polynomials") {
  UniPoly x = UniPoly::variable();
  CHECK(qlab::p_sphere(1) == x);
  CHECK(qlab::p_sphere(2) == x * (x + UniPoly(2)));
  CHECK(qlab::p_sphere(3) == x * (x + UniPoly(2)) * (x + UniPoly(6)));
}

TEST_CASE("sphere Q values") {
  for (int n = 3; n <= 13; ++n)
    CHECK(qlab::q_sphere(SphereContext{ExactScalar(n)}, 1) == ExactScalar(n, 2));
  CHECK(qlab::q_sphere(SphereContext{ExactScalar(4)}, 2) == ExactScalar(6));
  CHECK(qlab::q_sphere(SphereContext{ExactScalar(3)}, 2) == ExactScalar(15, 8));
  for (int n : {4, 6, 8, 10})
    CHECK(qlab::q_sphere(SphereContext{ExactScalar(n)}, n / 2) == qlab::factorial(n - 1));
}

TEST_CASE("eigenvalue and Q normalization are consistent") {
  for (int n = 3; n <= 13; ++n) {
    SphereContext ctx{ExactScalar(n)};
    for (int N = 1; N <= 6; ++N) CHECK(qlab::verify_eigenvalue_consistency(ctx, N));
  }
  // Non-integer dimension exercises the rational path.
  SphereContext frac{ExactScalar(7, 2)};
  for (int N = 1; N <= 6; ++N) CHECK(qlab::verify_eigenvalue_consistency(frac, N));
}

TEST_CASE("volume series") {
  for (int n = 3; n <= 13; ++n) {
    SphereContext ctx{ExactScalar(n)};
    auto v = qlab::v_sphere(ctx, 6);
    CHECK(v.coeff(0) == ExactScalar(1));
    CHECK(v.coeff(1) == ExactScalar(-n, 4));
    CHECK(v.coeff(2) == ExactScalar(qlab::binomial(n, 2), 16));
    std::vector<ExactScalar> eigs(n, ExactScalar(1, 2));
    for (int N = 1; N <= 6; ++N) CHECK(v.coeff(N) == qlab::v_from_schouten_spectrum(eigs, N));
  }
}

TEST_CASE("square-root coefficients match the closed form") {
  for (const auto& n : {ExactScalar(3), ExactScalar(4), ExactScalar(7), ExactScalar(9, 2)}) {
    SphereContext ctx{n};
    auto w = qlab::series_sqrt(qlab::v_sphere(ctx, 6));
    for (int N = 0; N <= 6; ++N) CHECK(w.coeff(N) == qlab::w_sphere(ctx, N));
  }
}

TEST_CASE("weighted sum identities hold dimension-free") {
  for (int N = 1; N <= 10; ++N) CHECK(qlab::verify_sphere_sum(N, 1));
  for (int N = 2; N <= 10; ++N) CHECK(qlab::verify_sphere_sum(N, 2));
  for (int N = 3; N <= 10; ++N) CHECK(qlab::verify_sphere_sum(N, 3));
  CHECK_THROWS_AS(qlab::verify_sphere_sum(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(qlab::verify_sphere_sum(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(qlab::verify_sphere_sum(3, 4), std::invalid_argument);
}

TEST_CASE("recursion identity on spheres") {
  // n = 3, N = 1: both sides equal -3/2.
  SphereContext s3{ExactScalar(3)};
  CHECK(qlab::verify_q_recursion_on_sphere(s3, 1));
  CHECK(ExactScalar(4) * qlab::w_sphere(s3, 1) == ExactScalar(-3, 2));

  // Critical case n = 4, N = 2 via the continuation value.
  SphereContext s4{ExactScalar(4)};
  CHECK(qlab::verify_q_recursion_on_sphere(s4, 2));

  for (int n : {3, 5, 7, 9, 11}) {
    SphereContext ctx{ExactScalar(n)};
    for (int N = 1; N <= 6; ++N) CHECK(qlab::verify_q_recursion_on_sphere(ctx, N));
  }
  for (int n : {4, 6, 8, 10, 12}) {
    SphereContext ctx{ExactScalar(n)};
    for (int N = 1; 2 * N <= n && N <= 6; ++N)
      CHECK(qlab::verify_q_recursion_on_sphere(ctx, N));
  }
  CHECK_THROWS_AS(qlab::verify_q_recursion_on_sphere(s4, 3), std::invalid_argument);
}
