#pragma once

#include "qlab/rational.hpp"
#include "qlab/series.hpp"
#include "qlab/unipoly.hpp"

namespace qlab {

// Round unit sphere of dimension n (exact rational, n > 2). On this
// model every operator in the family is a polynomial in the base
// operator, whose value on constants is x0 = -(n/2)(n/2-1).
class SphereContext {
 public:
  explicit SphereContext(const ExactScalar& n);

  const ExactScalar& n() const { return n_; }
  ExactScalar half_n() const { return n_ / ExactScalar(2); }
  ExactScalar x0() const { return -(half_n() * (half_n() - ExactScalar(1))); }

  bool even_integer_dim() const;
  // Even integer dimensions truncate the family at 2N = n.
  bool order_allowed(int N) const;

 private:
  ExactScalar n_;
};

// Eigenvalue polynomial prod_{j=0}^{N-1}(x + j(j+1)) of the order-N
// operator on the sphere, dimension-free in the commuting symbol x.
UniPoly p_sphere(int N);

// Q-curvature of the round unit sphere:
// prod_{j=0}^{N-1}(n/2+j) * prod_{j=1}^{N-1}(n/2-j). Polynomial in n,
// so the critical case 2N = n is the continuation value (n-1)!.
ExactScalar q_sphere(const SphereContext& ctx, int N);

// Volume series (1 - s/4)^n through order T, generalized binomial for
// non-integer n/2 contexts.
TruncSeries<ExactScalar> v_sphere(const SphereContext& ctx, int T);

// Order-N coefficient of sqrt(v_sphere): binom(n/2,N)(-1/4)^N.
ExactScalar w_sphere(const SphereContext& ctx, int N);

// Dimension-free polynomial identities for the mk-weighted composition
// sums on the sphere, exact in x:
//   order 1: sum = N!(N-1)! x                              (N >= 1)
//   order 2: sum = -(N!(N-1)!/2)(x^2 + N x)                (N >= 2)
//   order 3: sum = (N!(N-1)!/12)(x^3 + (3N-1)x^2 + ...)    (N >= 3)
bool verify_sphere_sum(int N, int order);

// p_sphere(N) at x0 equals (-1)^N (n/2 - N) q_sphere(ctx, N).
bool verify_eigenvalue_consistency(const SphereContext& ctx, int N);

// The generating-function recursion evaluated on the sphere:
// sum over (J,a) of m1 (-1)^a q_sphere(a) prod p_sphere(J_i)(x0)
// equals 2^(2N) N!(N-1)! w_sphere(N).
bool verify_q_recursion_on_sphere(const SphereContext& ctx, int N);

}  // namespace qlab
