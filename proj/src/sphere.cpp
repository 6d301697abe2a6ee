#include "qlab/sphere.hpp"

#include <stdexcept>

#include "qlab/multiplicity.hpp"
#include "qlab/ncpoly.hpp"

namespace qlab {

SphereContext::SphereContext(const ExactScalar& n) : n_(n) {
  if (!(n > ExactScalar(2))) throw std::invalid_argument("SphereContext: dimension must exceed 2");
}

bool SphereContext::even_integer_dim() const {
  return n_.is_integer() && (n_.num() % 2 == 0);
}

bool SphereContext::order_allowed(int N) const {
  if (!even_integer_dim()) return true;
  return ExactScalar(2 * N) <= n_;
}

UniPoly p_sphere(int N) {
  if (N < 1) throw std::invalid_argument("p_sphere: N must be >= 1");
  UniPoly p(1);
  const UniPoly x = UniPoly::variable();
  for (int j = 0; j < N; ++j) p = p * (x + UniPoly(j * (j + 1)));
  return p;
}

ExactScalar q_sphere(const SphereContext& ctx, int N) {
  if (N < 1) throw std::invalid_argument("q_sphere: N must be >= 1");
  const ExactScalar h = ctx.half_n();
  ExactScalar v(1);
  for (int j = 0; j < N; ++j) v *= h + ExactScalar(j);
  for (int j = 1; j < N; ++j) v *= h - ExactScalar(j);
  return v;
}

TruncSeries<ExactScalar> v_sphere(const SphereContext& ctx, int T) {
  if (T < 1) throw std::invalid_argument("v_sphere: T must be >= 1");
  std::vector<ExactScalar> c;
  c.reserve(T + 1);
  for (int j = 0; j <= T; ++j) c.push_back(binomial(ctx.n(), j) * pow(ExactScalar(-1, 4), j));
  return TruncSeries<ExactScalar>(std::move(c));
}

ExactScalar w_sphere(const SphereContext& ctx, int N) {
  if (N < 0) throw std::invalid_argument("w_sphere: N must be >= 0");
  return binomial(ctx.half_n(), N) * pow(ExactScalar(-1, 4), N);
}

bool verify_sphere_sum(int N, int order) {
  if (order < 1 || order > 3) throw std::invalid_argument("verify_sphere_sum: order must be 1..3");
  if (N < order) throw std::invalid_argument("verify_sphere_sum: N must be >= order");

  NCOperatorPoly sum;
  for (const Composition& I : compositions(N))
    sum += NCOperatorPoly::from_composition(I, UniPoly(mk(I, order), "t"));
  std::map<int, UniPoly> images;
  for (int a = 1; a <= N; ++a) images[a] = p_sphere(a);
  UniPoly lhs = sum.substitute_commutative(images);

  const ExactScalar f = factorial(N) * factorial(N - 1);
  const UniPoly x = UniPoly::variable();
  UniPoly rhs;
  switch (order) {
    case 1:
      rhs = f * x;
      break;
    case 2:
      rhs = (-f / ExactScalar(2)) * (x * x + ExactScalar(N) * x);
      break;
    default:
      rhs = (f / ExactScalar(12)) *
            (x * x * x + ExactScalar(3 * N - 1) * (x * x) +
             ExactScalar(N * (3 * N - 1), 2) * x);
      break;
  }
  return lhs == rhs;
}

bool verify_eigenvalue_consistency(const SphereContext& ctx, int N) {
  ExactScalar lhs = p_sphere(N).eval(ctx.x0());
  ExactScalar rhs = ExactScalar(parity_sign(N)) * (ctx.half_n() - ExactScalar(N)) * q_sphere(ctx, N);
  return lhs == rhs;
}

bool verify_q_recursion_on_sphere(const SphereContext& ctx, int N) {
  if (N < 1) throw std::invalid_argument("verify_q_recursion_on_sphere: N must be >= 1");
  if (!ctx.order_allowed(N))
    throw std::invalid_argument("verify_q_recursion_on_sphere: order exceeds even dimension");

  const ExactScalar x0 = ctx.x0();
  ExactScalar lhs(0);
  for (const Composition& I : compositions(N)) {
    const int a = I.part(I.length() - 1);  // I = (J, a)
    ExactScalar term = m1(I) * ExactScalar(parity_sign(a)) * q_sphere(ctx, a);
    for (int i = 0; i + 1 < I.length(); ++i) term *= p_sphere(I.part(i)).eval(x0);
    lhs += term;
  }
  ExactScalar wN = series_sqrt(v_sphere(ctx, N)).coeff(N);
  ExactScalar rhs = pow(ExactScalar(2), 2 * N) * factorial(N) * factorial(N - 1) * wN;
  return lhs == rhs;
}

}  // namespace qlab
