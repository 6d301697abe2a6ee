#include "qlab/lambda.hpp"

#include <stdexcept>

#include "qlab/multiplicity.hpp"

namespace qlab {

TruncSeries<MultiPoly> build_G(SymbolSetPtr syms, const std::vector<std::string>& lambda_names) {
  std::vector<MultiPoly> c;
  c.reserve(lambda_names.size() + 1);
  c.push_back(MultiPoly::constant(syms, ExactScalar(1)));
  for (size_t i = 0; i < lambda_names.size(); ++i) {
    const int N = static_cast<int>(i) + 1;
    const ExactScalar weight = ExactScalar(1) / (factorial(N) * factorial(N - 1));
    c.push_back(weight * MultiPoly::symbol(syms, lambda_names[i]));
  }
  return TruncSeries<MultiPoly>(std::move(c));
}

std::vector<LambdaRelationCheck> verify_lambda_square_relations(int Nmax) {
  if (Nmax < 1) throw std::invalid_argument("verify_lambda_square_relations: Nmax must be >= 1");
  std::vector<std::string> names;
  for (int N = 1; N <= Nmax; ++N) names.push_back("L" + std::to_string(2 * N));
  auto syms = make_symbols(names);
  const TruncSeries<MultiPoly> g2 = build_G(syms, names).square();

  std::vector<LambdaRelationCheck> out;
  for (int N = 1; N <= Nmax; ++N) {
    const MultiPoly lhs =
        (factorial(N) * factorial(N - 1)) * g2.coeff(N);
    MultiPoly rhs = ExactScalar(2) * MultiPoly::symbol(syms, names[N - 1]);
    for (int j = 1; j < N; ++j) {
      const ExactScalar weight =
          ExactScalar(j * (N - j), N) * ExactScalar(binomial(N, j) * binomial(N, j));
      rhs += weight * (MultiPoly::symbol(syms, names[j - 1]) *
                       MultiPoly::symbol(syms, names[N - j - 1]));
    }
    out.push_back({N, lhs == rhs, lhs.str(), rhs.str()});
  }
  return out;
}

bool all_lambda_relations_pass(int Nmax) {
  for (const LambdaRelationCheck& c : verify_lambda_square_relations(Nmax))
    if (!c.pass) return false;
  return true;
}

ExactScalar lambda_sphere(const SphereContext& ctx, int M) {
  if (M < 1) throw std::invalid_argument("lambda_sphere: order must be >= 1");
  if (!ctx.order_allowed(M))
    throw std::invalid_argument("lambda_sphere: order exceeds n/2 in even integer dimension");
  const ExactScalar x0 = ctx.x0();
  ExactScalar total(0);
  for (const Composition& I : compositions(M)) {
    const int a = I.part(I.length() - 1);
    ExactScalar val = m1(I) * parity_sign(a) * q_sphere(ctx, a);
    const Composition J = I.without_last();
    for (int j : J.parts()) val = val * p_sphere(j).eval(x0);
    total = total + val;
  }
  return total;
}

bool verify_lambda_order2_display(const SphereContext& ctx) {
  const ExactScalar l1 = lambda_sphere(ctx, 1);
  const ExactScalar l2 = lambda_sphere(ctx, 2);
  return l2 + l1 * l1 == ExactScalar(16) * v_sphere(ctx, 2).coeff(2);
}

bool verify_lambda_order3_display(const SphereContext& ctx) {
  const ExactScalar l1 = lambda_sphere(ctx, 1);
  const ExactScalar l2 = lambda_sphere(ctx, 2);
  const ExactScalar l3 = lambda_sphere(ctx, 3);
  const ExactScalar rhs =
      -(factorial(2) * factorial(3) * pow(ExactScalar(2), 5)) * v_sphere(ctx, 3).coeff(3);
  return -l3 - ExactScalar(6) * l1 * l2 == rhs;
}

bool verify_lambda_square_on_sphere(const SphereContext& ctx, int N) {
  if (N < 1) throw std::invalid_argument("verify_lambda_square_on_sphere: order must be >= 1");
  ExactScalar lhs = ExactScalar(2) * lambda_sphere(ctx, N);
  for (int j = 1; j < N; ++j)
    lhs += ExactScalar(j * (N - j), N) * ExactScalar(binomial(N, j) * binomial(N, j)) *
           lambda_sphere(ctx, j) * lambda_sphere(ctx, N - j);
  const ExactScalar rhs =
      pow(ExactScalar(2), 2 * N) * factorial(N) * factorial(N - 1) * v_sphere(ctx, N).coeff(N);
  return lhs == rhs;
}

}  // namespace qlab
