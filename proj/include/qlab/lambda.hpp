#pragma once

#include <string>
#include <vector>

#include "qlab/multipoly.hpp"
#include "qlab/series.hpp"
#include "qlab/sphere.hpp"

namespace qlab {

// Formal generating series 1 + sum_{N>=1} L_N s^N/(N!(N-1)!), where L_N
// is the N-th name in lambda_names; the truncation order is the number
// of names.
TruncSeries<MultiPoly> build_G(SymbolSetPtr syms, const std::vector<std::string>& lambda_names);

struct LambdaRelationCheck {
  int N = 0;
  bool pass = false;
  std::string lhs;  // rendered N!(N-1)! [s^N] G^2
  std::string rhs;  // rendered 2 L_N + weighted pair sum
};

// Coefficient matching of G^2 against
//   2 L_N + sum_{j=1}^{N-1} j(N-j)/N binom(N,j)^2 L_j L_{N-j},
// formally in the coefficient symbols, for N = 1..Nmax.
std::vector<LambdaRelationCheck> verify_lambda_square_relations(int Nmax);
bool all_lambda_relations_pass(int Nmax);

// Order-M coefficient value on the round sphere: the multiplicity-
// weighted composition sum with the curvature value on the last slot
// and eigenvalue factors on the rest.
ExactScalar lambda_sphere(const SphereContext& ctx, int M);

// The two displayed low-order sphere identities, with l(M) the order-M
// value: l(2) + l(1)^2 = 16 v_4 and -l(3) - 6 l(1) l(2) = -2!3!2^5 v_6.
// The second right side carries the corrected overall sign.
bool verify_lambda_order2_display(const SphereContext& ctx);
bool verify_lambda_order3_display(const SphereContext& ctx);

// Square relation with sphere values against 2^(2N) N!(N-1)! v_{2N}.
bool verify_lambda_square_on_sphere(const SphereContext& ctx, int N);

}  // namespace qlab
