#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/ncpoly.hpp"

namespace qlab {

// Degree-(N-1) operator polynomial of half-order N. The body lives in
// this order's own spectral variable t; carrying N along makes
// cross-order evaluations translate a shared spectral point correctly.
struct PiPolynomial {
  int N = 0;
  NCOperatorPoly body;

  // Evaluate at the point where the shifted spectral parameter equals c,
  // i.e. at t = c - N in this body's variable.
  NCOperatorPoly eval_shifted(const ExactScalar& c) const;
};

// Weighted composition sum of order k: for k < N the mk-weighted sum
// over all compositions of N; for k = N the single top word with sign
// (-1)^(N-1).
NCOperatorPoly c_operator(int N, int k);

// Sum over k of c_operator(N,k) t^(N-k)/(N-k)!.
PiPolynomial pi_definition(int N);

// Closed form: (1/(N-1)!) sum over compositions I of
// m1(I) * b_N(t)/(t - (N - I_1)) * P_I, the division exact because
// N - I_1 is a root of the falling factorial b_N.
PiPolynomial pi_closed(int N);

// Rebuild from the factorization constraints alone: Lagrange
// interpolation at t = 0..N-1 of the factorization values, recursing on
// lower orders. Independent of pi_definition except for the degree bound.
PiPolynomial pi_from_factorizations(int N);

struct FactorizationIdentity {
  int j = 0;  // 1..N; j = N is the constant-term case
  bool pass = false;
  std::optional<Word> first_diff;
  std::string detail;  // empty when passing
};

// Check every factorization of pi_definition(N): for j = 1..N-1 the
// value at t = N-j splits off the order-j generator times the
// order-(N-j) polynomial evaluated at its own t = N; at t = 0 the value
// collapses to the signed top generator.
std::vector<FactorizationIdentity> verify_factorizations(int N);

bool all_factorizations_pass(int N);

}  // namespace qlab
