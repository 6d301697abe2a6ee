#pragma once

#include "qlab/composition.hpp"
#include "qlab/rational.hpp"

namespace qlab {

// First-order multiplicity of a nonempty composition I = (I_1,...,I_r):
//   -(-1)^r |I|! (|I|-1)! / prod(I_j! (I_j-1)!) / prod(I_j + I_{j+1}).
ExactScalar m1(const Composition& I);

// Higher-order multiplicities. k = 1 delegates to m1. For I = (N) the
// closed form s(N,N-k+1)/((N-1)...(N-k+1)) covers 2 <= k <= N; for
// longer I the Stirling-sum formula covers 2 <= k <= |I|-1, with
// a = first part. Every (I,k) outside those ranges yields 0 by the
// extension convention.
ExactScalar mk(const Composition& I, int k);

// Sum of m1 over all compositions of N vanishes (N >= 2).
bool verify_m_sum_zero(int N);

// m1 is invariant under reversal of the composition.
bool verify_palindrome_symmetry(int N);

// Bilinear Stirling identity at distinct points x != y:
//   sum_{a,b>=1, 2<=a+b<=N} s(N,a+b) x^a y^b = (y b_N(x) - x b_N(y))/(x - y).
bool verify_stirling_pair_identity(int N, const ExactScalar& x, const ExactScalar& y);

// Diagonal Stirling identity at an integer point M in 0..N-1:
//   sum_{a,b>=1, 2<=a+b<=N} s(N,a+b) M^(a+b-1) = (-1)^(N-M-1) M! (N-M-1)!.
// Exact comparison; at M = 0 the left side is empty (every exponent is
// >= 1), so the identity fails there and the function reports that
// honestly.
bool verify_stirling_diagonal_identity(int N, int M);

// Proof-level quotients: for every composition (j,r,K) of N,
//   m1((j,r,K))/m1((r,K)) = -1/(j+r) * binom(N,j)^2 * j(N-j)/N,
// which for empty K (where j+r = N) is the two-part form with 1/N.
bool verify_ratio_identities(int N);

}  // namespace qlab
