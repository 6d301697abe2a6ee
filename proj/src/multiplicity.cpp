#include "qlab/multiplicity.hpp"

#include <stdexcept>

namespace qlab {

ExactScalar m1(const Composition& I) {
  if (I.empty()) throw std::invalid_argument("m1: empty composition");
  const int r = I.length();
  const int N = I.size();
  ExactScalar v = ExactScalar(-parity_sign(r)) * factorial(N) * factorial(N - 1);
  for (int p : I.parts()) v /= factorial(p) * factorial(p - 1);
  for (int j = 0; j + 1 < r; ++j) v /= ExactScalar(I.part(j) + I.part(j + 1));
  return v;
}

ExactScalar mk(const Composition& I, int k) {
  if (k < 1) throw std::invalid_argument("mk: order must be >= 1");
  if (I.empty()) throw std::invalid_argument("mk: empty composition");
  if (k == 1) return m1(I);
  const int N = I.size();
  auto denom = [&] {
    ExactScalar d(1);
    for (int i = 1; i < k; ++i) d *= ExactScalar(N - i);
    return d;
  };
  if (I.length() == 1) {
    if (k > N) return ExactScalar(0);
    return ExactScalar(stirling1(N, N - k + 1)) / denom();
  }
  if (k > N - 1) return ExactScalar(0);
  const int jsz = N - I.part(0);  // |J| for I = (a,J)
  ExactScalar num(0);
  for (int j = 0; j < k; ++j) num += ExactScalar(stirling1(N, N - j)) * pow(ExactScalar(jsz), k - 1 - j);
  return num / denom() * m1(I);
}

bool verify_m_sum_zero(int N) {
  if (N < 2) throw std::invalid_argument("verify_m_sum_zero: N must be >= 2");
  ExactScalar sum(0);
  for (const Composition& I : compositions(N)) sum += m1(I);
  return sum.is_zero();
}

bool verify_palindrome_symmetry(int N) {
  if (N < 1) throw std::invalid_argument("verify_palindrome_symmetry: N must be >= 1");
  for (const Composition& I : compositions(N))
    if (m1(I) != m1(I.reversed())) return false;
  return true;
}

namespace {

ExactScalar stirling_double_sum(int N, const ExactScalar& x, const ExactScalar& y) {
  ExactScalar sum(0);
  for (int a = 1; a <= N - 1; ++a)
    for (int b = 1; b <= N - a; ++b)
      if (a + b >= 2) sum += ExactScalar(stirling1(N, a + b)) * pow(x, a) * pow(y, b);
  return sum;
}

}  // namespace

bool verify_stirling_pair_identity(int N, const ExactScalar& x, const ExactScalar& y) {
  if (N < 2) throw std::invalid_argument("verify_stirling_pair_identity: N must be >= 2");
  if (x == y) throw std::invalid_argument("verify_stirling_pair_identity: x and y must differ");
  auto falling = [&](const ExactScalar& v) {
    ExactScalar p(1);
    for (int i = 0; i < N; ++i) p *= v - ExactScalar(i);
    return p;
  };
  ExactScalar rhs = (y * falling(x) - x * falling(y)) / (x - y);
  return stirling_double_sum(N, x, y) == rhs;
}

bool verify_stirling_diagonal_identity(int N, int M) {
  if (N < 2) throw std::invalid_argument("verify_stirling_diagonal_identity: N must be >= 2");
  if (M < 0 || M > N - 1)
    throw std::invalid_argument("verify_stirling_diagonal_identity: M out of range");
  ExactScalar lhs(0);
  for (int a = 1; a <= N - 1; ++a)
    for (int b = 1; b <= N - a; ++b)
      if (a + b >= 2) lhs += ExactScalar(stirling1(N, a + b)) * pow(ExactScalar(M), a + b - 1);
  ExactScalar rhs = ExactScalar(parity_sign(N - M - 1)) * factorial(M) * factorial(N - M - 1);
  return lhs == rhs;
}

bool verify_ratio_identities(int N) {
  if (N < 2) throw std::invalid_argument("verify_ratio_identities: N must be >= 2");
  for (const Composition& I : compositions(N)) {
    if (I.length() < 2) continue;
    const int j = I.part(0);
    const int r = I.part(1);
    ExactScalar lhs = m1(I) / m1(I.without_first());
    ExactScalar rhs = ExactScalar(-1, j + r) * ExactScalar(binomial(N, j) * binomial(N, j)) *
                      ExactScalar(j * (N - j), N);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace qlab
