#include "qlab/series.hpp"

namespace qlab {

ExactScalar v_from_schouten_spectrum(const std::vector<ExactScalar>& eigs, int N) {
  if (N < 1) throw std::invalid_argument("v_from_schouten_spectrum: N must be >= 1");
  if (N > static_cast<int>(eigs.size())) return ExactScalar(0);
  // e[k] accumulates the degree-k elementary symmetric polynomial.
  std::vector<ExactScalar> e(N + 1, ExactScalar(0));
  e[0] = ExactScalar(1);
  for (const ExactScalar& x : eigs)
    for (int k = N; k >= 1; --k) e[k] += e[k - 1] * x;
  return pow(ExactScalar(-2), -N) * e[N];
}

}  // namespace qlab
