#include "qlab/pi.hpp"

#include <sstream>
#include <stdexcept>

#include "qlab/multiplicity.hpp"

namespace qlab {

NCOperatorPoly PiPolynomial::eval_shifted(const ExactScalar& c) const {
  return body.eval_t(c - ExactScalar(N));
}

NCOperatorPoly c_operator(int N, int k) {
  if (N < 1) throw std::invalid_argument("c_operator: N must be >= 1");
  if (k < 1 || k > N) throw std::invalid_argument("c_operator: k out of range");
  if (k == N)
    return ExactScalar(parity_sign(N - 1)) * NCOperatorPoly::generator(N);
  NCOperatorPoly sum;
  for (const Composition& I : compositions(N))
    sum += NCOperatorPoly::from_composition(I, UniPoly(mk(I, k), "t"));
  return sum;
}

PiPolynomial pi_definition(int N) {
  if (N < 1) throw std::invalid_argument("pi_definition: N must be >= 1");
  NCOperatorPoly body;
  for (int k = 1; k <= N; ++k) {
    UniPoly tpow = UniPoly::monomial(N - k, ExactScalar(1) / factorial(N - k), "t");
    body += tpow * c_operator(N, k);
  }
  return PiPolynomial{N, body};
}

PiPolynomial pi_closed(int N) {
  if (N < 1) throw std::invalid_argument("pi_closed: N must be >= 1");
  const UniPoly bN = UniPoly::falling_factorial(N, "t");
  const UniPoly t = UniPoly::variable("t");
  NCOperatorPoly body;
  for (const Composition& I : compositions(N)) {
    UniPoly quotient = bN.div_exact(t - UniPoly(ExactScalar(N - I.part(0)), "t"));
    body += NCOperatorPoly::from_composition(I, m1(I) * quotient);
  }
  body = (ExactScalar(1) / factorial(N - 1)) * body;
  return PiPolynomial{N, body};
}

namespace {

// Factorization value of order N at the node t = N - j (j = 1..N-1),
// given the order-(N-j) polynomial.
NCOperatorPoly node_value(int N, int j, const PiPolynomial& lower) {
  // The shared spectral point has shifted parameter 2N - j, which is
  // t = N in the lower body's own variable.
  NCOperatorPoly lower_at = lower.eval_shifted(ExactScalar(2 * N - j));
  return ExactScalar(parity_sign(j)) * (NCOperatorPoly::generator(j) * lower_at);
}

NCOperatorPoly top_value(int N) {
  return ExactScalar(parity_sign(N - 1)) * NCOperatorPoly::generator(N);
}

}  // namespace

PiPolynomial pi_from_factorizations(int N) {
  if (N < 1) throw std::invalid_argument("pi_from_factorizations: N must be >= 1");
  std::vector<PiPolynomial> pis(N + 1);
  pis[1] = PiPolynomial{1, NCOperatorPoly::generator(1)};
  for (int M = 2; M <= N; ++M) {
    // Values at the nodes t = 0..M-1; node t = M - j comes from order M-j.
    std::vector<NCOperatorPoly> values(M);
    values[0] = top_value(M);
    for (int j = 1; j <= M - 1; ++j) values[M - j] = node_value(M, j, pis[M - j]);
    NCOperatorPoly body;
    for (int i = 0; i < M; ++i) {
      UniPoly li(1, "t");
      ExactScalar denom(1);
      for (int m = 0; m < M; ++m) {
        if (m == i) continue;
        li = li * (UniPoly::variable("t") - UniPoly(ExactScalar(m), "t"));
        denom *= ExactScalar(i - m);
      }
      body += ((ExactScalar(1) / denom) * li) * values[i];
    }
    pis[M] = PiPolynomial{M, body};
  }
  return pis[N];
}

std::vector<FactorizationIdentity> verify_factorizations(int N) {
  if (N < 1) throw std::invalid_argument("verify_factorizations: N must be >= 1");
  std::vector<PiPolynomial> pis(N + 1);
  for (int M = 1; M <= N; ++M) pis[M] = pi_definition(M);

  std::vector<FactorizationIdentity> out;
  for (int j = 1; j <= N; ++j) {
    NCOperatorPoly lhs = pis[N].body.eval_t(ExactScalar(N - j));
    NCOperatorPoly rhs = j == N ? top_value(N) : node_value(N, j, pis[N - j]);
    FactorizationIdentity rec;
    rec.j = j;
    rec.pass = lhs == rhs;
    if (!rec.pass) {
      rec.first_diff = NCOperatorPoly::first_difference(lhs, rhs);
      std::ostringstream os;
      if (rec.first_diff) {
        os << "first differing word " << word_str(*rec.first_diff) << ": "
           << lhs.coeff(*rec.first_diff).str() << " vs " << rhs.coeff(*rec.first_diff).str();
      }
      rec.detail = os.str();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

bool all_factorizations_pass(int N) {
  for (const auto& rec : verify_factorizations(N))
    if (!rec.pass) return false;
  return true;
}

}  // namespace qlab
