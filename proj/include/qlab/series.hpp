#pragma once

#include <stdexcept>
#include <vector>

#include "qlab/multipoly.hpp"
#include "qlab/rational.hpp"

namespace qlab {

// Adapts a coefficient ring for TruncSeries: additive identity of the
// right context, unit test, and scaling by rationals.
template <class R>
struct RingTraits;

template <>
struct RingTraits<ExactScalar> {
  static ExactScalar zero_like(const ExactScalar&) { return ExactScalar(0); }
  static bool is_one(const ExactScalar& v) { return v == ExactScalar(1); }
  static ExactScalar scale(const ExactScalar& v, const ExactScalar& c) { return v * c; }
};

template <>
struct RingTraits<MultiPoly> {
  static MultiPoly zero_like(const MultiPoly& v) { return MultiPoly(v.symbols()); }
  static bool is_one(const MultiPoly& v) { return v.is_one(); }
  static MultiPoly scale(const MultiPoly& v, const ExactScalar& c) { return c * v; }
};

// Truncated power series in s = r^2: coefficient j holds the order-2j
// term. Operations never consult coefficients beyond the truncation;
// binary operations truncate to the shorter operand.
template <class R>
class TruncSeries {
 public:
  explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncSeries: needs at least the constant term");
  }

  static TruncSeries one_like(const R& sample, int T) {
    std::vector<R> c(static_cast<size_t>(T) + 1, RingTraits<R>::zero_like(sample));
    c[0] = sample;
    if (!RingTraits<R>::is_one(c[0]))
      throw std::invalid_argument("TruncSeries::one_like: sample must be the ring unit");
    return TruncSeries(std::move(c));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& coeff(int j) const {
    if (j < 0 || j > order()) throw std::out_of_range("TruncSeries: coefficient index out of range");
    return c_[j];
  }
  const std::vector<R>& coeffs() const { return c_; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<R> c;
    c.reserve(n);
    for (size_t i = 0; i < n; ++i) c.push_back(a.c_[i] + b.c_[i]);
    return TruncSeries(std::move(c));
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<R> c;
    c.reserve(n);
    for (size_t i = 0; i < n; ++i) c.push_back(a.c_[i] - b.c_[i]);
    return TruncSeries(std::move(c));
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<R> c(n, RingTraits<R>::zero_like(a.c_[0]));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; i + j < n; ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return TruncSeries(std::move(c));
  }

  TruncSeries scaled(const ExactScalar& f) const {
    std::vector<R> c;
    c.reserve(c_.size());
    for (const R& v : c_) c.push_back(RingTraits<R>::scale(v, f));
    return TruncSeries(std::move(c));
  }

  TruncSeries square() const { return *this * *this; }

 private:
  std::vector<R> c_;
};

// Coefficientwise square root of a series with unit constant term, via
// w_k = (v_k - sum_{i=1}^{k-1} w_i w_{k-i}) / 2.
template <class R>
TruncSeries<R> series_sqrt(const TruncSeries<R>& v) {
  if (!RingTraits<R>::is_one(v.coeff(0)))
    throw std::domain_error("series_sqrt: constant term must be 1");
  std::vector<R> w;
  w.reserve(v.order() + 1);
  w.push_back(v.coeff(0));
  const ExactScalar half(1, 2);
  for (int k = 1; k <= v.order(); ++k) {
    R acc = v.coeff(k);
    for (int i = 1; i < k; ++i) acc = acc - w[i] * w[k - i];
    w.push_back(RingTraits<R>::scale(acc, half));
  }
  return TruncSeries<R>(std::move(w));
}

// (-2)^(-N) e_N(eigs): the order-N renormalized volume coefficient of a
// locally conformally flat metric from its Schouten eigenvalues, with
// e_N the elementary symmetric polynomial. N beyond the eigenvalue count
// gives 0.
ExactScalar v_from_schouten_spectrum(const std::vector<ExactScalar>& eigs, int N);

}  // namespace qlab
