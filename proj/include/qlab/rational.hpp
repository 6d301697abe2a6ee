#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qlab {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored in lowest terms with positive
// denominator; every operation is exact.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int v) : v_(v) {}
  ExactScalar(long v) : v_(v) {}
  ExactScalar(long long v) : v_(static_cast<long>(v)) {}
  ExactScalar(const Int& v) : v_(v) {}
  ExactScalar(const Int& num, const Int& den);

  static ExactScalar parse(std::string_view text);

  Int num() const { return boost::multiprecision::numerator(v_); }
  Int den() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_.sign(); }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
  ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
  ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactScalar& a, const ExactScalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return a.v_ >= b.v_; }

  // "p" for integers, "p/q" otherwise; parse() inverts this exactly.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& v);

 private:
  boost::multiprecision::cpp_rational v_;
};

ExactScalar factorial(int n);
Int binomial(int n, int k);
// x(x-1)...(x-k+1)/k! for arbitrary rational x.
ExactScalar binomial(const ExactScalar& x, int k);
// Integer powers; negative exponents require a nonzero base.
ExactScalar pow(const ExactScalar& base, int e);

inline int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace qlab
