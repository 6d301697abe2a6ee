#include "qlab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qlab {

ExactScalar::ExactScalar(const Int& num, const Int& den) {
  if (den.is_zero()) throw std::invalid_argument("ExactScalar: zero denominator");
  v_ = boost::multiprecision::cpp_rational(num);
  v_ /= boost::multiprecision::cpp_rational(den);
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r;
  r.v_ = -v_;
  return r;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::invalid_argument("ExactScalar: division by zero");
  v_ /= o.v_;
  return *this;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_int = [&]() -> Int {
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = (text[i++] == '-');
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("ExactScalar: expected digits in '" + std::string(text) + "'");
    Int v(std::string(text.substr(start, i - start)));
    return neg ? Int(-v) : v;
  };
  skip_ws();
  Int num = read_int();
  skip_ws();
  Int den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = read_int();
    skip_ws();
  }
  if (i != text.size()) throw std::invalid_argument("ExactScalar: trailing characters in '" + std::string(text) + "'");
  return ExactScalar(num, den);
}

std::string ExactScalar::str() const {
  std::string s = num().str();
  if (den() != 1) s += "/" + den().str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& v) { return os << v.str(); }

ExactScalar factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return ExactScalar(r);
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

ExactScalar binomial(const ExactScalar& x, int k) {
  if (k < 0) return ExactScalar(0);
  ExactScalar r(1);
  for (int i = 0; i < k; ++i) r *= x - ExactScalar(i);
  return r / factorial(k);
}

ExactScalar pow(const ExactScalar& base, int e) {
  if (e < 0) {
    if (base.is_zero()) throw std::invalid_argument("pow: zero base with negative exponent");
    return ExactScalar(1) / pow(base, -e);
  }
  ExactScalar r(1), b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace qlab
