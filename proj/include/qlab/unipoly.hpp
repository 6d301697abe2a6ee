#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlab/rational.hpp"

namespace qlab {

// Dense univariate polynomial with ExactScalar coefficients. The variable
// name is presentation metadata only; equality and arithmetic ignore it.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const ExactScalar& constant, std::string var = "x");
  UniPoly(int constant, std::string var = "x") : UniPoly(ExactScalar(constant), std::move(var)) {}

  static UniPoly variable(std::string var = "x");
  static UniPoly monomial(int deg, const ExactScalar& c, std::string var = "x");
  // b_N(x) = x(x-1)...(x-N+1); the empty product for N = 0 is 1.
  static UniPoly falling_factorial(int N, std::string var = "x");

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  ExactScalar coeff(int k) const;
  const std::string& var() const { return var_; }

  ExactScalar eval(const ExactScalar& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const ExactScalar& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Exact quotient; throws std::domain_error if q does not divide *this.
  UniPoly div_exact(const UniPoly& q) const;

  // Canonical text, e.g. "3/2*x^2 - x + 5"; parse() inverts it exactly.
  std::string str() const;
  static UniPoly parse(std::string_view text, std::string var = "x");

 private:
  void trim();

  std::vector<ExactScalar> c_;  // c_[k] multiplies var^k; no trailing zeros
  std::string var_ = "x";
};

}  // namespace qlab
