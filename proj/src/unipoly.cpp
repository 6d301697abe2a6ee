#include "qlab/unipoly.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace qlab {

UniPoly::UniPoly(const ExactScalar& constant, std::string var) : var_(std::move(var)) {
  if (!constant.is_zero()) c_.push_back(constant);
}

UniPoly UniPoly::variable(std::string var) { return monomial(1, ExactScalar(1), std::move(var)); }

UniPoly UniPoly::monomial(int deg, const ExactScalar& c, std::string var) {
  if (deg < 0) throw std::invalid_argument("UniPoly: negative degree");
  UniPoly p;
  p.var_ = std::move(var);
  if (!c.is_zero()) {
    p.c_.assign(deg + 1, ExactScalar(0));
    p.c_[deg] = c;
  }
  return p;
}

UniPoly UniPoly::falling_factorial(int N, std::string var) {
  if (N < 0) throw std::invalid_argument("falling_factorial: negative order");
  UniPoly p(1, var);
  const UniPoly x = variable(var);
  for (int i = 0; i < N; ++i) p = p * (x - UniPoly(ExactScalar(i), var));
  return p;
}

ExactScalar UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return ExactScalar(0);
  return c_[k];
}

ExactScalar UniPoly::eval(const ExactScalar& x) const {
  ExactScalar v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (is_constant() && !o.is_constant()) var_ = o.var_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ExactScalar(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (is_constant() && !o.is_constant()) var_ = o.var_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ExactScalar(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.var_ = a.is_constant() && !b.is_constant() ? b.var_ : a.var_;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, ExactScalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

UniPoly operator*(const ExactScalar& c, const UniPoly& p) {
  UniPoly r = p;
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

UniPoly UniPoly::div_exact(const UniPoly& q) const {
  if (q.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  UniPoly rem = *this;
  UniPoly quot;
  quot.var_ = var_;
  if (degree() >= q.degree()) quot.c_.assign(degree() - q.degree() + 1, ExactScalar(0));
  const ExactScalar& lead = q.c_.back();
  while (!rem.is_zero() && rem.degree() >= q.degree()) {
    int shift = rem.degree() - q.degree();
    ExactScalar f = rem.c_.back() / lead;
    quot.c_[shift] = f;
    for (size_t i = 0; i < q.c_.size(); ++i) rem.c_[shift + i] -= f * q.c_[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw std::domain_error("UniPoly: inexact division");
  quot.trim();
  return quot;
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const ExactScalar& c = c_[k];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    ExactScalar mag = neg ? -c : c;
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != ExactScalar(1)) out += mag.str() + "*";
      out += var_;
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

UniPoly UniPoly::parse(std::string_view text, std::string var) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto fail = [&](const std::string& why) -> std::runtime_error {
    return std::runtime_error("UniPoly parse error (" + why + ") in '" + std::string(text) + "'");
  };
  auto read_uint = [&]() -> Int {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw fail("expected digits");
    return Int(std::string(text.substr(start, i - start)));
  };
  auto read_ident = [&]() -> std::string {
    size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      if (std::isdigit(static_cast<unsigned char>(text[i])) && i == start) break;
      ++i;
    }
    return std::string(text.substr(start, i - start));
  };

  UniPoly result(0, var);
  std::string seen_var;
  skip_ws();
  if (i == text.size()) throw fail("empty input");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    ExactScalar coeff(1);
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      Int num = read_uint();
      Int den = 1;
      skip_ws();
      if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        den = read_uint();
        skip_ws();
      }
      coeff = ExactScalar(num, den);
      have_coeff = true;
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    int deg = 0;
    if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      std::string name = read_ident();
      if (seen_var.empty()) seen_var = name;
      if (name != seen_var) throw fail("mixed variable names");
      deg = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        deg = static_cast<int>(read_uint());
      }
    } else if (!have_coeff) {
      throw fail("expected coefficient or variable");
    }
    if (sign < 0) coeff = -coeff;
    result += monomial(deg, coeff, var);
    skip_ws();
    first = false;
  }
  if (!seen_var.empty()) result.var_ = seen_var;
  return result;
}

}  // namespace qlab
