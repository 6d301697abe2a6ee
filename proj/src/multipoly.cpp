#include "qlab/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qlab {

SymbolSet::SymbolSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("SymbolSet: empty symbol name");
    if (!seen.insert(n).second) throw std::invalid_argument("SymbolSet: duplicate symbol " + n);
  }
}

int SymbolSet::index(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

SymbolSetPtr make_symbols(std::vector<std::string> names) {
  return std::make_shared<const SymbolSet>(std::move(names));
}

bool GradedLexDescending::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(SymbolSetPtr syms) : syms_(std::move(syms)) {
  if (!syms_) throw std::invalid_argument("MultiPoly: null symbol set");
}

MultiPoly MultiPoly::constant(SymbolSetPtr syms, const ExactScalar& c) {
  MultiPoly p(std::move(syms));
  if (!c.is_zero()) p.terms_.emplace(std::vector<int>(p.syms_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::symbol(SymbolSetPtr syms, std::string_view name) {
  MultiPoly p(std::move(syms));
  int i = p.syms_->index(name);
  if (i < 0) throw std::invalid_argument("MultiPoly: unknown symbol " + std::string(name));
  std::vector<int> exps(p.syms_->size(), 0);
  exps[i] = 1;
  p.terms_.emplace(std::move(exps), ExactScalar(1));
  return p;
}

MultiPoly MultiPoly::monomial(SymbolSetPtr syms, std::vector<int> exps, const ExactScalar& c) {
  MultiPoly p(std::move(syms));
  if (static_cast<int>(exps.size()) != p.syms_->size())
    throw std::invalid_argument("MultiPoly: exponent vector size mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool MultiPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [exps, c] = *terms_.begin();
  return c == ExactScalar(1) && std::accumulate(exps.begin(), exps.end(), 0) == 0;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& lead = terms_.begin()->first;
  return std::accumulate(lead.begin(), lead.end(), 0);
}

ExactScalar MultiPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

void MultiPoly::check_same_alphabet(const MultiPoly& o) const {
  if (syms_ != o.syms_ && !(*syms_ == *o.syms_))
    throw std::invalid_argument("MultiPoly: mismatched symbol alphabets");
}

void MultiPoly::insert_term(const std::vector<int>& exps, const ExactScalar& c) {
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [exps, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_alphabet(o);
  for (const auto& [exps, c] : o.terms_) insert_term(exps, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_alphabet(o);
  for (const auto& [exps, c] : o.terms_) insert_term(exps, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_alphabet(b);
  MultiPoly r(a.syms_);
  std::vector<int> exps(a.syms_->size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      r.insert_term(exps, ca * cb);
    }
  return r;
}

MultiPoly operator*(const ExactScalar& c, const MultiPoly& p) {
  MultiPoly r(p.syms_);
  if (c.is_zero()) return r;
  r.terms_ = p.terms_;
  for (auto& [exps, v] : r.terms_) v *= c;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_alphabet(b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
  MultiPoly r = constant(syms_, ExactScalar(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::substitute(std::string_view name, const MultiPoly& image) const {
  check_same_alphabet(image);
  int target = syms_->index(name);
  if (target < 0) throw std::invalid_argument("MultiPoly: unknown symbol " + std::string(name));
  MultiPoly r(syms_);
  for (const auto& [exps, c] : terms_) {
    std::vector<int> rest = exps;
    int e = rest[target];
    rest[target] = 0;
    MultiPoly term = monomial(syms_, rest, c);
    if (e > 0) term = term * image.pow(e);
    r += term;
  }
  return r;
}

ExactScalar MultiPoly::eval(const std::map<std::string, ExactScalar>& values) const {
  ExactScalar sum(0);
  for (const auto& [exps, c] : terms_) {
    ExactScalar term = c;
    for (int i = 0; i < syms_->size(); ++i) {
      if (exps[i] == 0) continue;
      auto it = values.find(syms_->name(i));
      if (it == values.end())
        throw std::invalid_argument("MultiPoly: no value for symbol " + syms_->name(i));
      term *= qlab::pow(it->second, exps[i]);
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exps, c] : terms_) {
    bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    ExactScalar mag = neg ? -c : c;
    std::string mono;
    for (int i = 0; i < syms_->size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += syms_->name(i);
      if (exps[i] != 1) mono += "^" + std::to_string(exps[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != ExactScalar(1)) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly MultiPoly::parse(SymbolSetPtr syms, std::string_view text) {
  MultiPoly result(syms);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto fail = [&](const std::string& why) -> std::runtime_error {
    return std::runtime_error("MultiPoly parse error (" + why + ") in '" + std::string(text) + "'");
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
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    return std::string(text.substr(start, i - start));
  };

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
    bool have_any = false;
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
      have_any = true;
    }
    std::vector<int> exps(syms->size(), 0);
    while (true) {
      skip_ws();
      if (have_any) {
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip_ws();
        } else if (!(i < text.size() &&
                     (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_'))) {
          break;
        }
      }
      if (i >= text.size() ||
          !(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        if (!have_any) throw fail("expected coefficient or symbol");
        break;
      }
      std::string name = read_ident();
      int si = syms->index(name);
      if (si < 0) throw fail("unknown symbol " + name);
      int e = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        e = static_cast<int>(read_uint());
      }
      exps[si] += e;
      have_any = true;
    }
    if (sign < 0) coeff = -coeff;
    result += monomial(syms, exps, coeff);
    skip_ws();
    first = false;
  }
  return result;
}

}  // namespace qlab
