#include "qlab/ncpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace qlab {

bool WordOrder::operator()(const Word& a, const Word& b) const {
  int wa = std::accumulate(a.begin(), a.end(), 0);
  int wb = std::accumulate(b.begin(), b.end(), 0);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

NCOperatorPoly NCOperatorPoly::identity() { return term(Word{}, UniPoly(1, "t")); }

NCOperatorPoly NCOperatorPoly::generator(int a) {
  if (a < 1) throw std::invalid_argument("NCOperatorPoly: generator index must be >= 1");
  return term(Word{a}, UniPoly(1, "t"));
}

NCOperatorPoly NCOperatorPoly::term(const Word& w, const UniPoly& c) {
  for (int k : w)
    if (k < 1) throw std::invalid_argument("NCOperatorPoly: word factors must be >= 1");
  NCOperatorPoly p;
  if (!c.is_zero()) p.terms_.emplace(w, c);
  return p;
}

NCOperatorPoly NCOperatorPoly::from_composition(const Composition& I, const UniPoly& c) {
  return term(Word(I.parts().begin(), I.parts().end()), c);
}

UniPoly NCOperatorPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? UniPoly() : it->second;
}

int NCOperatorPoly::degree_t() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, c.degree());
  return d;
}

void NCOperatorPoly::insert(const Word& w, const UniPoly& c) {
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCOperatorPoly NCOperatorPoly::operator-() const {
  NCOperatorPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCOperatorPoly& NCOperatorPoly::operator+=(const NCOperatorPoly& o) {
  for (const auto& [w, c] : o.terms_) insert(w, c);
  return *this;
}

NCOperatorPoly& NCOperatorPoly::operator-=(const NCOperatorPoly& o) {
  for (const auto& [w, c] : o.terms_) insert(w, -c);
  return *this;
}

NCOperatorPoly operator*(const NCOperatorPoly& a, const NCOperatorPoly& b) {
  NCOperatorPoly r;
  Word w;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.insert(w, ca * cb);
    }
  return r;
}

NCOperatorPoly operator*(const UniPoly& c, const NCOperatorPoly& p) {
  NCOperatorPoly r;
  for (const auto& [w, pc] : p.terms_) r.insert(w, c * pc);
  return r;
}

NCOperatorPoly operator*(const ExactScalar& c, const NCOperatorPoly& p) {
  return UniPoly(c, "t") * p;
}

NCOperatorPoly NCOperatorPoly::eval_t(const ExactScalar& t0) const {
  NCOperatorPoly r;
  for (const auto& [w, c] : terms_) r.insert(w, UniPoly(c.eval(t0), "t"));
  return r;
}

NCOperatorPoly NCOperatorPoly::reversed() const {
  NCOperatorPoly r;
  for (const auto& [w, c] : terms_) r.insert(Word(w.rbegin(), w.rend()), c);
  return r;
}

UniPoly NCOperatorPoly::substitute_commutative(const std::map<int, UniPoly>& images) const {
  UniPoly out;
  for (const auto& [w, c] : terms_) {
    if (!c.is_constant())
      throw std::invalid_argument("substitute_commutative: coefficients must be constant in t");
    UniPoly prod(c.coeff(0));
    for (int k : w) {
      auto it = images.find(k);
      if (it == images.end())
        throw std::invalid_argument("substitute_commutative: no image for generator " +
                                    std::to_string(k));
      prod = prod * it->second;
    }
    out += prod;
  }
  return out;
}

std::optional<Word> NCOperatorPoly::first_difference(const NCOperatorPoly& a,
                                                     const NCOperatorPoly& b) {
  WordOrder less;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ia == a.terms_.end()) return ib->first;
    if (ib == b.terms_.end()) return ia->first;
    if (less(ia->first, ib->first)) return ia->first;
    if (less(ib->first, ia->first)) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::string word_str(const Word& w, bool latex) {
  if (w.empty()) return "1";
  std::string out;
  // Runs of an equal factor print as powers, matching display style.
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += " ";
    int sub = 2 * w[i];
    std::string subs = std::to_string(sub);
    if (latex && subs.size() > 1) subs = "{" + subs + "}";
    out += "P_" + subs;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

std::string render(const NCOperatorPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    std::string ws = word_str(w, latex);
    if (c.is_constant()) {
      ExactScalar v = c.coeff(0);
      bool neg = v.sign() < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      ExactScalar mag = neg ? -v : v;
      if (w.empty()) {
        out += mag.str();
      } else {
        if (mag != ExactScalar(1)) out += mag.str() + "*";
        out += ws;
      }
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      if (!w.empty()) out += "*" + ws;
    }
  }
  return out;
}

}  // namespace

std::string NCOperatorPoly::str() const { return render(*this, false); }

std::string NCOperatorPoly::latex() const { return render(*this, true); }

}  // namespace qlab
