#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qlab/rational.hpp"

namespace qlab {

// Fixed, ordered alphabet of symbol names shared by a family of MultiPoly
// values. Mixing values over different alphabets is an error.
class SymbolSet {
 public:
  explicit SymbolSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index(std::string_view name) const;  // -1 if absent

  friend bool operator==(const SymbolSet& a, const SymbolSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using SymbolSetPtr = std::shared_ptr<const SymbolSet>;

SymbolSetPtr make_symbols(std::vector<std::string> names);

// Monomial order: higher total degree first, then lexicographic by
// exponent vector. Leading term comes first when iterating.
struct GradedLexDescending {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over a fixed symbol alphabet.
class MultiPoly {
 public:
  explicit MultiPoly(SymbolSetPtr syms);

  static MultiPoly constant(SymbolSetPtr syms, const ExactScalar& c);
  static MultiPoly symbol(SymbolSetPtr syms, std::string_view name);
  static MultiPoly monomial(SymbolSetPtr syms, std::vector<int> exps, const ExactScalar& c);

  const SymbolSetPtr& symbols() const { return syms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // -1 for zero
  ExactScalar coeff(const std::vector<int>& exps) const;
  const std::map<std::vector<int>, ExactScalar, GradedLexDescending>& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const ExactScalar& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(int e) const;
  // Replace every occurrence of the named symbol by the image polynomial
  // (same alphabet).
  MultiPoly substitute(std::string_view name, const MultiPoly& image) const;
  // Full evaluation; every symbol occurring with positive exponent must
  // have a value.
  ExactScalar eval(const std::map<std::string, ExactScalar>& values) const;

  // Canonical text, e.g. "3/2*J^2*S - J + 5"; parse() inverts it exactly.
  std::string str() const;
  static MultiPoly parse(SymbolSetPtr syms, std::string_view text);

 private:
  void check_same_alphabet(const MultiPoly& o) const;
  void insert_term(const std::vector<int>& exps, const ExactScalar& c);

  SymbolSetPtr syms_;
  std::map<std::vector<int>, ExactScalar, GradedLexDescending> terms_;
};

}  // namespace qlab
