#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlab/composition.hpp"
#include "qlab/unipoly.hpp"

namespace qlab {

// Word in the formal generators: factors (k_1,...,k_r) denote the
// noncommutative product P_{2k_1} ... P_{2k_r}; the empty word is the
// multiplicative identity.
using Word = std::vector<int>;

// Graded lexicographic: total weight, then length, then entries.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const;
};

// Element of the free associative algebra on the generators, with
// coefficients in UniPoly over the spectral variable t.
class NCOperatorPoly {
 public:
  NCOperatorPoly() = default;  // zero

  static NCOperatorPoly identity();
  static NCOperatorPoly generator(int a);
  static NCOperatorPoly term(const Word& w, const UniPoly& c);
  static NCOperatorPoly from_composition(const Composition& I, const UniPoly& c);

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Word, UniPoly, WordOrder>& terms() const { return terms_; }
  UniPoly coeff(const Word& w) const;
  // Highest degree in t over all coefficients; -1 for the zero element.
  int degree_t() const;

  NCOperatorPoly operator-() const;
  NCOperatorPoly& operator+=(const NCOperatorPoly& o);
  NCOperatorPoly& operator-=(const NCOperatorPoly& o);
  friend NCOperatorPoly operator+(NCOperatorPoly a, const NCOperatorPoly& b) { return a += b; }
  friend NCOperatorPoly operator-(NCOperatorPoly a, const NCOperatorPoly& b) { return a -= b; }
  friend NCOperatorPoly operator*(const NCOperatorPoly& a, const NCOperatorPoly& b);
  friend NCOperatorPoly operator*(const UniPoly& c, const NCOperatorPoly& p);
  friend NCOperatorPoly operator*(const ExactScalar& c, const NCOperatorPoly& p);
  friend bool operator==(const NCOperatorPoly& a, const NCOperatorPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCOperatorPoly& a, const NCOperatorPoly& b) { return !(a == b); }

  // Evaluate every coefficient at t0; the result has constant coefficients.
  NCOperatorPoly eval_t(const ExactScalar& t0) const;

  // Word-reversal involution (formal adjoint).
  NCOperatorPoly reversed() const;

  // Algebra morphism into one commuting variable: each generator k maps
  // to images.at(k). Requires constant coefficients.
  UniPoly substitute_commutative(const std::map<int, UniPoly>& images) const;

  // First word (in term order) whose coefficients differ, if any.
  static std::optional<Word> first_difference(const NCOperatorPoly& a, const NCOperatorPoly& b);

  std::string str() const;
  std::string latex() const;

 private:
  void insert(const Word& w, const UniPoly& c);

  std::map<Word, UniPoly, WordOrder> terms_;
};

std::string word_str(const Word& w, bool latex = false);

}  // namespace qlab
