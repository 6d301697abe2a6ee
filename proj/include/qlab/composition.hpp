#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qlab/rational.hpp"

namespace qlab {

// Ordered list of parts >= 1. The empty composition is allowed as a
// sentinel (outer factor lists may be empty) but carries size 0.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int j) const { return parts_[j]; }
  int size() const;    // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  Composition reversed() const;
  Composition without_first() const;
  Composition without_last() const;

  std::string str() const;  // "(1,2,1)"

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
  friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

// All 2^(N-1) compositions of N in lexicographic order; N = 0 gives an
// empty list.
std::vector<Composition> compositions(int N);

// Signed Stirling numbers of the first kind: coefficients of the falling
// factorial, b_n(x) = sum_k s(n,k) x^k. Out-of-range k gives 0.
Int stirling1(int n, int k);

}  // namespace qlab
