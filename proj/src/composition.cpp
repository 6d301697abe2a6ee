#include "qlab/composition.hpp"

#include <numeric>
#include <stdexcept>

namespace qlab {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::without_first() const {
  if (parts_.empty()) throw std::invalid_argument("Composition: empty");
  return Composition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Composition Composition::without_last() const {
  if (parts_.empty()) throw std::invalid_argument("Composition: empty");
  return Composition(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

std::string Composition::str() const {
  std::string s = "(";
  for (size_t j = 0; j < parts_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(parts_[j]);
  }
  return s + ")";
}

std::vector<Composition> compositions(int N) {
  if (N < 0) throw std::invalid_argument("compositions: negative size");
  std::vector<Composition> out;
  if (N == 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      self(self, rem - p);
      cur.pop_back();
    }
  };
  rec(rec, N);
  return out;
}

Int stirling1(int n, int k) {
  if (n < 0) throw std::invalid_argument("stirling1: negative n");
  if (k < 0 || k > n) return 0;
  // Row-by-row recurrence s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
  std::vector<Int> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Int> next(m + 1, Int(0));
    for (int j = 0; j < m; ++j) {
      next[j + 1] += row[j];
      next[j] -= (m - 1) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace qlab
