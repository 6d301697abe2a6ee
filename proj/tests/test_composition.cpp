#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/composition.hpp"

using qlab::Composition;
using qlab::Int;

TEST_CASE("composition basics") {
  Composition I{1, 2, 1};
  CHECK(I.size() == 4);
  CHECK(I.length() == 3);
  CHECK(I.str() == "(1,2,1)");
  CHECK(I.reversed() == Composition{1, 2, 1});
  CHECK(Composition{1, 2}.reversed() == Composition{2, 1});
  CHECK(I.without_first() == Composition{2, 1});
  CHECK(I.without_last() == Composition{1, 2});
  CHECK(Composition().empty());
  CHECK(Composition().size() == 0);
  CHECK_THROWS_AS(Composition(std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Composition().without_first(), std::invalid_argument);
}

TEST_CASE("composition enumeration is lexicographic and complete") {
  CHECK(qlab::compositions(0).empty());
  CHECK(qlab::compositions(1) == std::vector<Composition>{Composition{1}});
  std::vector<Composition> expect3{{1, 1, 1}, {1, 2}, {2, 1}, {3}};
  CHECK(qlab::compositions(3) == expect3);
  for (int N = 1; N <= 12; ++N) {
    auto all = qlab::compositions(N);
    CHECK(static_cast<int>(all.size()) == (1 << (N - 1)));
    for (size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].size() == N);
      if (i) CHECK(all[i - 1] < all[i]);
    }
  }
}

TEST_CASE("stirling numbers of the first kind") {
  CHECK(qlab::stirling1(4, 1) == -6);
  CHECK(qlab::stirling1(4, 2) == 11);
  CHECK(qlab::stirling1(0, 0) == 1);
  CHECK(qlab::stirling1(5, 7) == 0);
  CHECK(qlab::stirling1(5, -1) == 0);
  for (int N = 1; N <= 12; ++N) {
    CHECK(qlab::stirling1(N, N) == 1);
    CHECK(qlab::stirling1(N, N - 1) == -qlab::binomial(N, 2));
    CHECK(qlab::stirling1(N, 1) == Int(qlab::parity_sign(N - 1)) * qlab::factorial(N - 1).num());
  }
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(qlab::stirling1(n, k) ==
            qlab::stirling1(n - 1, k - 1) - Int(n - 1) * qlab::stirling1(n - 1, k));
}
