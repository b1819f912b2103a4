#include <cstddef>
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "qeuler/combinatorics.hpp"

namespace {

using namespace qeuler;

// Coefficients of y(y-1)...(y-n+1), expanded one factor at a time.
std::vector<Integer> falling_factorial_coeffs(std::size_t n) {
  std::vector<Integer> c{Integer(1)};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= Integer(static_cast<unsigned long>(j)) * c[i];
    }
    c = std::move(next);
  }
  return c;
}

// Number of set partitions of {1..n} into exactly m blocks, by enumerating
// restricted growth strings.
long count_partitions(int n, int m) {
  long count = 0;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (used == m) ++count;
      return;
    }
    for (int b = 0; b <= used && b < m; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  if (n == 0) return m == 0 ? 1 : 0;
  rec(0, 0);
  return count;
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  for (unsigned long n = 0; n < 10; ++n) EXPECT_EQ(binomial(n, 0), 1);
  const unsigned long r = 3, m = 2;
  EXPECT_EQ(binomial(r + m - 1, static_cast<long>(m)), 6);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
}

TEST(Stirling1, Examples) {
  EXPECT_EQ(stirling1(2, 1), -1);
  EXPECT_EQ(stirling1(3, 2), -3);
  EXPECT_EQ(stirling1(4, 2), 11);
  EXPECT_THROW(stirling1(2, 3), IndexOutOfRange);
}

TEST(Stirling2, Examples) {
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(4, 2), 7);
  for (std::size_t n = 0; n < 12; ++n) EXPECT_EQ(stirling2(n, n), 1);
  EXPECT_THROW(stirling2(1, 2), IndexOutOfRange);
}

TEST(Stirling1, MatchesFallingFactorialExpansion) {
  for (std::size_t n = 0; n <= 12; ++n) {
    const auto c = falling_factorial_coeffs(n);
    for (std::size_t m = 0; m <= n; ++m) EXPECT_EQ(stirling1(n, m), c[m]) << n << "," << m;
  }
}

TEST(Stirling2, MatchesPartitionCount) {
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= n; ++m) EXPECT_EQ(stirling2(n, m), count_partitions(n, m)) << n << "," << m;
}

TEST(StirlingTable, BoundaryInvariants) {
  for (auto kind : {StirlingKind::first, StirlingKind::second}) {
    StirlingTable t(kind, 14);
    EXPECT_EQ(t.at(0, 0), 1);
    for (std::size_t n = 1; n <= 14; ++n) {
      EXPECT_EQ(t.at(n, 0), 0);
      EXPECT_EQ(t.at(n, n), 1);
    }
    StirlingTable rebuilt(kind, 3);
    rebuilt.extend(14);
    EXPECT_EQ(rebuilt.rows(), t.rows());
  }
}

TEST(Stirling, InversePair) {
  for (std::size_t n = 0; n <= 15; ++n)
    for (std::size_t k = 0; k <= 15; ++k) {
      Integer sum = 0;
      for (std::size_t m = k; m <= n; ++m) sum += stirling2(n, m) * stirling1(m, k);
      EXPECT_EQ(sum, n == k ? 1 : 0) << n << "," << k;
    }
}

// sum_m S2(n,m) (y)_m = y^n, checked at integer points y.
TEST(Stirling2, PowersFromFallingFactorials) {
  for (std::size_t n = 0; n <= 12; ++n)
    for (long y = -3; y <= 6; ++y) {
      Integer sum = 0;
      for (std::size_t m = 0; m <= n; ++m) {
        Integer falling = 1;
        for (std::size_t j = 0; j < m; ++j) falling *= Integer(y - static_cast<long>(j));
        sum += stirling2(n, m) * falling;
      }
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), Integer(y).get_mpz_t(), n);
      EXPECT_EQ(sum, power);
    }
}

}  // namespace
