#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "hstarlab/coeffcore.hpp"

using namespace hstarlab;

namespace {

// Vectors in [0, a-1]^n summing to b, counted one by one.
long brute_restricted(int n, int b, int a) {
  if (a <= 0 || b < 0) return 0;
  long count = 0;
  std::function<void(int, int)> walk = [&](int slot, int left) {
    if (slot == n) {
      count += left == 0 ? 1 : 0;
      return;
    }
    for (int v = 0; v < a && v <= left; ++v) walk(slot + 1, left - v);
  };
  walk(0, b);
  return count;
}

long brute_eulerian(int k, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    int descents = 0;
    for (int i = 0; i + 1 < n; ++i) descents += perm[i] > perm[i + 1] ? 1 : 0;
    count += descents == k - 1 ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST(Binomial, SmallValuesAndOutOfRange) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(-3, 1), 0);
  EXPECT_EQ(binomial(60, 30).get_str(), "118264581564861424");
}

TEST(RestrictedCoeff, KnownValues) {
  EXPECT_EQ(restricted_coeff(4, 2, 2), 6);
  EXPECT_EQ(restricted_coeff(5, 0, 7), 1);
  EXPECT_EQ(restricted_coeff(2, 3, 3), 2);
  EXPECT_EQ(restricted_coeff(0, 0, 3), 1);
  EXPECT_EQ(restricted_coeff(0, 1, 3), 0);
}

TEST(RestrictedCoeff, BoundaryConventions) {
  EXPECT_EQ(restricted_coeff(3, 1, 0), 0);
  EXPECT_EQ(restricted_coeff(3, 1, -2), 0);
  EXPECT_EQ(restricted_coeff(3, -1, 3), 0);
  EXPECT_EQ(restricted_coeff(3, 7, 3), 0);
  EXPECT_EQ(restricted_coeff(3, 0, 1), 1);
  EXPECT_EQ(restricted_coeff(3, 1, 1), 0);
}

TEST(RestrictedCoeff, MatchesBruteForce) {
  for (int n = 0; n <= 6; ++n)
    for (int a = 1; a <= 5; ++a)
      for (int b = -1; b <= n * (a - 1) + 1; ++b)
        EXPECT_EQ(restricted_coeff(n, b, a), brute_restricted(n, b, a)) << n << ' ' << b << ' ' << a;
}

TEST(RestrictedCoeff, InclusionExclusionForm) {
  for (long n = 0; n <= 10; ++n)
    for (long a = 1; a <= 6; ++a)
      for (long b = 0; b <= n * (a - 1); ++b) {
        BigInt sum = 0;
        for (long j = 0; j * a <= b; ++j) {
          BigInt term = binomial(n, j) * binomial(b - a * j + n - 1, n - 1);
          if (j % 2 == 0) {
            sum += term;
          } else {
            sum -= term;
          }
        }
        if (n == 0) sum = b == 0 ? 1 : 0;
        EXPECT_EQ(restricted_coeff(n, b, a), sum) << n << ' ' << b << ' ' << a;
      }
}

TEST(RestrictedCoeff, SymmetryAndRowSum) {
  for (long n = 0; n <= 9; ++n)
    for (long a = 1; a <= 6; ++a) {
      const auto row = restricted_row(n, a);
      ASSERT_EQ(row.size(), static_cast<std::size_t>(n * (a - 1) + 1));
      BigInt sum = 0;
      for (std::size_t b = 0; b < row.size(); ++b) {
        EXPECT_EQ(row[b], row[row.size() - 1 - b]);
        sum += row[b];
      }
      BigInt expected = 1;
      for (long i = 0; i < n; ++i) expected *= a;
      EXPECT_EQ(sum, expected);
    }
}

TEST(RestrictedCoeff, PascalTypeRecurrence) {
  for (long n = 1; n <= 10; ++n)
    for (long a = 1; a <= 5; ++a)
      for (long b = 0; b <= n * (a - 1); ++b) {
        BigInt rhs = 0;
        for (long i = 0; i < a; ++i) rhs += restricted_coeff(n - 1, b - i, a);
        EXPECT_EQ(restricted_coeff(n, b, a), rhs);
      }
}

TEST(RestrictedCoeff, NegativePowerInvertsPositivePower) {
  // ((1-t^a)/(1-t))^{-m} times ((1-t^a)/(1-t))^m is 1 as a series.
  for (long m = 1; m <= 4; ++m)
    for (long a = 2; a <= 4; ++a)
      for (long b = 0; b <= 12; ++b) {
        BigInt sum = 0;
        for (long i = 0; i <= b; ++i) sum += restricted_coeff(-m, i, a) * restricted_coeff(m, b - i, a);
        EXPECT_EQ(sum, b == 0 ? 1 : 0) << m << ' ' << a << ' ' << b;
      }
}

TEST(RestrictedCoeff, ExceedsMachineWords) {
  const BigInt value = restricted_coeff(40, 100, 6);
  EXPECT_GT(value, BigInt("18446744073709551615"));
  EXPECT_EQ(value, restricted_coeff(40, 100, 6));
  EXPECT_EQ(value, restricted_coeff(40, 40 * 5 - 100, 6));
}

TEST(RestrictedRow, RejectsBadArguments) {
  EXPECT_THROW(restricted_row(-1, 3), std::domain_error);
  EXPECT_THROW(restricted_row(2, 0), std::domain_error);
}

TEST(Eulerian, MatchesDescentCounts) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(eulerian(k, n), brute_eulerian(k, n)) << k << ' ' << n;
}

TEST(Eulerian, RowSumsAreFactorials) {
  BigInt factorial = 1;
  for (int n = 1; n <= 20; ++n) {
    factorial *= n;
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) sum += eulerian(k, n);
    EXPECT_EQ(sum, factorial);
  }
}

TEST(Eulerian, KnownRow) {
  const std::vector<long> row{1, 26, 66, 26, 1};
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(eulerian(k, 5), row[k - 1]);
}

TEST(Eulerian, DomainErrors) {
  EXPECT_THROW(eulerian(0, 3), std::domain_error);
  EXPECT_THROW(eulerian(4, 3), std::domain_error);
  EXPECT_THROW(eulerian(1, 0), std::domain_error);
}
