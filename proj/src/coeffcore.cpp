#include "hstarlab/coeffcore.hpp"

#include <stdexcept>
#include <string>

namespace hstarlab {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

std::vector<BigInt> restricted_row(long n, long a) {
  if (n < 0 || a < 1) throw std::domain_error("restricted_row requires n >= 0 and a >= 1");
  std::vector<BigInt> row{1};
  for (long step = 0; step < n; ++step) {
    // Convolve with 1 + t + ... + t^{a-1} through a sliding window sum.
    std::vector<BigInt> next(row.size() + static_cast<std::size_t>(a - 1));
    BigInt window = 0;
    for (std::size_t b = 0; b < next.size(); ++b) {
      if (b < row.size()) window += row[b];
      if (b >= static_cast<std::size_t>(a) && b - a < row.size()) window -= row[b - a];
      next[b] = window;
    }
    row = std::move(next);
  }
  return row;
}

namespace {

// Coefficient of t^b in (1 - t)^m (1 - t^a)^{-m}, m > 0.
BigInt negative_power_coeff(long m, long b, long a) {
  BigInt total = 0;
  for (long j = 0; a * j <= b; ++j) {
    const long rest = b - a * j;
    if (rest > m) continue;
    BigInt term = binomial(m + j - 1, j) * binomial(m, rest);
    if (rest % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

BigInt restricted_coeff(long n, long b, long a) {
  if (a <= 0 || b < 0) return 0;
  if (n < 0) return negative_power_coeff(-n, b, a);
  if (b > n * (a - 1)) return 0;
  if (a == 1) return b == 0 ? 1 : 0;
  if (a == 2) return binomial(n, b);
  return restricted_row(n, a)[static_cast<std::size_t>(b)];
}

BigInt eulerian(int k, int n) {
  if (n < 1 || k < 1 || k > n) {
    throw std::domain_error("eulerian(k, n) requires 1 <= k <= n, got k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
  }
  // row[j] = A(j+1, size): A(j, s) = j A(j, s-1) + (s - j + 1) A(j-1, s-1).
  std::vector<BigInt> row{1};
  for (int size = 2; size <= n; ++size) {
    std::vector<BigInt> next(static_cast<std::size_t>(size));
    for (int j = 1; j <= size; ++j) {
      BigInt value = 0;
      if (j <= size - 1) value += j * row[j - 1];
      if (j >= 2) value += (size - j + 1) * row[j - 2];
      next[j - 1] = value;
    }
    row = std::move(next);
  }
  return row[k - 1];
}

}  // namespace hstarlab
