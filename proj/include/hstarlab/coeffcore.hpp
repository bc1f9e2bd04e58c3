#pragma once

#include <vector>

#include "hstarlab/bigint.hpp"

namespace hstarlab {

/// Ordinary binomial coefficient C(n, k); zero unless 0 <= k <= n.
BigInt binomial(long n, long k);

/// Coefficients of (1 + t + ... + t^{a-1})^n for n >= 0, a >= 1.
///
/// Entry b is the number of integer vectors in [0, a-1]^n summing to b.
/// The row has length n(a-1)+1.
std::vector<BigInt> restricted_row(long n, long a);

/// Restricted polynomial coefficient: the coefficient of t^b in
/// (1 + t + ... + t^{a-1})^n.
///
/// Total by convention: returns 0 when a <= 0 or b < 0 or b > n(a-1), and 1
/// for n = 0, b = 0. For negative n the power is read as the formal power
/// series ((1 - t^a) / (1 - t))^n, which keeps the Pascal-type recurrence
/// valid for every integer n.
BigInt restricted_coeff(long n, long b, long a);

/// Eulerian number A(k, n): permutations of {1..n} with exactly k-1 descents.
/// Throws std::domain_error unless 1 <= k <= n.
BigInt eulerian(int k, int n);

}  // namespace hstarlab
