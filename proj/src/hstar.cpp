#include "hstarlab/hstar.hpp"

#include <stdexcept>
#include <string>

#include "hstarlab/coeffcore.hpp"

namespace hstarlab {

HStarVector hstar_closed_form(const PolytopeSpec& spec) {
  spec.validate();
  const long n = spec.n;
  HStarVector out{spec, std::vector<BigInt>(static_cast<std::size_t>(n))};
  for (long d = 0; d < n; ++d) {
    BigInt sum = 0;
    for (long i = 0; spec.k - spec.r * i > 0; ++i) {
      const long a = spec.k - spec.r * i;
      BigInt term = binomial(n, i) * restricted_coeff(n, a * d - i, a);
      if (i % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    out.entries[static_cast<std::size_t>(d)] = sum;
  }
  return out;
}

namespace {

// sum_{l=0..max_l} <m choose l a>_a t^l
IntPoly scaled_series(long m, long a, long max_l) {
  std::vector<BigInt> c(static_cast<std::size_t>(max_l) + 1);
  for (long l = 0; l <= max_l; ++l) c[static_cast<std::size_t>(l)] = restricted_coeff(m, l * a, a);
  return IntPoly(std::move(c));
}

// sum_j C(s,j) (t-1)^j sum_{l<=max_l} <n-j choose l a>_a t^l
IntPoly binomial_shift_sum(long s, long a, long n, long max_l) {
  IntPoly total;
  for (long j = 0; j <= s; ++j) {
    total += IntPoly::linear_power(-1, static_cast<std::size_t>(j)) * scaled_series(n - j, a, max_l) * binomial(s, j);
  }
  return total;
}

}  // namespace

IntPoly katzman_numerator(const PolytopeSpec& spec) {
  spec.validate();
  const long n = spec.n;
  IntPoly numerator;
  for (long i = 0; i <= n; ++i) {
    const long a = spec.k - spec.r * i;
    if (a <= 0) break;
    IntPoly inner = binomial_shift_sum(i, a, n, n) * binomial(n, i);
    if (i % 2 == 0) {
      numerator += inner;
    } else {
      numerator -= inner;
    }
  }
  if (numerator.degree() >= n) {
    throw std::logic_error("Hilbert series numerator has a nonzero coefficient in degree " +
                           std::to_string(numerator.degree()) + " >= n = " + std::to_string(n));
  }
  return numerator;
}

bool check_lemma1(long n, long m, long a) {
  return restricted_coeff(n, m, a) - restricted_coeff(n, m - 1, a) ==
         restricted_coeff(n - 1, m, a) - restricted_coeff(n - 1, m - a, a);
}

bool check_prop1(long s, long a, long n, long max_degree) {
  const IntPoly lhs = binomial_shift_sum(s, a, n, max_degree).truncated(static_cast<std::size_t>(max_degree));
  std::vector<BigInt> rhs(static_cast<std::size_t>(max_degree) + 1);
  for (long l = 0; l <= max_degree; ++l) rhs[static_cast<std::size_t>(l)] = restricted_coeff(n, l * a - s, a);
  return lhs == IntPoly(std::move(rhs));
}

}  // namespace hstarlab
