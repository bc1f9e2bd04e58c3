#include "hstarlab/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "hstarlab/coeffcore.hpp"

namespace hstarlab {

namespace {

// Points in [0, cap]^slots summing to target, pruning prefixes that cannot finish.
std::uint64_t count_boxed(long slots, long cap, long target) {
  if (slots == 0) return target == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (long x = 0; x <= cap && x <= target; ++x) {
    const long rest = target - x;
    if (rest > (slots - 1) * cap) continue;
    total += count_boxed(slots - 1, cap, rest);
  }
  return total;
}

}  // namespace

std::uint64_t lattice_count_direct(const PolytopeSpec& spec, long t) {
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  return count_boxed(spec.n, spec.r * t, spec.k * t);
}

BigInt lattice_count(const PolytopeSpec& spec, long t) {
  spec.validate();
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  BigInt count = restricted_coeff(spec.n, spec.k * t, spec.r * t + 1);
  if (t * spec.r * spec.n <= kDirectCountBound) {
    const BigInt direct = static_cast<unsigned long>(lattice_count_direct(spec, t));
    if (direct != count) {
      throw std::logic_error("lattice count mismatch at t=" + std::to_string(t) + ": coefficient " +
                             count.get_str() + " vs direct " + direct.get_str());
    }
  }
  return count;
}

HStarVector hstar_from_oracle(const PolytopeSpec& spec) {
  spec.validate();
  const long n = spec.n;
  std::vector<BigInt> counts(static_cast<std::size_t>(n));
  for (long t = 0; t < n; ++t) counts[static_cast<std::size_t>(t)] = lattice_count(spec, t);

  HStarVector out{spec, std::vector<BigInt>(static_cast<std::size_t>(n))};
  for (long j = 0; j < n; ++j) {
    BigInt sum = 0;
    for (long i = 0; i <= j; ++i) {
      BigInt term = binomial(n, i) * counts[static_cast<std::size_t>(j - i)];
      if (i % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    out.entries[static_cast<std::size_t>(j)] = sum;
  }
  return out;
}

}  // namespace hstarlab
