#include "hstarlab/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "hstarlab/coeffcore.hpp"
#include "hstarlab/parallel.hpp"

namespace hstarlab {

namespace {

void check_stream_args(int k, int n, int d) {
  if (k < 1 || n < 1 || d < 0) {
    throw std::invalid_argument("winding vector enumeration needs k >= 1, n >= 1, d >= 0 (got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
}

}  // namespace

WindingVectorStream::WindingVectorStream(int k, int n, int d)
    : k_(k), lower_(0), w_(static_cast<std::size_t>(std::max(n, 0))) {
  check_stream_args(k, n, d);
  init(static_cast<long>(k) * d, 0);
}

WindingVectorStream::WindingVectorStream(int k, int n, int d, int first)
    : k_(k), lower_(1), w_(static_cast<std::size_t>(std::max(n, 0))) {
  check_stream_args(k, n, d);
  if (first < 0 || first > k - 1) {
    done_ = true;
    return;
  }
  w_[0] = first;
  init(static_cast<long>(k) * d - first, 1);
}

void WindingVectorStream::init(long remaining, int from) {
  const long capacity = static_cast<long>(w_.size() - static_cast<std::size_t>(from)) * (k_ - 1);
  if (remaining < 0 || remaining > capacity) {
    done_ = true;
    return;
  }
  fill(static_cast<std::size_t>(from), remaining);
}

void WindingVectorStream::fill(std::size_t from, long remaining) {
  const std::size_t n = w_.size();
  for (std::size_t i = from; i < n; ++i) {
    const long rest_capacity = static_cast<long>(n - 1 - i) * (k_ - 1);
    const long value = std::max(0L, remaining - rest_capacity);
    w_[i] = static_cast<int>(value);
    remaining -= value;
  }
}

void WindingVectorStream::advance() {
  if (done_) return;
  long suffix = 0;
  for (std::size_t i = w_.size(); i-- > lower_;) {
    if (suffix >= 1 && w_[i] < k_ - 1) {
      ++w_[i];
      fill(i + 1, suffix - 1);
      return;
    }
    suffix += w_[i];
  }
  done_ = true;
}

std::vector<std::vector<int>> enumerate_winding_vectors(int k, int n, int d) {
  std::vector<std::vector<int>> out;
  for (WindingVectorStream s(k, n, d); !s.done(); s.advance()) out.push_back(s.current());
  return out;
}

std::vector<Dosp> dosps_with_winding_number(int k, int n, int d) {
  std::vector<Dosp> out;
  for (WindingVectorStream s(k, n, d); !s.done(); s.advance()) out.push_back(dosp_from_winding_vector(s.current(), k));
  return out;
}

BigInt count_dosps(int k, int n, int d) {
  return restricted_coeff(n, static_cast<long>(k) * d, k);
}

BigInt count_r_hypersimplicial(int k, int n, int r, int d, unsigned threads) {
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(k), 0);
  parallel_for(partial.size(), threads, [&](std::size_t first) {
    std::uint64_t count = 0;
    for (WindingVectorStream s(k, n, d, static_cast<int>(first)); !s.done(); s.advance()) {
      if (is_r_hypersimplicial(dosp_from_winding_vector(s.current(), k), r)) ++count;
    }
    partial[first] = count;
  });
  BigInt total = 0;
  for (std::uint64_t c : partial) total += static_cast<unsigned long>(c);
  return total;
}

BigInt count_r_hypersimplicial(int k, int n, int r, int d) {
  return count_r_hypersimplicial(k, n, r, d, default_thread_count());
}

HStarVector hstar_combinatorial(const PolytopeSpec& spec) {
  spec.validate();
  HStarVector out{spec, std::vector<BigInt>(static_cast<std::size_t>(spec.n))};
  for (int d = 0; d < spec.n; ++d) {
    out.entries[static_cast<std::size_t>(d)] = count_r_hypersimplicial(spec.k, spec.n, spec.r, d);
  }
  return out;
}

}  // namespace hstarlab
