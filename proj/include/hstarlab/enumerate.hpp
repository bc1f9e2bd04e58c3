#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hstarlab/bigint.hpp"
#include "hstarlab/dosp.hpp"
#include "hstarlab/hstar_vector.hpp"

namespace hstarlab {

/// Lexicographic stream of integer vectors w in [0, k-1]^n with sum k d.
/// Each such vector is the winding vector of exactly one dosp of type (k, n)
/// with winding number d.
///
///   WindingVectorStream s(2, 4, 1);
///   for (; !s.done(); s.advance()) use(s.current());
class WindingVectorStream {
 public:
  WindingVectorStream(int k, int n, int d);
  /// Restricts the stream to vectors with w_1 = first.
  WindingVectorStream(int k, int n, int d, int first);

  bool done() const { return done_; }
  const std::vector<int>& current() const { return w_; }
  void advance();

 private:
  void init(long remaining, int from);
  // Smallest lexicographic completion of positions [from, n) summing to remaining.
  void fill(std::size_t from, long remaining);

  int k_;
  std::size_t lower_;  // positions below this are fixed
  std::vector<int> w_;
  bool done_ = false;
};

std::vector<std::vector<int>> enumerate_winding_vectors(int k, int n, int d);

/// Every dosp of type (k, n) with winding number d, in winding-vector order.
std::vector<Dosp> dosps_with_winding_number(int k, int n, int d);

/// Number of dosps of type (k, n) with winding number d.
BigInt count_dosps(int k, int n, int d);

/// Number of r-hypersimplicial dosps of type (k, n) with winding number d,
/// found by streaming winding vectors and filtering. The search is split by
/// the value of w_1 across `threads` workers.
BigInt count_r_hypersimplicial(int k, int n, int r, int d, unsigned threads);
BigInt count_r_hypersimplicial(int k, int n, int r, int d);

/// (count_r_hypersimplicial(k, n, r, d)) for d = 0..n-1.
HStarVector hstar_combinatorial(const PolytopeSpec& spec);

}  // namespace hstarlab
