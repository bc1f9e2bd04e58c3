#pragma once

#include <vector>

#include "hstarlab/bigint.hpp"
#include "hstarlab/dosp.hpp"

namespace hstarlab {

/// h*_0 .. h*_{n-1} of the cross-section named by spec.
struct HStarVector {
  PolytopeSpec spec;
  std::vector<BigInt> entries;

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& e : entries) sum += e;
    return sum;
  }

  friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

}  // namespace hstarlab
