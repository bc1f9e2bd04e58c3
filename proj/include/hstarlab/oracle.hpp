#pragma once

#include <cstdint>

#include "hstarlab/bigint.hpp"
#include "hstarlab/dosp.hpp"
#include "hstarlab/hstar_vector.hpp"

namespace hstarlab {

/// Dilates with t * r * n at most this size are also counted point by point.
inline constexpr long kDirectCountBound = 24;

/// |t I ∩ Z^n|: integer x with 0 <= x_i <= r t and sum x = k t.
/// Counted as a restricted coefficient; dilates within kDirectCountBound are
/// recounted by direct enumeration and a mismatch throws std::logic_error.
BigInt lattice_count(const PolytopeSpec& spec, long t);

/// Direct nested enumeration of the lattice points of the t-th dilate.
/// Shares no code with the coefficient routines.
std::uint64_t lattice_count_direct(const PolytopeSpec& spec, long t);

/// h*_j = sum_{i=0..j} (-1)^i C(n, i) L(j - i), i.e. the Ehrhart series
/// multiplied by (1 - t)^n and truncated to degree n - 1.
HStarVector hstar_from_oracle(const PolytopeSpec& spec);

}  // namespace hstarlab
