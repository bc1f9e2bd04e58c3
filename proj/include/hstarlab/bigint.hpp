#pragma once

#include <gmpxx.h>

#include <string>

namespace hstarlab {

/// Arbitrary-precision signed integer used for every count in the library.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace hstarlab
