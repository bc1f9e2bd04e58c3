#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "hstarlab/bigint.hpp"
#include "hstarlab/dosp.hpp"
#include "hstarlab/hstar_vector.hpp"

namespace hstarlab {

using Json = nlohmann::ordered_json;

/// Largest integer every IEEE-double JSON consumer reads exactly.
inline constexpr long long kMaxSafeJsonInteger = 9007199254740991LL;

/// A JSON number when |value| <= 2^53 - 1, otherwise its decimal string.
Json big_to_json(const BigInt& value);

Json spec_to_json(const PolytopeSpec& spec);
Json entries_to_json(std::span<const BigInt> entries);

/// {"blocks":[[...]],"gaps":[...],"d":d,"winding_vector":[...],"text":"(...)"}
Json dosp_record(const Dosp& p);

}  // namespace hstarlab
