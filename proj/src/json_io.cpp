#include "hstarlab/json_io.hpp"

namespace hstarlab {

Json big_to_json(const BigInt& value) {
  if (abs(value) <= BigInt(static_cast<long>(kMaxSafeJsonInteger))) return Json(value.get_si());
  return Json(value.get_str());
}

Json spec_to_json(const PolytopeSpec& spec) { return Json{{"r", spec.r}, {"k", spec.k}, {"n", spec.n}}; }

Json entries_to_json(std::span<const BigInt> entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(big_to_json(e));
  return out;
}

Json dosp_record(const Dosp& p) {
  return Json{{"blocks", p.blocks()},
              {"gaps", p.gaps()},
              {"d", winding_number(p)},
              {"winding_vector", winding_vector(p)},
              {"text", format_dosp(p)}};
}

}  // namespace hstarlab
