#include <algorithm>

#include "hstarlab/dosp.hpp"

namespace hstarlab {

SpotDiagram SpotDiagram::of(const Dosp& p) {
  SpotDiagram diagram;
  diagram.k = p.k();
  diagram.n = p.n();
  diagram.blocks = p.blocks();
  diagram.occupant.assign(static_cast<std::size_t>(p.k()), std::nullopt);
  const auto pos = p.block_positions();
  for (std::size_t i = 0; i < pos.size(); ++i) diagram.occupant[static_cast<std::size_t>(pos[i])] = i;
  return diagram;
}

void SpotDiagram::color_for(std::span<const int> t_set, int r) {
  colors.assign(static_cast<std::size_t>(k), SpotColor::Blue);
  for (int t : t_set) {
    std::optional<int> spot;
    for (int s = 0; s < k; ++s) {
      const auto& occ = occupant[static_cast<std::size_t>(s)];
      if (!occ) continue;
      const Block& block = blocks[*occ];
      if (std::find(block.begin(), block.end(), t) == block.end()) continue;
      if (block.size() != 1) {
        throw std::invalid_argument("element " + std::to_string(t) + " of T is not in a singlet block");
      }
      spot = s;
      break;
    }
    if (!spot) throw std::invalid_argument("element " + std::to_string(t) + " of T is not placed on the circle");
    for (int j = 0; j < r; ++j) {
      const auto s = static_cast<std::size_t>((*spot + j) % k);
      if (j > 0 && occupant[s]) {
        throw std::invalid_argument("T-singlet {" + std::to_string(t) + "} is followed by fewer than " +
                                    std::to_string(r - 1) + " empty spots");
      }
      if (colors[s] == SpotColor::Red) {
        throw std::invalid_argument("red spot runs overlap near {" + std::to_string(t) + "}");
      }
      colors[s] = SpotColor::Red;
    }
  }
}

Dosp SpotDiagram::to_dosp() const {
  std::vector<Block> out_blocks;
  std::vector<int> positions;
  for (int s = 0; s < k; ++s) {
    const auto& occ = occupant[static_cast<std::size_t>(s)];
    if (!occ) continue;
    out_blocks.push_back(blocks[*occ]);
    positions.push_back(s);
  }
  std::vector<int> gaps(out_blocks.size());
  for (std::size_t i = 0; i < out_blocks.size(); ++i) {
    const int next = i + 1 < out_blocks.size() ? positions[i + 1] : positions[0] + k;
    gaps[i] = next - positions[i];
  }
  return Dosp(std::move(out_blocks), std::move(gaps), k, n);
}

std::size_t SpotDiagram::blue_count() const {
  return static_cast<std::size_t>(std::count(colors.begin(), colors.end(), SpotColor::Blue));
}

}  // namespace hstarlab
