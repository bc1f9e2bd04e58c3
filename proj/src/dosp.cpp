#include "hstarlab/dosp.hpp"

#include <algorithm>
#include <numeric>

namespace hstarlab {

bool PolytopeSpec::is_valid() const { return r >= 1 && n >= 2 && k > 0 && k < r * n; }

void PolytopeSpec::validate() const {
  const std::string where = "(r=" + std::to_string(r) + ", k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
  if (r < 1) throw std::invalid_argument("r must be at least 1 " + where);
  if (n < 2) throw std::invalid_argument("n must be at least 2 " + where);
  if (k < 1) throw std::invalid_argument("k must be positive " + where);
  if (k >= r * n) throw std::invalid_argument("k must be less than r*n " + where);
}

void canonicalize(std::vector<Block>& blocks, std::vector<int>& gaps) {
  const auto holds_one = std::find_if(blocks.begin(), blocks.end(), [](const Block& b) {
    return std::find(b.begin(), b.end(), 1) != b.end();
  });
  if (holds_one == blocks.end() || holds_one == blocks.begin()) return;
  const auto shift = holds_one - blocks.begin();
  std::rotate(blocks.begin(), holds_one, blocks.end());
  std::rotate(gaps.begin(), gaps.begin() + shift, gaps.end());
}

Dosp::Dosp(std::vector<Block> blocks, std::vector<int> gaps, int k, int n)
    : blocks_(std::move(blocks)), gaps_(std::move(gaps)), k_(k), n_(n) {
  using Kind = DospError::Kind;
  if (k_ < 1 || n_ < 1) {
    throw DospError(Kind::BadType, "type (k, n) needs k >= 1 and n >= 1, got (" + std::to_string(k_) + ", " +
                                       std::to_string(n_) + ")");
  }
  if (blocks_.empty()) throw DospError(Kind::EmptyBlock, "a decorated ordered set partition needs at least one block");
  if (gaps_.size() != blocks_.size()) {
    throw DospError(Kind::GapCountMismatch, std::to_string(blocks_.size()) + " blocks but " +
                                                std::to_string(gaps_.size()) + " gaps");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (auto& block : blocks_) {
    if (block.empty()) throw DospError(Kind::EmptyBlock, "empty block");
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 1 || e > n_) {
        throw DospError(Kind::ElementOutOfRange,
                        "element " + std::to_string(e) + " outside 1.." + std::to_string(n_));
      }
      if (seen[static_cast<std::size_t>(e)]) throw DospError(Kind::DuplicateElement, "duplicate element " + std::to_string(e));
      seen[static_cast<std::size_t>(e)] = true;
    }
  }
  for (int e = 1; e <= n_; ++e) {
    if (!seen[static_cast<std::size_t>(e)]) throw DospError(Kind::MissingElement, "missing element " + std::to_string(e));
  }
  long sum = 0;
  for (int g : gaps_) {
    if (g < 1) throw DospError(Kind::NonPositiveGap, "gap " + std::to_string(g) + " is not positive");
    sum += g;
  }
  if (sum != k_) {
    throw DospError(Kind::GapSumMismatch, "gaps sum to " + std::to_string(sum) + " but k = " + std::to_string(k_));
  }
  canonicalize(blocks_, gaps_);
}

std::vector<int> Dosp::block_positions() const {
  std::vector<int> pos(blocks_.size());
  int at = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    pos[i] = at;
    at += gaps_[i];
  }
  return pos;
}

std::vector<std::size_t> Dosp::block_of_element() const {
  std::vector<std::size_t> owner(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int e : blocks_[i]) owner[static_cast<std::size_t>(e)] = i;
  }
  return owner;
}

Dosp canonicalize(const Dosp& p) { return p; }

std::vector<int> winding_vector(const Dosp& p) {
  const auto pos = p.block_positions();
  const auto owner = p.block_of_element();
  const int n = p.n();
  const int k = p.k();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int next = i == n ? 1 : i + 1;
    const int from = pos[owner[static_cast<std::size_t>(i)]];
    const int to = pos[owner[static_cast<std::size_t>(next)]];
    w[static_cast<std::size_t>(i - 1)] = ((to - from) % k + k) % k;
  }
  return w;
}

int winding_number(const Dosp& p) {
  const auto w = winding_vector(p);
  const long sum = std::accumulate(w.begin(), w.end(), 0L);
  if (sum % p.k() != 0) {
    throw std::logic_error("winding vector sum " + std::to_string(sum) + " not divisible by k = " + std::to_string(p.k()));
  }
  return static_cast<int>(sum / p.k());
}

bool is_winding_vector(std::span<const int> w, int k) {
  if (k < 1 || w.empty()) return false;
  long sum = 0;
  for (int x : w) {
    if (x < 0 || x > k - 1) return false;
    sum += x;
  }
  return sum % k == 0;
}

Dosp dosp_from_winding_vector(std::span<const int> w, int k) {
  if (!is_winding_vector(w, k)) {
    throw std::invalid_argument("not a winding vector for k = " + std::to_string(k) +
                                ": entries must lie in [0, k-1] with sum divisible by k");
  }
  const int n = static_cast<int>(w.size());
  std::vector<Block> at_spot(static_cast<std::size_t>(k));
  int spot = 0;
  for (int i = 1; i <= n; ++i) {
    at_spot[static_cast<std::size_t>(spot)].push_back(i);
    spot = (spot + w[static_cast<std::size_t>(i - 1)]) % k;
  }
  std::vector<Block> blocks;
  std::vector<int> positions;
  for (int s = 0; s < k; ++s) {
    if (at_spot[static_cast<std::size_t>(s)].empty()) continue;
    blocks.push_back(std::move(at_spot[static_cast<std::size_t>(s)]));
    positions.push_back(s);
  }
  std::vector<int> gaps(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int next = i + 1 < blocks.size() ? positions[i + 1] : positions[0] + k;
    gaps[i] = next - positions[i];
  }
  return Dosp(std::move(blocks), std::move(gaps), k, n);
}

std::vector<std::size_t> r_bad_block_indices(const Dosp& p, int r) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    if (static_cast<long>(p.gaps()[i]) >= static_cast<long>(r) * static_cast<long>(p.blocks()[i].size())) {
      bad.push_back(i);
    }
  }
  return bad;
}

std::vector<Block> r_bad_blocks(const Dosp& p, int r) {
  std::vector<Block> out;
  for (std::size_t i : r_bad_block_indices(p, r)) out.push_back(p.blocks()[i]);
  return out;
}

bool is_r_hypersimplicial(const Dosp& p, int r) { return r_bad_block_indices(p, r).empty(); }

Dosp cyclic_shift_elements(const Dosp& p, int s) {
  const int n = p.n();
  std::vector<Block> blocks = p.blocks();
  for (auto& block : blocks) {
    for (int& e : block) e = ((e - 1 + s) % n + n) % n + 1;
  }
  return Dosp(std::move(blocks), p.gaps(), p.k(), n);
}

}  // namespace hstarlab
