#include "hstarlab/sieve.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "hstarlab/coeffcore.hpp"
#include "hstarlab/enumerate.hpp"

namespace hstarlab {

namespace {

using Mask = std::uint64_t;

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) m |= Mask{1} << e;
  return m;
}

bool contains(std::span<const int> sorted, int value) { return std::binary_search(sorted.begin(), sorted.end(), value); }

void check_subset(std::span<const int> t_set, int n, bool forbid_n) {
  for (std::size_t i = 0; i < t_set.size(); ++i) {
    if (t_set[i] < 1 || t_set[i] > n) {
      throw std::invalid_argument("element " + std::to_string(t_set[i]) + " of T is outside 1.." + std::to_string(n));
    }
    if (i > 0 && t_set[i - 1] >= t_set[i]) throw std::invalid_argument("T must be strictly ascending");
  }
  if (forbid_n && !t_set.empty() && t_set.back() == n) {
    throw std::invalid_argument("T must not contain n = " + std::to_string(n));
  }
}

std::vector<int> union_of(const SetPartition& s) {
  std::vector<int> out;
  for (const auto& part : s) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

int sign_of_size(std::size_t size) { return size % 2 == 0 ? 1 : -1; }

// Block index holding the singlet {t}, or block_count() if t is not a singlet.
std::size_t singlet_index(const Dosp& p, int t) {
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    const Block& b = p.blocks()[i];
    if (b.size() == 1 && b[0] == t) return i;
  }
  return p.block_count();
}

bool is_t_singlet(const Block& b, std::span<const int> t_set) { return b.size() == 1 && contains(t_set, b[0]); }

// Block i continues an increasing r-packed run into block i+1.
bool packed_link(const Dosp& p, int r, std::span<const int> t_set, std::size_t i) {
  const std::size_t m = p.block_count();
  const std::size_t j = (i + 1) % m;
  if (j == i) return false;
  const Block& here = p.blocks()[i];
  const Block& next = p.blocks()[j];
  return is_t_singlet(here, t_set) && is_t_singlet(next, t_set) && p.gaps()[i] == r && p.gaps()[j] >= r &&
         here[0] < next[0];
}

}  // namespace

std::vector<SetPartition> unordered_partitions(std::span<const int> t_set) {
  const std::size_t m = t_set.size();
  if (m == 0) return {SetPartition{}};
  // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i-1]).
  std::vector<std::size_t> label(m, 0);
  std::vector<std::size_t> prefix_max(m, 0);
  std::vector<SetPartition> out;
  while (true) {
    const std::size_t parts = prefix_max[m - 1] + 1;
    SetPartition partition(parts);
    for (std::size_t i = 0; i < m; ++i) partition[label[i]].push_back(t_set[i]);
    out.push_back(std::move(partition));

    std::size_t i = m - 1;
    while (i > 0 && label[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

SetPartition singleton_partition(std::span<const int> t_set) {
  SetPartition out;
  for (int t : t_set) out.push_back({t});
  return out;
}

bool in_k_r(const Dosp& p, int r, const SetPartition& s) {
  const auto bad = r_bad_block_indices(p, r);
  return std::all_of(s.begin(), s.end(), [&](const Block& part) {
    return std::any_of(bad.begin(), bad.end(), [&](std::size_t i) { return p.blocks()[i] == part; });
  });
}

std::vector<Dosp> k_r_of_s(std::span<const Dosp> family, int r, const SetPartition& s) {
  std::vector<Dosp> out;
  for (const auto& p : family) {
    if (in_k_r(p, r, s)) out.push_back(p);
  }
  return out;
}

std::vector<Dosp> k_r_of_s(int k, int n, int d, int r, const SetPartition& s) {
  return k_r_of_s(dosps_with_winding_number(k, n, d), r, s);
}

BigInt h_r_of_t(std::span<const Dosp> family, int r, std::span<const int> t_set) {
  if (!family.empty()) {
    check_subset(t_set, family.front().n(), false);
    if (family.front().n() >= 64) throw std::invalid_argument("signed sums are limited to n < 64");
  }
  // Bad blocks of each member as sorted bitmasks; S lies in I_r(P) iff every
  // part's mask is among them.
  std::vector<std::vector<Mask>> bad_masks;
  bad_masks.reserve(family.size());
  for (const auto& p : family) {
    std::vector<Mask> masks;
    for (std::size_t i : r_bad_block_indices(p, r)) masks.push_back(mask_of(p.blocks()[i]));
    std::sort(masks.begin(), masks.end());
    bad_masks.push_back(std::move(masks));
  }
  long total = 0;
  for (const auto& s : unordered_partitions(t_set)) {
    std::vector<Mask> parts;
    for (const auto& part : s) parts.push_back(mask_of(part));
    long members = 0;
    for (const auto& masks : bad_masks) {
      const bool all = std::all_of(parts.begin(), parts.end(),
                                   [&](Mask m) { return std::binary_search(masks.begin(), masks.end(), m); });
      if (all) ++members;
    }
    total += sign_of_size(s.size()) * members;
  }
  return total;
}

BigInt h_r_of_t(int k, int n, int d, int r, std::span<const int> t_set) {
  return h_r_of_t(dosps_with_winding_number(k, n, d), r, t_set);
}

BigInt h_r_closed_form(int k, int n, int d, int r, int m) {
  const long a = static_cast<long>(k) - static_cast<long>(r) * m;
  BigInt value = restricted_coeff(n, a * d - m, a);
  return m % 2 == 0 ? value : BigInt(-value);
}

bool has_increasing_r_packed_gt1(const Dosp& p, int r, std::span<const int> t_set) {
  check_subset(t_set, p.n(), true);
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    if (packed_link(p, r, t_set, i)) return true;
  }
  return false;
}

SetPartition maximal_increasing_runs(const Dosp& p, int r, std::span<const int> t_set) {
  check_subset(t_set, p.n(), true);
  const std::size_t m = p.block_count();
  for (int t : t_set) {
    if (singlet_index(p, t) == m) throw std::invalid_argument("element " + std::to_string(t) + " of T is not a singlet block");
  }
  SetPartition runs;
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_t_singlet(p.blocks()[i], t_set)) continue;
    if (packed_link(p, r, t_set, (i + m - 1) % m)) continue;  // not the head of its run
    Block run{p.blocks()[i][0]};
    for (std::size_t j = i; packed_link(p, r, t_set, j); j = (j + 1) % m) run.push_back(p.blocks()[(j + 1) % m][0]);
    runs.push_back(std::move(run));
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

bool chi_by_runs(const Dosp& p, int r, const SetPartition& s) {
  const auto t_set = union_of(s);
  const std::size_t m = p.block_count();
  for (const auto& part : s) {
    std::size_t at = singlet_index(p, part.front());
    if (at == m || p.gaps()[at] < r) return false;
    for (std::size_t j = 1; j < part.size(); ++j) {
      if (!packed_link(p, r, t_set, at)) return false;
      at = (at + 1) % m;
      if (p.blocks()[at][0] != part[j]) return false;
    }
  }
  return true;
}

Dosp lemma3_embed(const Dosp& p, int r, const SetPartition& s) {
  const auto t_set = union_of(s);
  check_subset(t_set, p.n(), true);
  if (!in_k_r(p, r, s)) throw std::invalid_argument("dosp is not in K_r(S): some part is not an r-bad block");
  std::vector<Block> blocks;
  std::vector<int> gaps;
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    const Block& block = p.blocks()[i];
    const int gap = p.gaps()[i];
    if (std::find(s.begin(), s.end(), block) == s.end()) {
      blocks.push_back(block);
      gaps.push_back(gap);
      continue;
    }
    for (std::size_t j = 0; j < block.size(); ++j) {
      blocks.push_back({block[j]});
      gaps.push_back(j + 1 < block.size() ? r : gap - r * static_cast<int>(block.size() - 1));
    }
  }
  return Dosp(std::move(blocks), std::move(gaps), p.k(), p.n());
}

bool in_hat_k_r(const Dosp& p, int r, std::span<const int> t_set) {
  return in_k_r(p, r, singleton_partition(t_set)) && !has_increasing_r_packed_gt1(p, r, t_set);
}

std::vector<Dosp> hat_k_r(std::span<const Dosp> family, int r, std::span<const int> t_set) {
  std::vector<Dosp> out;
  for (const auto& p : family) {
    if (in_hat_k_r(p, r, t_set)) out.push_back(p);
  }
  return out;
}

std::vector<Dosp> hat_k_r(int k, int n, int d, int r, std::span<const int> t_set) {
  check_subset(t_set, n, true);
  return hat_k_r(dosps_with_winding_number(k, n, d), r, t_set);
}

std::vector<int> second_winding_vector(const Dosp& p, int r, std::span<const int> t_set) {
  check_subset(t_set, p.n(), true);
  SpotDiagram diagram = SpotDiagram::of(p);
  diagram.color_for(t_set, r);
  if (has_increasing_r_packed_gt1(p, r, t_set)) {
    throw std::invalid_argument("dosp has an increasing r-packed run of length > 1, so it is not in hat-K_r(T)");
  }
  const int k = p.k();
  const auto pos = p.block_positions();
  const auto owner = p.block_of_element();
  std::vector<int> v(static_cast<std::size_t>(p.n()));
  for (int i = 1; i <= p.n(); ++i) {
    const int next = i == p.n() ? 1 : i + 1;
    const int from = pos[owner[static_cast<std::size_t>(i)]];
    const int to = pos[owner[static_cast<std::size_t>(next)]];
    int blue = 0;
    if (from != to) {
      for (int s = (from + 1) % k;; s = (s + 1) % k) {
        if (diagram.colors[static_cast<std::size_t>(s)] == SpotColor::Blue) ++blue;
        if (s == to) break;
      }
    }
    v[static_cast<std::size_t>(i - 1)] = blue;
  }
  return v;
}

bool is_second_winding_vector(std::span<const int> v, int k, int r, std::span<const int> t_set) {
  const int n = static_cast<int>(v.size());
  if (n < 1) return false;
  for (std::size_t i = 0; i < t_set.size(); ++i) {
    if (t_set[i] < 1 || t_set[i] >= n) return false;
    if (i > 0 && t_set[i - 1] >= t_set[i]) return false;
  }
  const long blue = static_cast<long>(k) - static_cast<long>(r) * static_cast<long>(t_set.size());
  if (blue < 1) return false;
  long sum = 0;
  for (int i = 1; i <= n; ++i) {
    const int x = v[static_cast<std::size_t>(i - 1)];
    if (contains(t_set, i)) {
      if (x < 1 || x > blue) return false;
    } else if (x < 0 || x > blue - 1) {
      return false;
    }
    sum += x;
  }
  return sum % blue == 0;
}

Dosp dosp_from_second_winding_vector(std::span<const int> v, int k, int r, std::span<const int> t_set) {
  if (!is_second_winding_vector(v, k, r, t_set)) {
    throw std::invalid_argument("not a second winding vector for the given k, r and T");
  }
  const int n = static_cast<int>(v.size());
  const int blue = k - r * static_cast<int>(t_set.size());
  std::vector<Block> at_blue(static_cast<std::size_t>(blue));
  int spot = 0;
  for (int i = 1; i <= n; ++i) {
    at_blue[static_cast<std::size_t>(spot)].push_back(i);
    spot = (spot + v[static_cast<std::size_t>(i - 1)]) % blue;
  }
  // Each blue spot keeps its non-T elements; its T elements follow it as
  // singlets in decreasing order, each trailed by r-1 empty red spots.
  std::vector<std::optional<Block>> circle;
  circle.reserve(static_cast<std::size_t>(k));
  for (const Block& here : at_blue) {
    Block rest;
    Block spread;
    for (int e : here) (contains(t_set, e) ? spread : rest).push_back(e);
    circle.push_back(rest.empty() ? std::nullopt : std::optional<Block>(std::move(rest)));
    for (auto it = spread.rbegin(); it != spread.rend(); ++it) {
      circle.push_back(Block{*it});
      for (int j = 1; j < r; ++j) circle.push_back(std::nullopt);
    }
  }
  std::vector<Block> blocks;
  std::vector<int> positions;
  for (std::size_t s = 0; s < circle.size(); ++s) {
    if (!circle[s]) continue;
    blocks.push_back(std::move(*circle[s]));
    positions.push_back(static_cast<int>(s));
  }
  std::vector<int> gaps(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    gaps[i] = (i + 1 < blocks.size() ? positions[i + 1] : positions[0] + k) - positions[i];
  }
  return Dosp(std::move(blocks), std::move(gaps), k, n);
}

bool check_prop4(std::span<const Dosp> family, int r, std::span<const int> t_set) {
  if (family.empty()) return true;
  check_subset(t_set, family.front().n(), true);
  const auto base = k_r_of_s(family, r, singleton_partition(t_set));
  const std::set<Dosp> base_set(base.begin(), base.end());

  const auto partitions = unordered_partitions(t_set);
  std::vector<std::set<Dosp>> images;
  images.reserve(partitions.size());
  for (const auto& s : partitions) {
    const auto members = k_r_of_s(family, r, s);
    std::set<Dosp> image;
    for (const auto& q : members) {
      Dosp embedded = lemma3_embed(q, r, s);
      if (!base_set.contains(embedded)) return false;
      image.insert(std::move(embedded));
    }
    if (image.size() != members.size()) return false;
    images.push_back(std::move(image));
  }

  const int full_sign = sign_of_size(t_set.size());
  for (const auto& p : base) {
    long signed_count = 0;
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      const bool in_image = images[i].contains(p);
      if (in_image != chi_by_runs(p, r, partitions[i])) return false;
      if (in_image) signed_count += sign_of_size(partitions[i].size());
    }
    const long expected = has_increasing_r_packed_gt1(p, r, t_set) ? 0 : full_sign;
    if (signed_count != expected) return false;
  }
  return true;
}

bool check_prop4(int k, int n, int d, int r, std::span<const int> t_set) {
  check_subset(t_set, n, true);
  return check_prop4(dosps_with_winding_number(k, n, d), r, t_set);
}

std::vector<int> shift_subset(std::span<const int> t_set, int n, int s) {
  std::vector<int> out;
  out.reserve(t_set.size());
  for (int t : t_set) out.push_back(((t - 1 + s) % n + n) % n + 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool check_prop3(int k, int n, int r, int d) {
  if (n >= 31) throw std::invalid_argument("subset sweep is limited to n < 31");
  const auto family = dosps_with_winding_number(k, n, d);
  BigInt total = 0;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    std::vector<int> t_set;
    for (int e = 1; e <= n; ++e) {
      if (bits & (1u << (e - 1))) t_set.push_back(e);
    }
    if (static_cast<int>(t_set.size()) == n || !contains(t_set, n)) {
      total += h_r_of_t(family, r, t_set);
      continue;
    }
    // Rotate the largest element missing from T onto n.
    int missing = n;
    while (contains(t_set, missing)) --missing;
    total += h_r_of_t(family, r, shift_subset(t_set, n, n - missing));
  }
  return total == count_r_hypersimplicial(k, n, r, d);
}

}  // namespace hstarlab
