#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hstarlab {

/// Parameters (r, k, n) of the cross-section {x in [0, r]^n : sum x = k}.
/// r = 1 is the hypersimplex.
struct PolytopeSpec {
  int r = 1;
  int k = 1;
  int n = 2;

  /// r >= 1, n >= 2 and 0 < k < r n.
  bool is_valid() const;
  /// Throws std::invalid_argument describing the first violated bound.
  void validate() const;

  friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;
};

/// Ascending list of elements of {1..n}.
using Block = std::vector<int>;

class DospError : public std::invalid_argument {
 public:
  enum class Kind {
    Syntax,
    BadType,
    EmptyBlock,
    ElementOutOfRange,
    DuplicateElement,
    MissingElement,
    GapCountMismatch,
    NonPositiveGap,
    GapSumMismatch,
  };

  DospError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Decorated ordered set partition of type (k, n).
///
/// Blocks sit clockwise on a circle of circumference k; gaps()[i] is the
/// clockwise distance from block i to block i+1 (cyclically). Values are
/// always stored in canonical rotation: the block containing 1 comes first,
/// and elements inside a block are ascending.
class Dosp {
 public:
  /// Validates and canonicalizes. Throws DospError.
  Dosp(std::vector<Block> blocks, std::vector<int> gaps, int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<int>& gaps() const { return gaps_; }

  /// Spot (0..k-1) of each block, the first block at spot 0.
  std::vector<int> block_positions() const;
  /// Index 1..n: block index holding that element. Index 0 unused.
  std::vector<std::size_t> block_of_element() const;

  friend auto operator<=>(const Dosp&, const Dosp&) = default;
  friend bool operator==(const Dosp&, const Dosp&) = default;

 private:
  std::vector<Block> blocks_;
  std::vector<int> gaps_;
  int k_;
  int n_;
};

/// Rotation with the block containing 1 first. Dosp values are already
/// canonical, so this is the identity on them; the raw overload rotates
/// (blocks, gaps) pairs that have not been validated yet.
Dosp canonicalize(const Dosp& p);
void canonicalize(std::vector<Block>& blocks, std::vector<int>& gaps);

/// w_i = clockwise distance from the block of i to the block of i+1 (mod n).
std::vector<int> winding_vector(const Dosp& p);

/// d with sum(w) = k d. Throws std::logic_error if k does not divide the sum.
int winding_number(const Dosp& p);

/// True when 0 <= w_i <= k-1 and k divides sum(w).
bool is_winding_vector(std::span<const int> w, int k);

/// Inverse of winding_vector: places 1 on a spot, then i+1 w_i spots after i.
/// Throws std::invalid_argument for vectors violating the bounds.
Dosp dosp_from_winding_vector(std::span<const int> w, int k);

/// Indices of blocks with gap >= r * |block|.
std::vector<std::size_t> r_bad_block_indices(const Dosp& p, int r);
/// The r-bad blocks themselves, in canonical block order.
std::vector<Block> r_bad_blocks(const Dosp& p, int r);
/// Every block satisfies 1 <= gap <= r |block| - 1.
bool is_r_hypersimplicial(const Dosp& p, int r);

/// Relabels e -> ((e - 1 + s) mod n) + 1 and recanonicalizes.
Dosp cyclic_shift_elements(const Dosp& p, int s);

/// Canonical text: ({1,2,7}_2,{3,5}_3,{4,6}_1).
std::string format_dosp(const Dosp& p);

/// Parses the canonical text grammar; whitespace between tokens is ignored.
/// Any rotation is accepted and returned canonical. Throws DospError.
Dosp parse_dosp(std::string_view text, int k, int n);

enum class SpotColor { Red, Blue };

/// The circle of k spots with the occupied ones naming their block.
struct SpotDiagram {
  int k = 0;
  int n = 0;
  std::vector<Block> blocks;
  /// Spot -> index into blocks; empty spots hold nullopt.
  std::vector<std::optional<std::size_t>> occupant;
  /// Empty until color_for() is called.
  std::vector<SpotColor> colors;

  static SpotDiagram of(const Dosp& p);

  /// Colors each T-singlet spot and the r-1 spots after it red, everything
  /// else blue. Throws std::invalid_argument if an element of T is not a
  /// singlet block or if one of the r-1 following spots is occupied.
  void color_for(std::span<const int> t_set, int r);

  /// Reads gaps back off the occupied spots.
  Dosp to_dosp() const;

  std::size_t blue_count() const;
};

}  // namespace hstarlab
