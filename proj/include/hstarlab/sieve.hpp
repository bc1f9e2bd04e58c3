#pragma once

#include <span>
#include <vector>

#include "hstarlab/bigint.hpp"
#include "hstarlab/dosp.hpp"

// Inclusion-exclusion over r-bad blocks, checked family by family.
//
// Throughout, a "family" is the list of all dosps of one type (k, n) with one
// winding number d (see dosps_with_winding_number). T is an ascending subset
// of {1..n}; most operations past the sieve identity itself also require
// n not in T. A T-singlet is a block {t} with t in T.

namespace hstarlab {

/// Unordered set partition: parts ascending inside, ordered by least element.
using SetPartition = std::vector<Block>;

/// All set partitions of t_set, each exactly once (Bell(|T|) of them).
std::vector<SetPartition> unordered_partitions(std::span<const int> t_set);

/// {{t_1}, ..., {t_m}}.
SetPartition singleton_partition(std::span<const int> t_set);

/// Every part of s is a block of p, and an r-bad one.
bool in_k_r(const Dosp& p, int r, const SetPartition& s);

/// Members of family having every part of s as an r-bad block.
std::vector<Dosp> k_r_of_s(std::span<const Dosp> family, int r, const SetPartition& s);
std::vector<Dosp> k_r_of_s(int k, int n, int d, int r, const SetPartition& s);

/// sum over S in UP(T) of (-1)^|S| |K_r(S)|.
BigInt h_r_of_t(std::span<const Dosp> family, int r, std::span<const int> t_set);
BigInt h_r_of_t(int k, int n, int d, int r, std::span<const int> t_set);

/// Closed form of the signed sum for |T| = m with n not in T:
/// (-1)^m <n choose (k - r m) d - m>_{k - r m}.
BigInt h_r_closed_form(int k, int n, int d, int r, int m);

/// Some run of at least two consecutive T-singlet blocks has every gap but the
/// last equal to r, the last gap >= r, and ascending elements. Block indices
/// are cyclic.
bool has_increasing_r_packed_gt1(const Dosp& p, int r, std::span<const int> t_set);

/// Partition of T into the maximal increasing r-packed runs of p. Requires
/// every element of T to sit in a singlet block.
SetPartition maximal_increasing_runs(const Dosp& p, int r, std::span<const int> t_set);

/// Membership test for the image of lemma3_embed over K_r(s), read directly
/// off p: every part of s appears as consecutive ascending T-singlets joined
/// by gaps of exactly r, the last gap >= r.
bool chi_by_runs(const Dosp& p, int r, const SetPartition& s);

/// Splits each part M = {m_1 < ... < m_w} of s, an r-bad block with gap l,
/// into singlets {m_1}_r, ..., {m_{w-1}}_r, {m_w}_{l - r(w-1)}.
/// Throws std::invalid_argument unless p is in K_r(s) and n is not in the
/// union of s.
Dosp lemma3_embed(const Dosp& p, int r, const SetPartition& s);

/// Members of K_r(singletons of T) with no increasing r-packed run of
/// length > 1.
bool in_hat_k_r(const Dosp& p, int r, std::span<const int> t_set);
std::vector<Dosp> hat_k_r(std::span<const Dosp> family, int r, std::span<const int> t_set);
std::vector<Dosp> hat_k_r(int k, int n, int d, int r, std::span<const int> t_set);

/// v_i counts blue spots passed walking clockwise from i to i+1, excluding the
/// start and including the end; 0 when i and i+1 share a spot. Red spots are
/// each T-singlet and the r-1 empty spots after it.
/// Throws std::invalid_argument unless p is in hat-K_r(T).
std::vector<int> second_winding_vector(const Dosp& p, int r, std::span<const int> t_set);

/// With B = k - r|T|: 0 <= v_i <= B-1 off T, 1 <= v_i <= B on T, B | sum(v),
/// B >= 1 and n not in T.
bool is_second_winding_vector(std::span<const int> v, int k, int r, std::span<const int> t_set);

/// Inverse of second_winding_vector. Throws std::invalid_argument when
/// is_second_winding_vector fails.
Dosp dosp_from_second_winding_vector(std::span<const int> v, int k, int r, std::span<const int> t_set);

/// For every P in K_r(singletons of T): the signed count over S in UP(T) of
/// P lying in lemma3_embed(K_r(S)) is (-1)^|T| when P is in hat-K_r(T) and 0
/// otherwise. Also checks each embedding is injective with image inside
/// K_r(singletons), and that image membership agrees with chi_by_runs.
bool check_prop4(std::span<const Dosp> family, int r, std::span<const int> t_set);
bool check_prop4(int k, int n, int d, int r, std::span<const int> t_set);

/// sum over all T of h_r_of_t equals count_r_hypersimplicial, with the signed
/// sum for T containing n taken from a cyclic shift of T avoiding n.
bool check_prop3(int k, int n, int r, int d);

/// ((t - 1 + s) mod n) + 1 applied to each element, result ascending.
std::vector<int> shift_subset(std::span<const int> t_set, int n, int s);

}  // namespace hstarlab
