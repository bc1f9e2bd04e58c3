#pragma once

#include "hstarlab/dosp.hpp"
#include "hstarlab/hstar_vector.hpp"
#include "hstarlab/int_poly.hpp"

namespace hstarlab {

/// h*_d = sum_i (-1)^i C(n, i) <n choose (k - r i) d - i>_{k - r i}, the sum
/// stopping at the first i with k - r i <= 0.
HStarVector hstar_closed_form(const PolytopeSpec& spec);

/// Numerator of the Veronese-type Hilbert series of the cross-section,
/// evaluated term by term without the telescoping simplification:
///
///   sum_i (-1)^i C(n,i) sum_j C(i,j) (t-1)^j sum_{l=0..n} <n-j choose l(k-ri)>_{k-ri} t^l
///
/// Throws std::logic_error if any coefficient of degree >= n survives.
IntPoly katzman_numerator(const PolytopeSpec& spec);

/// <n,m>_a - <n,m-1>_a == <n-1,m>_a - <n-1,m-a>_a.
bool check_lemma1(long n, long m, long a);

/// Compares, up to degree max_degree,
///   sum_j C(s,j) (t-1)^j sum_l <n-j choose l a>_a t^l   and   sum_l <n choose l a - s>_a t^l.
bool check_prop1(long s, long a, long n, long max_degree);

}  // namespace hstarlab
