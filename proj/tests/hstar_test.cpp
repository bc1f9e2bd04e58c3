#include <gtest/gtest.h>

#include <vector>

#include "hstarlab/coeffcore.hpp"
#include "hstarlab/hstar.hpp"

using namespace hstarlab;

namespace {

std::vector<BigInt> big(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST(ClosedForm, KnownVectors) {
  EXPECT_EQ(hstar_closed_form({1, 2, 4}).entries, big({1, 2, 1, 0}));
  EXPECT_EQ(hstar_closed_form({1, 1, 5}).entries, big({1, 0, 0, 0, 0}));
  EXPECT_EQ(hstar_closed_form({1, 2, 5}).entries, big({1, 5, 5, 0, 0}));
  EXPECT_EQ(hstar_closed_form({1, 1, 2}).entries, big({1, 0}));
}

TEST(ClosedForm, SpecIsCarried) {
  const PolytopeSpec spec{2, 3, 4};
  EXPECT_EQ(hstar_closed_form(spec).spec, spec);
}

TEST(ClosedForm, RejectsInvalidSpec) {
  EXPECT_THROW(hstar_closed_form({1, 4, 4}), std::invalid_argument);
  EXPECT_THROW(hstar_closed_form({0, 1, 4}), std::invalid_argument);
}

TEST(ClosedForm, ComplementSymmetry) {
  // x -> r - x maps the slice at k onto the slice at rn - k.
  for (int r = 1; r <= 3; ++r)
    for (int n = 2; n <= 7; ++n)
      for (int k = 1; k < r * n; ++k)
        EXPECT_EQ(hstar_closed_form({r, k, n}).entries, hstar_closed_form({r, r * n - k, n}).entries)
            << r << ' ' << k << ' ' << n;
}

TEST(ClosedForm, EntriesAreNonnegativeWithUnitConstantTerm) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 2; n <= 8; ++n)
      for (int k = 1; k < r * n; ++k) {
        const auto h = hstar_closed_form({r, k, n});
        EXPECT_EQ(h.entries.front(), 1);
        for (const auto& e : h.entries) EXPECT_GE(e, 0);
      }
}

TEST(ClosedForm, HypersimplexVolumeIsEulerian) {
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k < n; ++k) EXPECT_EQ(hstar_closed_form({1, k, n}).total(), eulerian(k, n - 1));
}

TEST(KatzmanNumerator, AgreesWithClosedForm) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 2; n <= 7; ++n)
      for (int k = 1; k <= std::min(r * n - 1, 6); ++k) {
        const auto closed = hstar_closed_form({r, k, n});
        const IntPoly numerator = katzman_numerator({r, k, n});
        EXPECT_LT(numerator.degree(), n);
        for (int d = 0; d < n; ++d) EXPECT_EQ(numerator.coeff(d), closed.entries[d]) << r << ' ' << k << ' ' << n;
      }
}

TEST(Identities, PascalTypeDifference) {
  for (long n = 0; n <= 12; ++n)
    for (long m = 0; m <= 12; ++m)
      for (long a = 1; a <= 6; ++a) EXPECT_TRUE(check_lemma1(n, m, a)) << n << ' ' << m << ' ' << a;
}

TEST(Identities, BinomialShiftOfSeries) {
  for (long s = 0; s <= 5; ++s)
    for (long a = 1; a <= 4; ++a)
      for (long n = 0; n <= 8; ++n) EXPECT_TRUE(check_prop1(s, a, n, 10)) << s << ' ' << a << ' ' << n;
}
