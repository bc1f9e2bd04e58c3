#include "hstarlab/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hstarlab/coeffcore.hpp"
#include "hstarlab/dosp.hpp"
#include "hstarlab/enumerate.hpp"
#include "hstarlab/hstar.hpp"
#include "hstarlab/sieve.hpp"

namespace hstarlab {

namespace {

class Tally {
 public:
  Tally(std::string suite, std::string identity) {
    report_.suite = std::move(suite);
    report_.identity = std::move(identity);
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++report_.cases;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = describe();
    }
  }

  const IdentityReport& report() const { return report_; }

 private:
  IdentityReport report_;
};

template <typename... Args>
std::string describe(const Args&... args) {
  std::ostringstream os;
  ((os << args), ...);
  return os.str();
}

std::string join(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string set_text(const std::vector<int>& values) {
  std::string inner = join(values);
  return "{" + inner.substr(1, inner.size() - 2) + "}";
}

// Subsets of {1..n-1} with at most max_size elements, ascending.
std::vector<std::vector<int>> subsets_avoiding_n(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
    if (std::popcount(bits) > max_size) continue;
    std::vector<int> t;
    for (int e = 1; e < n; ++e) {
      if (bits & (1u << (e - 1))) t.push_back(e);
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Families by (k, n, d), built once per suite run.
class FamilyCache {
 public:
  const std::vector<Dosp>& get(int k, int n, int d) {
    auto key = std::make_tuple(k, n, d);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, dosps_with_winding_number(k, n, d)).first;
    return it->second;
  }

 private:
  std::map<std::tuple<int, int, int>, std::vector<Dosp>> cache_;
};

bool valid_spec(int r, int k, int n) { return PolytopeSpec{r, k, n}.is_valid(); }

std::vector<IdentityReport> lemma1_suite(const SweepBounds& b) {
  const int max_n = b.max_n.value_or(12);
  const int max_a = b.max_k.value_or(6);
  Tally tally("lemma1", "<n,m>_a - <n,m-1>_a = <n-1,m>_a - <n-1,m-a>_a");
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= max_n; ++m) {
      for (int a = 1; a <= max_a; ++a) {
        tally.check(check_lemma1(n, m, a), [&] { return describe("n=", n, " m=", m, " a=", a); });
      }
    }
  }
  return {tally.report()};
}

std::vector<IdentityReport> prop1_suite(const SweepBounds& b) {
  const int max_n = b.max_n.value_or(8);
  const int max_a = b.max_k.value_or(4);
  constexpr int kMaxS = 5;
  constexpr int kDegree = 10;
  Tally tally("prop1", "sum_j C(s,j)(t-1)^j sum_l <n-j,la>_a t^l = sum_l <n,la-s>_a t^l (to degree 10)");
  for (int s = 0; s <= kMaxS; ++s) {
    for (int a = 1; a <= max_a; ++a) {
      for (int n = 0; n <= max_n; ++n) {
        tally.check(check_prop1(s, a, n, kDegree), [&] { return describe("s=", s, " a=", a, " n=", n); });
      }
    }
  }
  return {tally.report()};
}

std::vector<IdentityReport> prop2_suite(const SweepBounds& b) {
  const int max_n = b.max_n.value_or(5);
  const int max_k = b.max_k.value_or(4);
  Tally bijection("prop2", "winding vectors <-> dosps of type (k,n) with winding number d");
  Tally counts("prop2", "number of dosps with winding number d = <n,kd>_k");
  Tally shifts("prop2", "cyclic shift of elements preserves the winding number");
  Tally text("prop2", "canonical text round trip");
  Tally sampled("prop2", "random winding vector round trips beyond the exhaustive scale");

  for (int k = 1; k <= max_k; ++k) {
    for (int n = 1; n <= max_n; ++n) {
      for (int d = 0; d < std::max(n, 1); ++d) {
        std::set<Dosp> seen;
        std::uint64_t streamed = 0;
        for (WindingVectorStream s(k, n, d); !s.done(); s.advance()) {
          const auto& w = s.current();
          ++streamed;
          const Dosp p = dosp_from_winding_vector(w, k);
          const bool fresh = seen.insert(p).second;
          bijection.check(fresh && winding_vector(p) == w && winding_number(p) == d,
                          [&] { return describe("k=", k, " w=", join(w)); });
          text.check(parse_dosp(format_dosp(p), k, n) == p, [&] { return format_dosp(p); });
          for (int shift = 0; shift < n; ++shift) {
            shifts.check(winding_number(cyclic_shift_elements(p, shift)) == d,
                         [&] { return describe(format_dosp(p), " shifted by ", shift); });
          }
        }
        counts.check(count_dosps(k, n, d) == static_cast<unsigned long>(streamed),
                     [&] { return describe("k=", k, " n=", n, " d=", d); });
      }
    }
  }

  std::mt19937_64 rng(b.seed);
  for (int sample = 0; sample < 200; ++sample) {
    const int n = std::uniform_int_distribution<int>(max_n + 1, max_n + 6)(rng);
    const int k = std::uniform_int_distribution<int>(2, max_k + 4)(rng);
    std::vector<int> w(static_cast<std::size_t>(n));
    int sum = 0;
    for (int i = 0; i + 1 < n; ++i) {
      w[static_cast<std::size_t>(i)] = std::uniform_int_distribution<int>(0, k - 1)(rng);
      sum += w[static_cast<std::size_t>(i)];
    }
    w.back() = (k - sum % k) % k;
    const Dosp p = dosp_from_winding_vector(w, k);
    sampled.check(winding_vector(p) == w, [&] { return describe("k=", k, " w=", join(w)); });
  }
  return {bijection.report(), counts.report(), shifts.report(), text.report(), sampled.report()};
}

std::vector<IdentityReport> prop3_suite(const SweepBounds& b) {
  const int max_n = b.max_n.value_or(5);
  const int max_k = b.max_k.value_or(5);
  const int max_r = b.max_r.value_or(2);
  Tally tally("prop3", "sum over T of H_r(T) = number of r-hypersimplicial dosps");
  for (int r = 1; r <= max_r; ++r) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; k <= max_k; ++k) {
        if (!valid_spec(r, k, n)) continue;
        for (int d = 0; d < n; ++d) {
          tally.check(check_prop3(k, n, r, d), [&] { return describe("k=", k, " n=", n, " r=", r, " d=", d); });
        }
      }
    }
  }
  return {tally.report()};
}

std::vector<IdentityReport> prop4_suite(const SweepBounds& b) {
  const int max_n = b.max_n.value_or(5);
  const int max_k = b.max_k.value_or(5);
  const int max_r = b.max_r.value_or(2);
  FamilyCache families;
  Tally tally("prop4", "signed embedding count per P is (-1)^|T| on hat-K_r(T), 0 elsewhere");
  Tally runs("prop4", "image of the embedding for S = partition of T into increasing packed runs");
  for (int r = 1; r <= max_r; ++r) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; k <= max_k; ++k) {
        if (!valid_spec(r, k, n)) continue;
        for (int d = 0; d < n; ++d) {
          const auto& family = families.get(k, n, d);
          for (const auto& t : subsets_avoiding_n(n, n - 1)) {
            tally.check(check_prop4(family, r, t), [&] {
              return describe("k=", k, " n=", n, " d=", d, " r=", r, " T=", set_text(t));
            });
            // The coarsest S with chi_S(P) = 1 is the run partition itself.
            for (const auto& p : k_r_of_s(family, r, singleton_partition(t))) {
              const auto coarsest = maximal_increasing_runs(p, r, t);
              runs.check(chi_by_runs(p, r, coarsest), [&] { return describe(format_dosp(p), " T=", set_text(t)); });
            }
          }
        }
      }
    }
  }
  return {tally.report(), runs.report()};
}

std::vector<IdentityReport> prop5_suite(const SweepBounds& b) {
  const int max_n = b.max_n.value_or(6);
  const int max_k = b.max_k.value_or(6);
  const int max_r = b.max_r.value_or(2);
  constexpr int kMaxT = 2;
  FamilyCache families;
  Tally forward("prop5", "second winding vector of each hat-K_r(T) member lies in the box and inverts");
  Tally backward("prop5", "each box vector builds a hat-K_r(T) member with that second winding vector");
  Tally sizes("prop5", "|hat-K_r(T)| = number of box vectors = <n,(k-rm)d-m>_{k-rm}");
  Tally sampled("prop5", "random second winding vector round trips beyond the exhaustive scale");

  for (int r = 1; r <= max_r; ++r) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; k <= max_k; ++k) {
        if (!valid_spec(r, k, n)) continue;
        for (const auto& t : subsets_avoiding_n(n, kMaxT)) {
          const int m = static_cast<int>(t.size());
          const int blue = k - r * m;
          std::vector<std::uint64_t> hat_sizes(static_cast<std::size_t>(n), 0);
          for (int d = 0; d < n; ++d) {
            for (const auto& p : hat_k_r(families.get(k, n, d), r, t)) {
              ++hat_sizes[static_cast<std::size_t>(d)];
              const auto v = second_winding_vector(p, r, t);
              const long sum = std::accumulate(v.begin(), v.end(), 0L);
              forward.check(is_second_winding_vector(v, k, r, t) && sum == static_cast<long>(blue) * d &&
                                dosp_from_second_winding_vector(v, k, r, t) == p,
                            [&] { return describe(format_dosp(p), " r=", r, " T=", set_text(t)); });
            }
          }
          // Odometer over the box, bucketed by winding number.
          std::vector<std::uint64_t> box_sizes(static_cast<std::size_t>(n), 0);
          if (blue >= 1) {
            std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) {
              const bool in_t = std::binary_search(t.begin(), t.end(), i);
              lo[static_cast<std::size_t>(i - 1)] = in_t ? 1 : 0;
              hi[static_cast<std::size_t>(i - 1)] = in_t ? blue : blue - 1;
            }
            std::vector<int> v = lo;
            while (true) {
              const long sum = std::accumulate(v.begin(), v.end(), 0L);
              if (sum % blue == 0) {
                const long d = sum / blue;
                if (d < n) ++box_sizes[static_cast<std::size_t>(d)];
                const Dosp p = dosp_from_second_winding_vector(v, k, r, t);
                backward.check(d < n && in_hat_k_r(p, r, t) && winding_number(p) == d &&
                                   second_winding_vector(p, r, t) == v,
                               [&] { return describe("v=", join(v), " k=", k, " r=", r, " T=", set_text(t)); });
              }
              std::size_t i = 0;
              while (i < v.size() && v[i] == hi[i]) {
                v[i] = lo[i];
                ++i;
              }
              if (i == v.size()) break;
              ++v[i];
            }
          }
          for (int d = 0; d < n; ++d) {
            const auto h = hat_sizes[static_cast<std::size_t>(d)];
            sizes.check(h == box_sizes[static_cast<std::size_t>(d)] &&
                            restricted_coeff(n, static_cast<long>(blue) * d - m, blue) == static_cast<unsigned long>(h),
                        [&] { return describe("k=", k, " n=", n, " d=", d, " r=", r, " T=", set_text(t)); });
          }
        }
      }
    }
  }

  std::mt19937_64 rng(b.seed);
  for (int sample = 0; sample < 100; ++sample) {
    const int n = std::uniform_int_distribution<int>(max_n + 1, max_n + 5)(rng);
    const int r = std::uniform_int_distribution<int>(1, std::max(1, max_r))(rng);
    const int m = std::uniform_int_distribution<int>(0, 3)(rng);
    std::vector<int> pool(static_cast<std::size_t>(n - 1));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> t(pool.begin(), pool.begin() + m);
    std::sort(t.begin(), t.end());
    const int blue = std::uniform_int_distribution<int>(1, 6)(rng);
    const int k = blue + r * m;
    std::vector<int> v(static_cast<std::size_t>(n));
    long sum = 0;
    for (int i = 1; i < n; ++i) {
      const bool in_t = std::binary_search(t.begin(), t.end(), i);
      v[static_cast<std::size_t>(i - 1)] =
          std::uniform_int_distribution<int>(in_t ? 1 : 0, in_t ? blue : blue - 1)(rng);
      sum += v[static_cast<std::size_t>(i - 1)];
    }
    v.back() = static_cast<int>((blue - sum % blue) % blue);
    const Dosp p = dosp_from_second_winding_vector(v, k, r, t);
    sampled.check(in_hat_k_r(p, r, t) && second_winding_vector(p, r, t) == v,
                  [&] { return describe("v=", join(v), " k=", k, " r=", r, " T=", set_text(t)); });
  }
  return {forward.report(), backward.report(), sizes.report(), sampled.report()};
}

std::vector<IdentityReport> eq6_suite(const SweepBounds& b) {
  const int max_n = b.max_n.value_or(6);
  const int max_k = b.max_k.value_or(6);
  const int max_r = b.max_r.value_or(2);
  constexpr int kMaxT = 3;
  FamilyCache families;
  Tally tally("eq6", "H_r(T) = (-1)^m <n,(k-rm)d-m>_{k-rm} for n not in T");
  for (int r = 1; r <= max_r; ++r) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; k <= max_k; ++k) {
        if (!valid_spec(r, k, n)) continue;
        for (int d = 0; d < n; ++d) {
          const auto& family = families.get(k, n, d);
          for (const auto& t : subsets_avoiding_n(n, kMaxT)) {
            tally.check(h_r_of_t(family, r, t) == h_r_closed_form(k, n, d, r, static_cast<int>(t.size())), [&] {
              return describe("k=", k, " n=", n, " d=", d, " r=", r, " T=", set_text(t));
            });
          }
        }
      }
    }
  }
  return {tally.report()};
}

std::uint64_t descent_class_size(int k, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    int descents = 0;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) descents += perm[i] > perm[i + 1];
    if (descents == k - 1) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<IdentityReport> eulerian_suite(const SweepBounds& b) {
  const int max_n = b.max_n.value_or(9);
  Tally brute("eulerian", "recurrence matches brute-force descent counts");
  Tally volume("eulerian", "sum_d h*_d(hypersimplex(k,n)) = A(k, n-1), closed form");
  Tally combinatorial("eulerian", "number of hypersimplicial dosps of type (k,n) = A(k, n-1)");
  for (int n = 1; n <= std::min(max_n, 7); ++n) {
    for (int k = 1; k <= n; ++k) {
      brute.check(eulerian(k, n) == static_cast<unsigned long>(descent_class_size(k, n)),
                  [&] { return describe("k=", k, " n=", n); });
    }
  }
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k < n; ++k) {
      const PolytopeSpec spec{1, k, n};
      volume.check(hstar_closed_form(spec).total() == eulerian(k, n - 1),
                   [&] { return describe("k=", k, " n=", n); });
      if (n <= 8) {
        BigInt total = 0;
        for (int d = 0; d < n; ++d) total += count_r_hypersimplicial(k, n, 1, d);
        combinatorial.check(total == eulerian(k, n - 1), [&] { return describe("k=", k, " n=", n); });
      }
    }
  }
  return {brute.report(), volume.report(), combinatorial.report()};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "prop1", "prop2", "prop3", "prop4", "prop5", "eq6", "eulerian"};
  return names;
}

std::vector<IdentityReport> run_suite(std::string_view name, const SweepBounds& bounds) {
  if (name == "lemma1") return lemma1_suite(bounds);
  if (name == "prop1") return prop1_suite(bounds);
  if (name == "prop2") return prop2_suite(bounds);
  if (name == "prop3") return prop3_suite(bounds);
  if (name == "prop4") return prop4_suite(bounds);
  if (name == "prop5") return prop5_suite(bounds);
  if (name == "eq6") return eq6_suite(bounds);
  if (name == "eulerian") return eulerian_suite(bounds);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace hstarlab
