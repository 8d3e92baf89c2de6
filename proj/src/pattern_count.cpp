#include "permpoly/pattern_count.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "permpoly/config.hpp"

namespace permpoly {

namespace {

using u128 = unsigned __int128;

BigInt bigint_from_u128(u128 x) {
  BigInt r = static_cast<unsigned long>(x >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(x & ~0ULL);
  return r;
}

class Fenwick {
public:
  explicit Fenwick(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}

  void add(int i, int delta) {
    for (; i < static_cast<int>(tree_.size()); i += i & -i) tree_[static_cast<std::size_t>(i)] += delta;
  }

  long long prefix(int i) const {
    long long s = 0;
    for (; i > 0; i -= i & -i) s += tree_[static_cast<std::size_t>(i)];
    return s;
  }

  long long range(int lo, int hi) const {
    if (lo > hi) return 0;
    return prefix(hi) - prefix(lo - 1);
  }

private:
  std::vector<long long> tree_;
};

// ---- k == 2 -------------------------------------------------------------

u128 occ2(bool ascending, const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  Fenwick seen(n);
  u128 total = 0;
  for (int j = 0; j < n; ++j) {
    const int val = v[static_cast<std::size_t>(j)];
    total += static_cast<u128>(ascending ? seen.prefix(val - 1)
                                         : seen.range(val + 1, n));
    seen.add(val, 1);
  }
  return total;
}

// ---- k == 3 -------------------------------------------------------------

// Per-position quadrant counts give all six order-3 counts:
//   a = smaller before, b = larger before, c = larger after,
//   d = smaller after. Products over a middle element count the patterns
//   with that element's quadrant signature; first-element identities
//   split the two remaining pairs.
struct Counts3 {
  u128 c123 = 0, c132 = 0, c213 = 0, c231 = 0, c312 = 0, c321 = 0;
};

Counts3 occ3_all(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  Fenwick seen(n);
  u128 sum_ac = 0, sum_bd = 0, sum_ad = 0, sum_bc = 0;
  u128 sum_c_choose2 = 0, sum_d_choose2 = 0;
  for (int j = 0; j < n; ++j) {
    const long long val = v[static_cast<std::size_t>(j)];
    const long long a = seen.prefix(static_cast<int>(val) - 1);
    const long long b = j - a;
    const long long c = (n - val) - b;
    const long long d = (val - 1) - a;
    sum_ac += static_cast<u128>(a) * static_cast<u128>(c);
    sum_bd += static_cast<u128>(b) * static_cast<u128>(d);
    sum_ad += static_cast<u128>(a) * static_cast<u128>(d);
    sum_bc += static_cast<u128>(b) * static_cast<u128>(c);
    sum_c_choose2 += static_cast<u128>(c) * static_cast<u128>(c - 1) / 2;
    sum_d_choose2 += static_cast<u128>(d) * static_cast<u128>(d - 1) / 2;
    seen.add(static_cast<int>(val), 1);
  }
  Counts3 out;
  out.c123 = sum_ac;
  out.c321 = sum_bd;
  out.c132 = sum_c_choose2 - sum_ac;   // first element smallest
  out.c231 = sum_ad - out.c132;        // middle element largest
  out.c312 = sum_d_choose2 - sum_bd;   // first element largest
  out.c213 = sum_bc - out.c312;        // middle element smallest
  return out;
}

// ---- k == 4 -------------------------------------------------------------

enum class Region { Before, Between, After };
enum class Gap { Below, Between, Above };

struct SweepSpec {
  bool anchor_ascending;
  Region region_u, region_w;
  Gap gap_u, gap_w;
};

// Sum over anchor pairs ms < mt (with the required value orientation) of
// the product of the two independent counts. Exact because the spec is
// only built when the two free slots sit in distinct position regions and
// distinct value gaps, which forces their mutual order.
u128 sweep4(const std::vector<int>& v, const SweepSpec& spec) {
  const int n = static_cast<int>(v.size());
  Fenwick prefix_ms(n);  // values at positions < ms (inner state)
  Fenwick prefix_mt(n);  // values at positions < mt
  Fenwick suffix(n);     // values at positions > mt
  for (int i = 0; i < n; ++i) suffix.add(v[static_cast<std::size_t>(i)], 1);

  const auto count = [&](Region region, Gap gap, int mn, int mx) -> long long {
    int lo = 0, hi = 0;
    switch (gap) {
      case Gap::Below:   lo = 1;      hi = mn - 1; break;
      case Gap::Between: lo = mn + 1; hi = mx - 1; break;
      case Gap::Above:   lo = mx + 1; hi = n;      break;
    }
    switch (region) {
      case Region::Before:  return prefix_ms.range(lo, hi);
      case Region::Between: return prefix_mt.range(lo, hi) - prefix_ms.range(lo, hi);
      case Region::After:   return suffix.range(lo, hi);
    }
    return 0;
  };

  u128 total = 0;
  for (int mt = 0; mt < n; ++mt) {
    const int b = v[static_cast<std::size_t>(mt)];
    suffix.add(b, -1);
    for (int ms = 0; ms < mt; ++ms) {
      const int a = v[static_cast<std::size_t>(ms)];
      if ((a < b) == spec.anchor_ascending) {
        const int mn = std::min(a, b), mx = std::max(a, b);
        const long long cu = count(spec.region_u, spec.gap_u, mn, mx);
        if (cu > 0) {
          const long long cw = count(spec.region_w, spec.gap_w, mn, mx);
          total += static_cast<u128>(cu) * static_cast<u128>(cw);
        }
      }
      prefix_ms.add(a, 1);
    }
    for (int ms = 0; ms < mt; ++ms) prefix_ms.add(v[static_cast<std::size_t>(ms)], -1);
    prefix_mt.add(b, 1);
  }
  return total;
}

Gap gap_of(int value, int anchor1, int anchor2) {
  const int mn = std::min(anchor1, anchor2), mx = std::max(anchor1, anchor2);
  if (value < mn) return Gap::Below;
  if (value > mx) return Gap::Above;
  return Gap::Between;
}

// Finds anchor slots (s, t) whose two remaining slots land in distinct
// position regions and distinct value gaps. Every order-4 pattern admits
// one except 2413 and 3142.
bool find_anchors(const std::array<int, 4>& pi, SweepSpec& spec) {
  static constexpr std::array<std::pair<int, int>, 6> kAnchorChoices = {
      {{1, 2}, {0, 2}, {1, 3}, {0, 3}, {0, 1}, {2, 3}}};
  for (const auto& [s, t] : kAnchorChoices) {
    std::array<int, 2> rest{};
    int r = 0;
    for (int p = 0; p < 4; ++p) {
      if (p != s && p != t) rest[static_cast<std::size_t>(r++)] = p;
    }
    const auto region = [&](int p) {
      if (p < s) return Region::Before;
      if (p < t) return Region::Between;
      return Region::After;
    };
    const Region ru = region(rest[0]), rw = region(rest[1]);
    const Gap gu = gap_of(pi[static_cast<std::size_t>(rest[0])], pi[static_cast<std::size_t>(s)], pi[static_cast<std::size_t>(t)]);
    const Gap gw = gap_of(pi[static_cast<std::size_t>(rest[1])], pi[static_cast<std::size_t>(s)], pi[static_cast<std::size_t>(t)]);
    if (ru != rw && gu != gw) {
      spec = SweepSpec{pi[static_cast<std::size_t>(s)] < pi[static_cast<std::size_t>(t)], ru, rw, gu, gw};
      return true;
    }
  }
  return false;
}

u128 occ4(const std::array<int, 4>& pi, const std::vector<int>& v);

// occ(2413) + occ(3412) (descending anchors) or occ(2143) + occ(3142)
// (ascending): both free slots between the anchor values, one on each
// side in position.
u128 sweep4_both_between(const std::vector<int>& v, bool anchor_ascending) {
  return sweep4(v, SweepSpec{anchor_ascending, Region::Before, Region::After,
                             Gap::Between, Gap::Between});
}

u128 occ4(const std::array<int, 4>& pi, const std::vector<int>& v) {
  if (pi == std::array<int, 4>{2, 4, 1, 3}) {
    return sweep4_both_between(v, false) - occ4({3, 4, 1, 2}, v);
  }
  if (pi == std::array<int, 4>{3, 1, 4, 2}) {
    return sweep4_both_between(v, true) - occ4({2, 1, 4, 3}, v);
  }
  SweepSpec spec{};
  if (!find_anchors(pi, spec)) {
    throw CrossCheckError("no independent anchor pair for an order-4 pattern");
  }
  return sweep4(v, spec);
}

// ---- general k: pruned subsequence enumeration --------------------------

// prefix_rank[j] = rank of pi(j+1) within pi(1..j+1).
std::vector<int> prefix_ranks(const Permutation& pi) {
  const int k = pi.size();
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    int rank = 0;
    for (int i = 1; i <= j; ++i) {
      if (pi.at(i) <= pi.at(j)) ++rank;
    }
    out[static_cast<std::size_t>(j - 1)] = rank;
  }
  return out;
}

u128 occ_enumerate(const Permutation& pi, const Permutation& sigma) {
  const int k = pi.size();
  const int n = sigma.size();
  const std::vector<int> need = prefix_ranks(pi);
  std::vector<int> chosen;  // values, kept sorted
  chosen.reserve(static_cast<std::size_t>(k));
  u128 total = 0;
  const auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == k) {
      ++total;
      return;
    }
    for (int p = from; p <= n - (k - depth - 1); ++p) {
      const int val = sigma.at(p);
      const auto it = std::lower_bound(chosen.begin(), chosen.end(), val);
      const int rank = static_cast<int>(it - chosen.begin()) + 1;
      if (rank == need[static_cast<std::size_t>(depth)]) {
        chosen.insert(it, val);
        self(self, depth + 1, p + 1);
        chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), val));
      }
    }
  };
  rec(rec, 0, 1);
  return total;
}

std::array<int, 4> as_array4(const Permutation& pi) {
  return {pi.at(1), pi.at(2), pi.at(3), pi.at(4)};
}

u128 occ_u128(const Permutation& pi, const Permutation& sigma) {
  const int k = pi.size();
  const int n = sigma.size();
  if (k > n) return 0;
  switch (k) {
    case 1:
      return static_cast<u128>(n);
    case 2:
      return occ2(pi.at(1) < pi.at(2), sigma.values());
    case 3: {
      const Counts3 c = occ3_all(sigma.values());
      switch (pattern_rank(pi)) {
        case 0: return c.c123;
        case 1: return c.c132;
        case 2: return c.c213;
        case 3: return c.c231;
        case 4: return c.c312;
        default: return c.c321;
      }
    }
    case 4:
      return occ4(as_array4(pi), sigma.values());
    default:
      if (n > 40) {
        throw ResourceBudgetError(
            "occ for patterns of order >= 5 is capped at |sigma| <= 40");
      }
      return occ_enumerate(pi, sigma);
  }
}

int window_pattern_rank(const int* w, int k) {
  // Lehmer rank from pairwise comparisons; k is small.
  std::size_t rank = 0;
  std::size_t fact = 1;
  for (int i = 2; i < k; ++i) fact *= static_cast<std::size_t>(i);
  for (int i = 0; i < k; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < k; ++j) {
      if (w[j] < w[i]) ++smaller_after;
    }
    rank += static_cast<std::size_t>(smaller_after) * fact;
    if (k - i - 1 > 0) fact /= static_cast<std::size_t>(k - i - 1);
  }
  return static_cast<int>(rank);
}

}  // namespace

BigInt occ(const Permutation& pi, const Permutation& sigma) {
  return bigint_from_u128(occ_u128(pi, sigma));
}

BigInt cocc(const Permutation& pi, const Permutation& sigma) {
  const int k = pi.size();
  const int n = sigma.size();
  if (k > n) return 0;
  const int target = static_cast<int>(pattern_rank(pi));
  long long count = 0;
  const int* v = sigma.values().data();
  for (int i = 0; i + k <= n; ++i) {
    if (window_pattern_rank(v + i, k) == target) ++count;
  }
  return BigInt(static_cast<long>(count));
}

Rational occ_tilde(const Permutation& pi, const Permutation& sigma) {
  if (pi.size() > sigma.size()) {
    throw InvalidInputError("occ_tilde requires |pi| <= |sigma|");
  }
  Rational r(occ(pi, sigma));
  r /= Rational(binomial(static_cast<unsigned long>(sigma.size()),
                         static_cast<unsigned long>(pi.size())));
  r.canonicalize();
  return r;
}

Rational cocc_tilde(const Permutation& pi, const Permutation& sigma) {
  if (pi.size() > sigma.size()) {
    throw InvalidInputError("cocc_tilde requires |pi| <= |sigma|");
  }
  Rational r(cocc(pi, sigma), BigInt(sigma.size()));
  r.canonicalize();
  return r;
}

PatternVector::PatternVector(int order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ < 1) throw InvalidInputError("pattern vector order must be >= 1");
  std::size_t fact = 1;
  for (int i = 2; i <= order_; ++i) fact *= static_cast<std::size_t>(i);
  if (entries_.size() != fact) {
    throw InvalidInputError("pattern vector needs exactly k! entries");
  }
  for (const Rational& e : entries_) {
    if (e < 0 || e > 1) {
      throw InvalidInputError("pattern vector entries must lie in [0,1]");
    }
  }
}

const Rational& PatternVector::at(const Permutation& pi) const {
  if (pi.size() != order_) {
    throw InvalidInputError("pattern order mismatch");
  }
  return entries_[pattern_rank(pi)];
}

std::vector<BigInt> occ_counts(int k, const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<BigInt> out;
  if (k == 3 && n >= 3) {
    const Counts3 c = occ3_all(sigma.values());
    for (u128 x : {c.c123, c.c132, c.c213, c.c231, c.c312, c.c321}) {
      out.push_back(bigint_from_u128(x));
    }
    return out;
  }
  for (const Permutation& pi : all_patterns(k)) {
    out.push_back(occ(pi, sigma));
  }
  return out;
}

std::vector<BigInt> cocc_counts(int k, const Permutation& sigma) {
  std::size_t fact = 1;
  for (int i = 2; i <= k; ++i) fact *= static_cast<std::size_t>(i);
  std::vector<long long> counts(fact, 0);
  const int n = sigma.size();
  const int* v = sigma.values().data();
  for (int i = 0; i + k <= n; ++i) {
    ++counts[static_cast<std::size_t>(window_pattern_rank(v + i, k))];
  }
  std::vector<BigInt> out;
  out.reserve(fact);
  for (long long c : counts) out.push_back(BigInt(static_cast<long>(c)));
  return out;
}

namespace {

PatternVector counts_to_profile(int k, std::vector<BigInt> counts, const BigInt& denom) {
  std::vector<Rational> entries;
  entries.reserve(counts.size());
  for (BigInt& c : counts) {
    Rational r(std::move(c), denom);
    r.canonicalize();
    entries.push_back(std::move(r));
  }
  return PatternVector(k, std::move(entries));
}

}  // namespace

PatternVector occ_profile(int k, const Permutation& sigma) {
  if (k > sigma.size()) {
    throw InvalidInputError("occ_profile requires k <= |sigma|");
  }
  return counts_to_profile(k, occ_counts(k, sigma),
                           binomial(static_cast<unsigned long>(sigma.size()),
                                    static_cast<unsigned long>(k)));
}

PatternVector cocc_profile(int k, const Permutation& sigma) {
  if (k > sigma.size()) {
    throw InvalidInputError("cocc_profile requires k <= |sigma|");
  }
  return counts_to_profile(k, cocc_counts(k, sigma), BigInt(sigma.size()));
}

BigInt occ_in_uniform_inflation(const Permutation& pi, const Permutation& sigma2,
                                const Permutation& sigma1) {
  const int k = pi.size();
  if (k > 10) throw ResourceBudgetError("inflation decomposition is capped at k <= 10");
  BigInt total = 0;
  // Split pi into consecutive position blocks (one per used copy of
  // sigma1); a split contributes iff every block's values form an integer
  // interval. The block skeleton must then occur in sigma2 and each block
  // pattern in sigma1.
  const int cuts = k - 1;
  for (std::uint32_t mask = 0; mask < (1u << cuts); ++mask) {
    std::vector<std::pair<int, int>> blocks;  // [from, to] 1-based, inclusive
    int from = 1;
    for (int i = 1; i <= cuts; ++i) {
      if (mask & (1u << (i - 1))) {
        blocks.emplace_back(from, i);
        from = i + 1;
      }
    }
    blocks.emplace_back(from, k);

    bool intervals = true;
    std::vector<int> mins;
    mins.reserve(blocks.size());
    BigInt product = 1;
    for (const auto& [lo, hi] : blocks) {
      int mn = k + 1, mx = 0;
      for (int p = lo; p <= hi; ++p) {
        mn = std::min(mn, pi.at(p));
        mx = std::max(mx, pi.at(p));
      }
      if (mx - mn != hi - lo) {
        intervals = false;
        break;
      }
      mins.push_back(mn);
      std::vector<int> window(pi.values().begin() + (lo - 1), pi.values().begin() + hi);
      product *= occ(pattern_of(window), sigma1);
    }
    if (!intervals || product == 0) continue;
    total += occ(pattern_of(mins), sigma2) * product;
  }
  return total;
}

}  // namespace permpoly
