#pragma once

#include <vector>

#include "permpoly/permutation.hpp"
#include "permpoly/rational.hpp"

namespace permpoly {

/// Number of index subsequences of sigma order-isomorphic to pi.
/// Returns 0 when |pi| > |sigma|.
///
/// Cost by pattern order: k <= 2 and k == 3 run in O(n log n), k == 4 in
/// O(n^2 log n) (fine to n ~ 3*10^4; larger inputs are exact but slow),
/// k >= 5 falls back to pruned enumeration and is capped at n <= 40.
BigInt occ(const Permutation& pi, const Permutation& sigma);

/// Number of windows sigma(i..i+k-1) whose pattern is pi. O(n k log k).
BigInt cocc(const Permutation& pi, const Permutation& sigma);

/// occ / C(n,k). Requires |pi| <= |sigma|.
Rational occ_tilde(const Permutation& pi, const Permutation& sigma);

/// cocc / n (the denominator is n, not n-k+1). Requires |pi| <= |sigma|.
Rational cocc_tilde(const Permutation& pi, const Permutation& sigma);

/// One exact rational per element of S_k, indexed by lexicographic rank.
class PatternVector {
public:
  PatternVector(int order, std::vector<Rational> entries);

  int order() const { return order_; }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& at(const Permutation& pi) const;

  bool operator==(const PatternVector&) const = default;

private:
  int order_;
  std::vector<Rational> entries_;
};

/// occ counts for every pattern of S_k in one call.
std::vector<BigInt> occ_counts(int k, const Permutation& sigma);

/// cocc counts for every pattern of S_k in a single sliding-window pass.
std::vector<BigInt> cocc_counts(int k, const Permutation& sigma);

/// (occ(pi, sigma) / C(n,k))_{pi in S_k}.
PatternVector occ_profile(int k, const Permutation& sigma);

/// (cocc(pi, sigma) / n)_{pi in S_k}.
PatternVector cocc_profile(int k, const Permutation& sigma);

/// occ of pi inside sigma2[sigma1, ..., sigma1] without building the
/// inflation, via the block decomposition of occurrences. Exact at any
/// size; used for large mixing experiments.
BigInt occ_in_uniform_inflation(const Permutation& pi, const Permutation& sigma2,
                                const Permutation& sigma1);

}  // namespace permpoly
