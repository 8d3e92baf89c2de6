#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/rational.hpp"

namespace permpoly {

/// A permutation of {1..n} in one-line notation.
class Permutation {
public:
  /// Validates that `values` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  int size() const { return static_cast<int>(values_.size()); }

  /// sigma(i) with 1-based i.
  int at(int i) const { return values_[static_cast<std::size_t>(i) - 1]; }

  const std::vector<int>& values() const { return values_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> values_;
};

/// The unique permutation with the same relative order as `window`.
/// Entries must be pairwise distinct.
Permutation pattern_of(std::span<const int> window);
Permutation pattern_of(std::span<const Rational> window);

/// Block-diagonal concatenation; later parts' values are shifted up.
Permutation direct_sum(std::span<const Permutation> parts);
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// sigma[parts[0], ..., parts[n-1]]: each entry of sigma becomes a value
/// interval order-isomorphic to the corresponding part.
Permutation inflate(const Permutation& sigma, std::span<const Permutation> parts);

/// All of S_k in lexicographic order.
std::vector<Permutation> all_patterns(int k);

/// Lexicographic rank within S_k (0-based Lehmer rank).
std::size_t pattern_rank(const Permutation& p);

/// Inverse of pattern_rank.
Permutation pattern_unrank(int k, std::size_t rank);

/// Text form: contiguous digits for n <= 9 ("72638145"), comma-separated
/// otherwise ("10,2,...").
std::string format_permutation(const Permutation& p);

/// Accepts both text forms; rejects non-bijections.
Permutation parse_permutation(std::string_view text);

}  // namespace permpoly
