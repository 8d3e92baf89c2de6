#pragma once

#include <string>
#include <vector>

#include "permpoly/multigraph.hpp"
#include "permpoly/overlap.hpp"
#include "permpoly/pattern_count.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/polytope.hpp"

namespace permpoly {

/// What the greedy realizer produced: the walk's label sequence, the
/// rational insertion values and the resulting permutation
/// (|permutation| = walk length + k - 1).
struct RealizationTrace {
  std::vector<Permutation> labels;
  int k = 0;
  std::vector<Rational> values;
  Permutation permutation{std::vector<int>{1}};
};

/// A permutation of size |w| + k - 1 whose window patterns are exactly
/// the labels of w, built by greedy rational insertion.
Permutation realize_walk(const DirectedMultigraph& ov, const Walk& w, int k);
RealizationTrace realize_walk_trace(const DirectedMultigraph& ov, const Walk& w, int k);

/// Realizes an explicit label sequence (head-to-tail consistency of the
/// implied edges is validated).
RealizationTrace realize_label_walk(const std::vector<Permutation>& labels);

/// A permutation of size k! + k - 1 with every pattern of S_k occurring
/// exactly once consecutively, from an Eulerian circuit of Ov(k).
Permutation superpermutation(int k, int k_limit = k_max());

/// realize_walk of m concatenated copies of the cycle; every window
/// count is exactly m times the label multiplicity in c.
Permutation cycle_sequence(const DirectedMultigraph& ov, const Cycle& c, int m, int k);

/// Direct sum of s*|sigma2| copies of sigma1 followed by t*|sigma1|
/// copies of sigma2 (the rational-convexity blend).
Permutation convex_mix(const Permutation& sigma1, const Permutation& sigma2,
                       int s, int t);

/// inflate(sigma2, |sigma2| copies of sigma1): consecutive proportions
/// follow sigma1, classical proportions follow sigma2.
Permutation mixing_inflation(const Permutation& sigma1, const Permutation& sigma2);

/// A target_sequence construction report; all rationals exact.
struct TargetRealization {
  Permutation permutation{std::vector<int>{1}};
  RationalVector target;
  RationalVector achieved;     // cocc_tilde per edge of Ov(k)
  Rational bound;              // sound: max deviation <= bound
  Rational deviation;          // max_pi |achieved - target|
  int scale = 0;               // internal repetition scale actually used
};

/// Builds a permutation of size >= min_size whose consecutive-pattern
/// proportions approach `point` (a member of P(Ov(k))), by realizing the
/// membership certificate cycle by cycle and direct-summing the blocks.
/// Throws InvalidInputError (with the violated constraint) if the point
/// is not in the polytope.
TargetRealization target_sequence(const DirectedMultigraph& ov, int k,
                                  const RationalVector& point, long long min_size);

/// {"target": {...}, "achieved": {...}, "bound": "p/q", "size": n}
std::string target_report_json(const DirectedMultigraph& ov,
                               const TargetRealization& r);

}  // namespace permpoly
