#pragma once

#include "permpoly/multigraph.hpp"
#include "permpoly/permutation.hpp"

namespace permpoly {

/// The overlap graph Ov(k): one vertex per element of S_{k-1} (named by
/// its one-line text, indexed by lexicographic rank) and, for every pi in
/// S_k, one edge labeled pi (id = lexicographic rank of pi) from the
/// pattern of pi(1..k-1) to the pattern of pi(2..k).
///
/// Requires 2 <= k <= k_limit.
DirectedMultigraph overlap_graph(int k, int k_limit = k_max());

/// The walk of sigma in Ov(k): edge i is the edge labeled by the pattern
/// of the window sigma(i..i+k-1). Requires |sigma| >= k.
Walk walk_of_permutation(const Permutation& sigma, int k);

/// Edge label of an overlap-graph edge, decoded back to a permutation.
Permutation edge_pattern(const DirectedMultigraph& ov, int edge_id);

}  // namespace permpoly
