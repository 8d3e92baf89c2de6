#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permpoly/multigraph.hpp"
#include "permpoly/rational.hpp"

namespace permpoly {

/// An exact rational vector indexed by the edge set of a host graph.
struct RationalVector {
  std::vector<Rational> coords;  // coords[e] for edge id e

  bool operator==(const RationalVector&) const = default;
};

/// (e_C)_e = (occurrences of e in C) / |C|; coordinates sum to 1.
RationalVector cycle_vector(const DirectedMultigraph& g, const Cycle& c);

/// conv{ e_C : C simple cycle of g }, with its affine dimension.
/// dim == -1 means the empty polytope (acyclic or empty host).
struct CyclePolytope {
  std::vector<RationalVector> vertices;
  int dim = -1;
};

/// Enumerates the simple cycles of g (within `cycle_budget`), collects the
/// distinct cycle vectors and computes the dimension twice: by the
/// largest-full-subgraph formula and as the exact affine rank of the
/// vertex set. The two must agree, otherwise CrossCheckError.
CyclePolytope polytope_of(const DirectedMultigraph& g,
                          std::size_t cycle_budget = kDefaultCycleBudget);

/// |E(H)| - |V(H)| + c(H) - 1 for H the largest full subgraph; -1 when H
/// is empty.
int polytope_dimension(const DirectedMultigraph& g);

/// Exact rank over Q of {p - p0}; -1 for the empty set, 0 for one point.
/// All points must have equal coordinate counts.
int affine_dimension(std::span<const RationalVector> points);

/// Membership decision with a constructive certificate.
struct MembershipResult {
  bool inside = false;
  /// On success: simple cycles and positive weights with
  /// sum(weight) == 1 and sum(weight * e_C) == v.
  std::vector<std::pair<Cycle, Rational>> certificate;
  /// On failure: a human-readable violated constraint.
  std::string violation;
};

/// v is in P(g) iff v >= 0, sums to 1, is balanced at every vertex and is
/// supported on the largest full subgraph. The certificate comes from
/// iterated cycle peeling of the circulation.
MembershipResult contains(const DirectedMultigraph& g, const RationalVector& v);

/// Every full subgraph of g, the empty one included, in a deterministic
/// order (by edge count, then lexicographic edge sets). Throws
/// ResourceBudgetError when |E| > budget_edges.
std::vector<FullSubgraph> full_subgraphs(const DirectedMultigraph& g,
                                         int budget_edges = kDefaultFaceEdgeBudget);

/// Deterministic sample of distinct full subgraphs for graphs beyond the
/// exhaustive budget: random edge subsets closed under the fullness
/// operator.
std::vector<FullSubgraph> sample_full_subgraphs(const DirectedMultigraph& g,
                                                int count, std::uint64_t seed = 0);

/// The face P(g)_H = {x in P(g) : x_e = 0 outside H}, realized as the
/// polytope of H embedded in the host edge space. Requires h full.
CyclePolytope face_of(const DirectedMultigraph& g, const FullSubgraph& h);

/// Nodes = full subgraphs ordered by edge-set inclusion, graded by face
/// dimension; `covers` lists (lower, upper) covering pairs.
struct FacePoset {
  std::vector<FullSubgraph> nodes;
  std::vector<int> dims;
  std::vector<std::pair<int, int>> covers;
};

FacePoset face_poset(const DirectedMultigraph& g,
                     int budget_edges = kDefaultFaceEdgeBudget);

/// CSV of polytope vertices: header = edge labels when all labels are
/// nonempty and distinct, edge ids otherwise; rationals as "p/q".
std::string vertices_to_csv(const DirectedMultigraph& g, const CyclePolytope& p);

/// {"nodes":[{"edge_ids":[...],"dim":d},...],"covers":[[lo,hi],...]}
std::string face_poset_to_json(const FacePoset& poset);

/// {"coords": {"<edge label or id>": "p/q", ...}}; missing edges read as
/// zero, unknown keys are errors.
RationalVector vector_from_json(const DirectedMultigraph& g, std::string_view text);
std::string vector_to_json(const DirectedMultigraph& g, const RationalVector& v);

}  // namespace permpoly
