#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/config.hpp"

namespace permpoly {

struct Edge {
  int id;   // dense, 0..E-1
  int src;  // vertex index
  int dst;  // vertex index
  std::string label;  // optional opaque tag
};

/// A directed multigraph with stable vertex names and uniquely numbered
/// edges. Loops and parallel edges are allowed. Immutable once built and
/// safely shareable across threads.
class DirectedMultigraph {
public:
  DirectedMultigraph() = default;

  int add_vertex(std::string name);
  /// Returns the new edge id. Endpoints must already exist.
  int add_edge(int src, int dst, std::string label = {});

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  /// Index of a named vertex, or -1.
  int vertex_index(std::string_view name) const;

  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Out-edge ids of v, sorted by (dst, id); the order every enumeration
  /// algorithm in this library follows.
  const std::vector<int>& out_edges(int v) const;
  const std::vector<int>& in_edges(int v) const;
  int out_degree(int v) const { return static_cast<int>(out_edges(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_edges(v).size()); }

private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  mutable std::vector<std::vector<int>> out_;   // lazily sorted adjacency
  mutable std::vector<std::vector<int>> in_;
  mutable bool adjacency_ready_ = false;
  void build_adjacency() const;
};

/// An edge-id sequence with head-to-tail consistency in a host graph.
struct Walk {
  std::vector<int> edge_ids;

  int length() const { return static_cast<int>(edge_ids.size()); }
  bool operator==(const Walk&) const = default;
};

using Cycle = Walk;  // additionally closes up

bool is_walk(const DirectedMultigraph& g, const Walk& w);
bool is_cycle(const DirectedMultigraph& g, const Walk& w);
/// No vertex visited twice; a loop edge is a simple cycle of length 1.
bool is_simple_cycle(const DirectedMultigraph& g, const Walk& w);

/// Rotates a cycle so its smallest vertex index leads.
Cycle canonical_cycle(const DirectedMultigraph& g, const Cycle& c);

/// Maximal strongly connected components via Tarjan's single-pass
/// algorithm. Components are sorted by smallest vertex index, vertices
/// within a component ascending.
std::vector<std::vector<int>> strongly_connected_components(const DirectedMultigraph& g);

/// An edge subset in which every edge lies on a cycle of the subset,
/// together with the endpoints of the retained edges. Isolated vertices
/// are dropped.
struct FullSubgraph {
  std::vector<int> edge_ids;    // ascending
  std::vector<int> vertex_ids;  // ascending, endpoints of retained edges

  bool operator==(const FullSubgraph&) const = default;
};

/// The unique maximal full subgraph: edges whose endpoints share an SCC.
FullSubgraph largest_full_subgraph(const DirectedMultigraph& g);

/// Same operator applied inside the sub-multigraph induced by `edge_ids`.
FullSubgraph largest_full_subgraph_within(const DirectedMultigraph& g,
                                          const std::vector<int>& edge_ids);

/// Is the edge subset full (the fixed point of the operator above)?
bool is_full_edge_set(const DirectedMultigraph& g, const std::vector<int>& edge_ids);

/// Number of weakly connected components spanned by the subgraph's edges.
int weak_component_count(const DirectedMultigraph& g, const FullSubgraph& h);

/// Streams every simple cycle exactly once, in canonical form, in a
/// deterministic order (Johnson's algorithm on edges, so parallel edges
/// yield distinct cycles; loops come out as length-1 cycles). Return
/// false from the visitor to stop early.
void enumerate_simple_cycles(const DirectedMultigraph& g,
                             const std::function<bool(const Cycle&)>& visit);

/// Collects up to `budget` simple cycles; throws ResourceBudgetError when
/// the graph has more.
std::vector<Cycle> simple_cycles(const DirectedMultigraph& g,
                                 std::size_t budget = kDefaultCycleBudget);

/// A closed walk using every edge exactly once (Hierholzer), starting at
/// the smallest vertex carrying an edge. Deterministic. Throws
/// NoEulerianCircuitError naming a witness vertex when none exists.
Cycle eulerian_circuit(const DirectedMultigraph& g);

/// DOT export: one node per vertex, one arrow per edge (parallel edges
/// drawn separately), edge labels attached.
std::string to_dot(const DirectedMultigraph& g);

/// {"vertices": [...], "edges": [{"id", "src", "dst", "label"}]}
std::string to_json(const DirectedMultigraph& g);
DirectedMultigraph graph_from_json(std::string_view text);

}  // namespace permpoly
