#include "permpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace permpoly {

RationalVector cycle_vector(const DirectedMultigraph& g, const Cycle& c) {
  if (!is_cycle(g, c)) {
    throw InvalidInputError("cycle_vector requires a cycle of the host graph");
  }
  RationalVector v;
  v.coords.assign(static_cast<std::size_t>(g.edge_count()), Rational(0));
  const Rational len(static_cast<long>(c.edge_ids.size()));
  for (int e : c.edge_ids) {
    v.coords[static_cast<std::size_t>(e)] += 1;
  }
  for (Rational& x : v.coords) {
    x /= len;
    x.canonicalize();
  }
  return v;
}

int affine_dimension(std::span<const RationalVector> points) {
  if (points.empty()) return -1;
  const std::size_t m = points[0].coords.size();
  for (const auto& p : points) {
    if (p.coords.size() != m) {
      throw InvalidInputError("points are indexed by different edge sets");
    }
  }
  // Incremental exact Gaussian elimination on p - p0.
  std::vector<std::vector<Rational>> basis;      // reduced rows
  std::vector<std::size_t> pivot;                // leading column per row
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> vec(m);
    for (std::size_t c = 0; c < m; ++c) {
      vec[c] = points[i].coords[c] - points[0].coords[c];
    }
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (sgn(vec[pivot[r]]) != 0) {
        const Rational factor = vec[pivot[r]];
        for (std::size_t c = pivot[r]; c < m; ++c) {
          vec[c] -= factor * basis[r][c];
        }
      }
    }
    std::size_t lead = m;
    for (std::size_t c = 0; c < m; ++c) {
      if (sgn(vec[c]) != 0) {
        lead = c;
        break;
      }
    }
    if (lead == m) continue;
    const Rational inv = vec[lead];
    for (std::size_t c = lead; c < m; ++c) {
      vec[c] /= inv;
      vec[c].canonicalize();
    }
    basis.push_back(std::move(vec));
    pivot.push_back(lead);
    if (basis.size() == m) break;  // cannot grow further
  }
  return static_cast<int>(basis.size());
}

int polytope_dimension(const DirectedMultigraph& g) {
  const FullSubgraph h = largest_full_subgraph(g);
  if (h.edge_ids.empty()) return -1;
  return static_cast<int>(h.edge_ids.size()) -
         static_cast<int>(h.vertex_ids.size()) + weak_component_count(g, h) - 1;
}

CyclePolytope polytope_of(const DirectedMultigraph& g, std::size_t cycle_budget) {
  const std::vector<Cycle> cycles = simple_cycles(g, cycle_budget);
  CyclePolytope p;
  std::set<std::vector<Rational>> seen;
  for (const Cycle& c : cycles) {
    RationalVector v = cycle_vector(g, c);
    if (seen.insert(v.coords).second) {
      p.vertices.push_back(std::move(v));
    }
  }
  p.dim = polytope_dimension(g);
  const int rank = affine_dimension(p.vertices);
  if (rank != p.dim) {
    throw CrossCheckError("polytope dimension formula gives " +
                          std::to_string(p.dim) + " but the vertex set has affine rank " +
                          std::to_string(rank));
  }
  return p;
}

namespace {

std::string edge_display(const DirectedMultigraph& g, int e) {
  const std::string& label = g.edge(e).label;
  return label.empty() ? std::to_string(e) : label;
}

}  // namespace

MembershipResult contains(const DirectedMultigraph& g, const RationalVector& v) {
  if (static_cast<int>(v.coords.size()) != g.edge_count()) {
    throw InvalidInputError("vector is not indexed by the graph's edges");
  }
  MembershipResult res;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (sgn(v.coords[static_cast<std::size_t>(e)]) < 0) {
      res.violation = "negative coordinate at edge " + edge_display(g, e);
      return res;
    }
  }
  Rational total(0);
  for (const Rational& x : v.coords) total += x;
  if (total != 1) {
    res.violation = "coordinates sum to " + rational_to_string(total) + ", expected 1";
    return res;
  }
  const FullSubgraph h = largest_full_subgraph(g);
  std::vector<char> in_full(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : h.edge_ids) in_full[static_cast<std::size_t>(e)] = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (sgn(v.coords[static_cast<std::size_t>(e)]) > 0 && !in_full[static_cast<std::size_t>(e)]) {
      res.violation = "support includes edge " + edge_display(g, e) +
                      ", which lies on no cycle";
      return res;
    }
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    Rational inflow(0), outflow(0);
    for (int e : g.in_edges(u)) inflow += v.coords[static_cast<std::size_t>(e)];
    for (int e : g.out_edges(u)) outflow += v.coords[static_cast<std::size_t>(e)];
    if (inflow != outflow) {
      res.violation = "flow imbalance at vertex " + g.vertex_name(u) + " (in " +
                      rational_to_string(inflow) + ", out " +
                      rational_to_string(outflow) + ")";
      return res;
    }
  }

  // Certificate: peel simple cycles off the circulation. Each round zeroes
  // at least one support edge, so this terminates within |E| rounds.
  std::vector<Rational> residual = v.coords;
  const auto support_out = [&](int vertex) -> int {
    for (int e : g.out_edges(vertex)) {
      if (sgn(residual[static_cast<std::size_t>(e)]) > 0) return e;
    }
    return -1;
  };
  while (true) {
    int first = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (sgn(residual[static_cast<std::size_t>(e)]) > 0) {
        first = e;
        break;
      }
    }
    if (first == -1) break;
    std::vector<int> path_edges;
    std::vector<int> path_vertices{g.edge(first).src};
    std::map<int, std::size_t> seen_at{{g.edge(first).src, 0}};
    int current = g.edge(first).src;
    std::size_t cycle_start = 0;
    while (true) {
      const int e = support_out(current);
      if (e < 0) {
        throw CrossCheckError("balanced circulation ran out of support edges");
      }
      path_edges.push_back(e);
      current = g.edge(e).dst;
      const auto it = seen_at.find(current);
      if (it != seen_at.end()) {
        cycle_start = it->second;
        break;
      }
      seen_at.emplace(current, path_edges.size());
      path_vertices.push_back(current);
    }
    Cycle cycle{std::vector<int>(path_edges.begin() + static_cast<std::ptrdiff_t>(cycle_start),
                                 path_edges.end())};
    Rational peel = residual[static_cast<std::size_t>(cycle.edge_ids.front())];
    for (int e : cycle.edge_ids) {
      peel = std::min(peel, residual[static_cast<std::size_t>(e)]);
    }
    for (int e : cycle.edge_ids) {
      residual[static_cast<std::size_t>(e)] -= peel;
      residual[static_cast<std::size_t>(e)].canonicalize();
    }
    Rational weight = peel * Rational(static_cast<long>(cycle.edge_ids.size()));
    weight.canonicalize();
    res.certificate.emplace_back(canonical_cycle(g, cycle), std::move(weight));
  }
  Rational weight_sum(0);
  for (const auto& [cyc, w] : res.certificate) weight_sum += w;
  if (weight_sum != 1) {
    throw CrossCheckError("certificate weights sum to " + rational_to_string(weight_sum));
  }
  res.inside = true;
  return res;
}

std::vector<FullSubgraph> full_subgraphs(const DirectedMultigraph& g, int budget_edges) {
  const int m = g.edge_count();
  if (m > budget_edges || m > 30) {
    throw ResourceBudgetError("exhaustive full-subgraph enumeration is capped at " +
                              std::to_string(std::min(budget_edges, 30)) + " edges");
  }
  std::vector<FullSubgraph> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> edges;
    for (int e = 0; e < m; ++e) {
      if (mask & (1u << e)) edges.push_back(e);
    }
    FullSubgraph h = largest_full_subgraph_within(g, edges);
    if (h.edge_ids == edges) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const FullSubgraph& a, const FullSubgraph& b) {
    return std::pair(a.edge_ids.size(), a.edge_ids) <
           std::pair(b.edge_ids.size(), b.edge_ids);
  });
  return out;
}

std::vector<FullSubgraph> sample_full_subgraphs(const DirectedMultigraph& g,
                                                int count, std::uint64_t seed) {
  // splitmix64; fixed regardless of platform.
  std::uint64_t state = seed;
  const auto next = [&state] {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  const int m = g.edge_count();
  std::set<std::vector<int>> seen;
  std::vector<FullSubgraph> out;
  long long attempts = 0;
  const long long max_attempts = 1000LL * std::max(count, 1);
  while (static_cast<int>(out.size()) < count && attempts < max_attempts) {
    ++attempts;
    std::vector<int> edges;
    for (int e = 0; e < m; ++e) {
      if (next() & 1) edges.push_back(e);
    }
    FullSubgraph h = largest_full_subgraph_within(g, edges);
    if (seen.insert(h.edge_ids).second) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const FullSubgraph& a, const FullSubgraph& b) {
    return std::pair(a.edge_ids.size(), a.edge_ids) <
           std::pair(b.edge_ids.size(), b.edge_ids);
  });
  return out;
}

namespace {

int subgraph_dimension(const DirectedMultigraph& g, const FullSubgraph& h) {
  if (h.edge_ids.empty()) return -1;
  return static_cast<int>(h.edge_ids.size()) -
         static_cast<int>(h.vertex_ids.size()) + weak_component_count(g, h) - 1;
}

}  // namespace

CyclePolytope face_of(const DirectedMultigraph& g, const FullSubgraph& h) {
  if (!is_full_edge_set(g, h.edge_ids)) {
    throw InvalidInputError("face_of requires a full subgraph");
  }
  CyclePolytope face;
  face.dim = subgraph_dimension(g, h);
  if (h.edge_ids.empty()) return face;

  // Enumerate the cycles of the induced sub-multigraph and embed their
  // vectors back into the host edge space.
  DirectedMultigraph sub;
  for (int v = 0; v < g.vertex_count(); ++v) sub.add_vertex(g.vertex_name(v));
  for (int e : h.edge_ids) {
    sub.add_edge(g.edge(e).src, g.edge(e).dst, g.edge(e).label);
  }
  std::set<std::vector<Rational>> seen;
  enumerate_simple_cycles(sub, [&](const Cycle& c) {
    RationalVector v;
    v.coords.assign(static_cast<std::size_t>(g.edge_count()), Rational(0));
    const Rational len(static_cast<long>(c.edge_ids.size()));
    for (int sub_e : c.edge_ids) {
      v.coords[static_cast<std::size_t>(h.edge_ids[static_cast<std::size_t>(sub_e)])] += 1;
    }
    for (Rational& x : v.coords) {
      x /= len;
      x.canonicalize();
    }
    if (seen.insert(v.coords).second) face.vertices.push_back(std::move(v));
    return true;
  });
  const int rank = affine_dimension(face.vertices);
  if (rank != face.dim) {
    throw CrossCheckError("face dimension formula gives " + std::to_string(face.dim) +
                          " but the face's vertex set has affine rank " +
                          std::to_string(rank));
  }
  return face;
}

FacePoset face_poset(const DirectedMultigraph& g, int budget_edges) {
  FacePoset poset;
  poset.nodes = full_subgraphs(g, budget_edges);
  if (poset.nodes.size() > 20000) {
    throw ResourceBudgetError("face poset too large to grade",
                              poset.nodes.size());
  }
  poset.dims.reserve(poset.nodes.size());
  for (const FullSubgraph& h : poset.nodes) {
    poset.dims.push_back(subgraph_dimension(g, h));
  }
  // Edge-set masks make the covering scan cheap.
  std::vector<std::uint64_t> masks;
  masks.reserve(poset.nodes.size());
  for (const FullSubgraph& h : poset.nodes) {
    std::uint64_t m = 0;
    for (int e : h.edge_ids) m |= (1ULL << e);
    masks.push_back(m);
  }
  // Nodes are sorted by size; Y covers X iff X < Y and no full Z between.
  for (std::size_t x = 0; x < poset.nodes.size(); ++x) {
    std::vector<std::size_t> covers_of_x;
    for (std::size_t y = 0; y < poset.nodes.size(); ++y) {
      if (masks[x] == masks[y] || (masks[x] & ~masks[y]) != 0) continue;
      bool dominated = false;
      for (std::size_t c : covers_of_x) {
        if ((masks[c] & ~masks[y]) == 0) {
          dominated = true;
          break;
        }
      }
      if (!dominated) covers_of_x.push_back(y);
    }
    for (std::size_t y : covers_of_x) {
      poset.covers.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  return poset;
}

namespace {

bool labels_usable(const DirectedMultigraph& g) {
  std::set<std::string> seen;
  for (const Edge& e : g.edges()) {
    if (e.label.empty() || !seen.insert(e.label).second) return false;
  }
  return g.edge_count() > 0;
}

std::string edge_key(const DirectedMultigraph& g, int e, bool use_labels) {
  return use_labels ? g.edge(e).label : std::to_string(e);
}

}  // namespace

std::string vertices_to_csv(const DirectedMultigraph& g, const CyclePolytope& p) {
  const bool use_labels = labels_usable(g);
  std::string out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e) out += ',';
    out += edge_key(g, e, use_labels);
  }
  out += '\n';
  for (const RationalVector& v : p.vertices) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (e) out += ',';
      out += rational_to_string(v.coords[static_cast<std::size_t>(e)]);
    }
    out += '\n';
  }
  return out;
}

std::string face_poset_to_json(const FacePoset& poset) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    j["nodes"].push_back(
        {{"edge_ids", poset.nodes[i].edge_ids}, {"dim", poset.dims[i]}});
  }
  j["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : poset.covers) {
    j["covers"].push_back({lo, hi});
  }
  return j.dump(2) + "\n";
}

RationalVector vector_from_json(const DirectedMultigraph& g, std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("bad vector JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_object()) {
    throw InvalidInputError("vector JSON needs a 'coords' object");
  }
  std::map<std::string, int> by_key;
  for (int e = 0; e < g.edge_count(); ++e) {
    by_key[std::to_string(e)] = e;
    if (!g.edge(e).label.empty()) by_key[g.edge(e).label] = e;
  }
  RationalVector v;
  v.coords.assign(static_cast<std::size_t>(g.edge_count()), Rational(0));
  for (const auto& [key, value] : j["coords"].items()) {
    const auto it = by_key.find(key);
    if (it == by_key.end()) {
      throw InvalidInputError("unknown edge '" + key + "' in vector JSON");
    }
    Rational r;
    if (value.is_string()) {
      r = rational_from_string(value.get<std::string>());
    } else if (value.is_number_integer()) {
      r = Rational(value.get<long>());
    } else {
      throw InvalidInputError("coordinates must be \"p/q\" strings or integers");
    }
    v.coords[static_cast<std::size_t>(it->second)] = std::move(r);
  }
  return v;
}

std::string vector_to_json(const DirectedMultigraph& g, const RationalVector& v) {
  if (static_cast<int>(v.coords.size()) != g.edge_count()) {
    throw InvalidInputError("vector is not indexed by the graph's edges");
  }
  const bool use_labels = labels_usable(g);
  nlohmann::json coords = nlohmann::json::object();
  for (int e = 0; e < g.edge_count(); ++e) {
    coords[edge_key(g, e, use_labels)] =
        rational_to_string(v.coords[static_cast<std::size_t>(e)]);
  }
  nlohmann::json j;
  j["coords"] = coords;
  return j.dump(2) + "\n";
}

}  // namespace permpoly
