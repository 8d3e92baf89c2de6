#include "permpoly/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

namespace permpoly {

int DirectedMultigraph::add_vertex(std::string name) {
  if (vertex_index(name) >= 0) {
    throw InvalidInputError("duplicate vertex name: " + name);
  }
  vertex_names_.push_back(std::move(name));
  adjacency_ready_ = false;
  return vertex_count() - 1;
}

int DirectedMultigraph::add_edge(int src, int dst, std::string label) {
  if (src < 0 || src >= vertex_count() || dst < 0 || dst >= vertex_count()) {
    throw InvalidInputError("edge endpoint is not a declared vertex");
  }
  edges_.push_back(Edge{edge_count(), src, dst, std::move(label)});
  adjacency_ready_ = false;
  return edge_count() - 1;
}

int DirectedMultigraph::vertex_index(std::string_view name) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertex_names_[static_cast<std::size_t>(v)] == name) return v;
  }
  return -1;
}

void DirectedMultigraph::build_adjacency() const {
  out_.assign(static_cast<std::size_t>(vertex_count()), {});
  in_.assign(static_cast<std::size_t>(vertex_count()), {});
  for (const Edge& e : edges_) {
    out_[static_cast<std::size_t>(e.src)].push_back(e.id);
    in_[static_cast<std::size_t>(e.dst)].push_back(e.id);
  }
  const auto by_head = [&](int a, int b) {
    const Edge& ea = edges_[static_cast<std::size_t>(a)];
    const Edge& eb = edges_[static_cast<std::size_t>(b)];
    return std::pair(ea.dst, ea.id) < std::pair(eb.dst, eb.id);
  };
  for (auto& lst : out_) std::sort(lst.begin(), lst.end(), by_head);
  for (auto& lst : in_) std::sort(lst.begin(), lst.end());
  adjacency_ready_ = true;
}

const std::vector<int>& DirectedMultigraph::out_edges(int v) const {
  if (!adjacency_ready_) build_adjacency();
  return out_[static_cast<std::size_t>(v)];
}

const std::vector<int>& DirectedMultigraph::in_edges(int v) const {
  if (!adjacency_ready_) build_adjacency();
  return in_[static_cast<std::size_t>(v)];
}

bool is_walk(const DirectedMultigraph& g, const Walk& w) {
  if (w.edge_ids.empty()) return false;
  for (std::size_t i = 0; i < w.edge_ids.size(); ++i) {
    const int e = w.edge_ids[i];
    if (e < 0 || e >= g.edge_count()) return false;
    if (i > 0 && g.edge(w.edge_ids[i - 1]).dst != g.edge(e).src) return false;
  }
  return true;
}

bool is_cycle(const DirectedMultigraph& g, const Walk& w) {
  return is_walk(g, w) &&
         g.edge(w.edge_ids.back()).dst == g.edge(w.edge_ids.front()).src;
}

bool is_simple_cycle(const DirectedMultigraph& g, const Walk& w) {
  if (!is_cycle(g, w)) return false;
  std::set<int> seen;
  for (int e : w.edge_ids) {
    if (!seen.insert(g.edge(e).src).second) return false;
  }
  return true;
}

Cycle canonical_cycle(const DirectedMultigraph& g, const Cycle& c) {
  if (!is_cycle(g, c)) throw InvalidInputError("not a cycle of the host graph");
  const std::size_t len = c.edge_ids.size();
  const auto rotated = [&](std::size_t r) {
    Cycle out;
    out.edge_ids.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      out.edge_ids.push_back(c.edge_ids[(r + i) % len]);
    }
    return out;
  };
  std::size_t best = 0;
  auto best_key = std::pair(g.edge(c.edge_ids[0]).src, c.edge_ids[0]);
  for (std::size_t r = 1; r < len; ++r) {
    const auto key = std::pair(g.edge(c.edge_ids[r]).src, c.edge_ids[r]);
    if (key < best_key) {
      best = r;
      best_key = key;
    } else if (key == best_key && rotated(r).edge_ids < rotated(best).edge_ids) {
      best = r;
    }
  }
  return rotated(best);
}

namespace {

// Iterative Tarjan restricted to an allowed vertex/edge mask. Components
// are returned sorted by smallest member.
struct SccScratch {
  std::vector<int> comp;  // vertex -> component id, -1 if not visited
  int count = 0;
};

SccScratch tarjan(const DirectedMultigraph& g, const std::vector<char>& vertex_ok,
                  const std::vector<char>& edge_ok) {
  const int n = g.vertex_count();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  SccScratch out;
  out.comp.assign(static_cast<std::size_t>(n), -1);
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t pos;
  };
  std::vector<Frame> frames;

  for (int root = 0; root < n; ++root) {
    if (!vertex_ok[static_cast<std::size_t>(root)] || index[static_cast<std::size_t>(root)] != -1) continue;
    frames.push_back({root, 0});
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& outs = g.out_edges(f.v);
      bool descended = false;
      while (f.pos < outs.size()) {
        const int e = outs[f.pos++];
        if (!edge_ok[static_cast<std::size_t>(e)]) continue;
        const int w = g.edge(e).dst;
        if (!vertex_ok[static_cast<std::size_t>(w)]) continue;
        if (index[static_cast<std::size_t>(w)] == -1) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
        }
      }
      if (descended) continue;
      const int v = f.v;
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().v;
        low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
      }
      if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          out.comp[static_cast<std::size_t>(w)] = out.count;
          if (w == v) break;
        }
        ++out.count;
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> components_sorted(const DirectedMultigraph& g,
                                                const SccScratch& scc) {
  std::vector<std::vector<int>> comps(static_cast<std::size_t>(scc.count));
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (scc.comp[static_cast<std::size_t>(v)] >= 0) {
      comps[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(v)])].push_back(v);
    }
  }
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const DirectedMultigraph& g) {
  const std::vector<char> all_v(static_cast<std::size_t>(g.vertex_count()), 1);
  const std::vector<char> all_e(static_cast<std::size_t>(g.edge_count()), 1);
  return components_sorted(g, tarjan(g, all_v, all_e));
}

namespace {

FullSubgraph full_from_comp(const DirectedMultigraph& g, const SccScratch& scc,
                            const std::vector<char>& edge_ok) {
  FullSubgraph h;
  std::set<int> verts;
  for (const Edge& e : g.edges()) {
    if (!edge_ok[static_cast<std::size_t>(e.id)]) continue;
    const int cs = scc.comp[static_cast<std::size_t>(e.src)];
    if (cs >= 0 && cs == scc.comp[static_cast<std::size_t>(e.dst)]) {
      h.edge_ids.push_back(e.id);
      verts.insert(e.src);
      verts.insert(e.dst);
    }
  }
  h.vertex_ids.assign(verts.begin(), verts.end());
  return h;
}

}  // namespace

FullSubgraph largest_full_subgraph(const DirectedMultigraph& g) {
  const std::vector<char> all_v(static_cast<std::size_t>(g.vertex_count()), 1);
  const std::vector<char> all_e(static_cast<std::size_t>(g.edge_count()), 1);
  return full_from_comp(g, tarjan(g, all_v, all_e), all_e);
}

FullSubgraph largest_full_subgraph_within(const DirectedMultigraph& g,
                                          const std::vector<int>& edge_ids) {
  std::vector<char> edge_ok(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<char> vertex_ok(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count()) throw InvalidInputError("unknown edge id");
    edge_ok[static_cast<std::size_t>(e)] = 1;
    vertex_ok[static_cast<std::size_t>(g.edge(e).src)] = 1;
    vertex_ok[static_cast<std::size_t>(g.edge(e).dst)] = 1;
  }
  return full_from_comp(g, tarjan(g, vertex_ok, edge_ok), edge_ok);
}

bool is_full_edge_set(const DirectedMultigraph& g, const std::vector<int>& edge_ids) {
  std::vector<int> sorted = edge_ids;
  std::sort(sorted.begin(), sorted.end());
  return largest_full_subgraph_within(g, sorted).edge_ids == sorted;
}

int weak_component_count(const DirectedMultigraph& g, const FullSubgraph& h) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int e : h.edge_ids) {
    const int a = find(g.edge(e).src);
    const int b = find(g.edge(e).dst);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  std::set<int> roots;
  for (int v : h.vertex_ids) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

namespace {

// Johnson's circuit enumeration on out-edges, so parallel edges yield
// distinct cycles. Cycles come out rooted at their smallest vertex.
class JohnsonEnumerator {
public:
  JohnsonEnumerator(const DirectedMultigraph& g,
                    const std::function<bool(const Cycle&)>& visit)
      : g_(g),
        visit_(visit),
        blocked_(static_cast<std::size_t>(g.vertex_count()), 0),
        block_lists_(static_cast<std::size_t>(g.vertex_count())),
        in_scc_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  void run() {
    const int n = g_.vertex_count();
    std::vector<char> vertex_ok(static_cast<std::size_t>(n), 1);
    std::vector<char> edge_ok(static_cast<std::size_t>(g_.edge_count()), 1);
    for (const Edge& e : g_.edges()) {
      if (e.src == e.dst) edge_ok[static_cast<std::size_t>(e.id)] = 0;  // loops handled separately
    }
    for (int s = 0; s < n && !stopped_; ++s) {
      // Length-1 cycles at s before the recursion.
      for (int e : g_.out_edges(s)) {
        if (g_.edge(e).src == g_.edge(e).dst) {
          if (!emit({{e}})) return;
        }
      }
      // Restrict to vertices >= s and the SCC of s in that subgraph.
      for (int v = 0; v < n; ++v) vertex_ok[static_cast<std::size_t>(v)] = v >= s;
      const SccScratch scc = tarjan(g_, vertex_ok, edge_ok);
      const int target = scc.comp[static_cast<std::size_t>(s)];
      int scc_size = 0;
      for (int v = s; v < n; ++v) {
        in_scc_[static_cast<std::size_t>(v)] = scc.comp[static_cast<std::size_t>(v)] == target;
        if (in_scc_[static_cast<std::size_t>(v)]) ++scc_size;
      }
      if (scc_size < 2) continue;
      for (int v = s; v < n; ++v) {
        blocked_[static_cast<std::size_t>(v)] = 0;
        block_lists_[static_cast<std::size_t>(v)].clear();
      }
      start_ = s;
      circuit(s);
    }
  }

private:
  bool emit(const Cycle& c) {
    if (!visit_(c)) stopped_ = true;
    return !stopped_;
  }

  void unblock(int v) {
    blocked_[static_cast<std::size_t>(v)] = 0;
    auto& lst = block_lists_[static_cast<std::size_t>(v)];
    const std::vector<int> pending(lst.begin(), lst.end());
    lst.clear();
    for (int w : pending) {
      if (blocked_[static_cast<std::size_t>(w)]) unblock(w);
    }
  }

  bool circuit(int v) {
    bool found = false;
    blocked_[static_cast<std::size_t>(v)] = 1;
    for (int e : g_.out_edges(v)) {
      if (stopped_) break;
      const Edge& edge = g_.edge(e);
      if (edge.src == edge.dst) continue;
      const int w = edge.dst;
      if (w < start_ || !in_scc_[static_cast<std::size_t>(w)]) continue;
      if (w == start_) {
        path_.push_back(e);
        if (!emit({path_})) {
          path_.pop_back();
          return found;
        }
        path_.pop_back();
        found = true;
      } else if (!blocked_[static_cast<std::size_t>(w)]) {
        path_.push_back(e);
        if (circuit(w)) found = true;
        path_.pop_back();
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int e : g_.out_edges(v)) {
        const Edge& edge = g_.edge(e);
        if (edge.src == edge.dst) continue;
        const int w = edge.dst;
        if (w < start_ || !in_scc_[static_cast<std::size_t>(w)]) continue;
        auto& lst = block_lists_[static_cast<std::size_t>(w)];
        if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
      }
    }
    return found;
  }

  const DirectedMultigraph& g_;
  const std::function<bool(const Cycle&)>& visit_;
  std::vector<char> blocked_;
  std::vector<std::vector<int>> block_lists_;
  std::vector<char> in_scc_;
  std::vector<int> path_;
  int start_ = 0;
  bool stopped_ = false;
};

}  // namespace

void enumerate_simple_cycles(const DirectedMultigraph& g,
                             const std::function<bool(const Cycle&)>& visit) {
  JohnsonEnumerator(g, visit).run();
}

std::vector<Cycle> simple_cycles(const DirectedMultigraph& g, std::size_t budget) {
  std::vector<Cycle> out;
  bool exceeded = false;
  enumerate_simple_cycles(g, [&](const Cycle& c) {
    if (out.size() >= budget) {
      exceeded = true;
      return false;
    }
    out.push_back(c);
    return true;
  });
  if (exceeded) {
    throw ResourceBudgetError("simple-cycle budget exceeded", out.size());
  }
  return out;
}

Cycle eulerian_circuit(const DirectedMultigraph& g) {
  if (g.edge_count() == 0) {
    throw InvalidInputError("eulerian_circuit needs a non-empty graph");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.in_degree(v) != g.out_degree(v)) {
      throw NoEulerianCircuitError(
          "vertex " + g.vertex_name(v) + " has in-degree " +
              std::to_string(g.in_degree(v)) + " but out-degree " +
              std::to_string(g.out_degree(v)),
          g.vertex_name(v));
    }
  }
  // All edges must sit in one weakly connected block.
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    const int a = find(e.src), b = find(e.dst);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  int start = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) > 0) {
      if (start == -1) start = v;
      if (find(v) != find(start)) {
        throw NoEulerianCircuitError(
            "edges are disconnected; vertex " + g.vertex_name(v) +
                " is unreachable from " + g.vertex_name(start),
            g.vertex_name(v));
      }
    }
  }

  std::vector<std::size_t> cursor(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> vstack{start};
  std::vector<int> estack;
  std::vector<int> circuit;
  circuit.reserve(static_cast<std::size_t>(g.edge_count()));
  while (!vstack.empty()) {
    const int v = vstack.back();
    const auto& outs = g.out_edges(v);
    if (cursor[static_cast<std::size_t>(v)] < outs.size()) {
      const int e = outs[cursor[static_cast<std::size_t>(v)]++];
      vstack.push_back(g.edge(e).dst);
      estack.push_back(e);
    } else {
      vstack.pop_back();
      if (!estack.empty()) {
        circuit.push_back(estack.back());
        estack.pop_back();
      }
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (static_cast<int>(circuit.size()) != g.edge_count()) {
    throw CrossCheckError("Hierholzer did not consume every edge");
  }
  return Cycle{std::move(circuit)};
}

std::string to_dot(const DirectedMultigraph& g) {
  std::string out = "digraph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  \"" + g.vertex_name(v) + "\";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  \"" + g.vertex_name(e.src) + "\" -> \"" + g.vertex_name(e.dst) + "\"";
    if (!e.label.empty()) {
      out += " [label=\"" + e.label + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const DirectedMultigraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_names();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    j["edges"].push_back({{"id", e.id},
                          {"src", g.vertex_name(e.src)},
                          {"dst", g.vertex_name(e.dst)},
                          {"label", e.label}});
  }
  return j.dump(2) + "\n";
}

DirectedMultigraph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw InvalidInputError("graph JSON needs 'vertices' and 'edges'");
  }
  DirectedMultigraph g;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw InvalidInputError("vertex names must be strings");
    g.add_vertex(v.get<std::string>());
  }
  std::vector<nlohmann::json> edges(j["edges"].begin(), j["edges"].end());
  std::vector<char> seen(edges.size(), 0);
  std::vector<nlohmann::json> by_id(edges.size());
  for (const auto& e : edges) {
    if (!e.contains("id") || !e["id"].is_number_integer()) {
      throw InvalidInputError("every edge needs an integer id");
    }
    const long long id = e["id"].get<long long>();
    if (id < 0 || id >= static_cast<long long>(edges.size()) || seen[static_cast<std::size_t>(id)]) {
      throw InvalidInputError("edge ids must be distinct and dense (0..E-1)");
    }
    seen[static_cast<std::size_t>(id)] = 1;
    by_id[static_cast<std::size_t>(id)] = e;
  }
  for (const auto& e : by_id) {
    const int src = g.vertex_index(e.value("src", std::string()));
    const int dst = g.vertex_index(e.value("dst", std::string()));
    if (src < 0 || dst < 0) {
      throw InvalidInputError("edge endpoint is not a declared vertex");
    }
    g.add_edge(src, dst, e.value("label", std::string()));
  }
  return g;
}

}  // namespace permpoly
