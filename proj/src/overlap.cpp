#include "permpoly/overlap.hpp"

#include <vector>

#include "permpoly/config.hpp"

namespace permpoly {

DirectedMultigraph overlap_graph(int k, int k_limit) {
  if (k < 2 || k > k_limit) {
    throw InvalidInputError("overlap_graph requires 2 <= k <= " +
                            std::to_string(k_limit));
  }
  DirectedMultigraph g;
  for (const Permutation& v : all_patterns(k - 1)) {
    g.add_vertex(format_permutation(v));
  }
  for (const Permutation& pi : all_patterns(k)) {
    const auto& vals = pi.values();
    const std::vector<int> head(vals.begin(), vals.end() - 1);
    const std::vector<int> tail(vals.begin() + 1, vals.end());
    const int src = static_cast<int>(pattern_rank(pattern_of(head)));
    const int dst = static_cast<int>(pattern_rank(pattern_of(tail)));
    g.add_edge(src, dst, format_permutation(pi));
  }
  return g;
}

Walk walk_of_permutation(const Permutation& sigma, int k) {
  if (k < 1 || sigma.size() < k) {
    throw InvalidInputError("walk_of_permutation requires |sigma| >= k >= 1");
  }
  Walk w;
  w.edge_ids.reserve(static_cast<std::size_t>(sigma.size() - k + 1));
  const auto& vals = sigma.values();
  for (int i = 0; i + k <= sigma.size(); ++i) {
    const std::vector<int> window(vals.begin() + i, vals.begin() + i + k);
    w.edge_ids.push_back(static_cast<int>(pattern_rank(pattern_of(window))));
  }
  return w;
}

Permutation edge_pattern(const DirectedMultigraph& ov, int edge_id) {
  if (edge_id < 0 || edge_id >= ov.edge_count()) {
    throw InvalidInputError("unknown edge id");
  }
  return parse_permutation(ov.edge(edge_id).label);
}

}  // namespace permpoly
