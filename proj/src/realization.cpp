#include "permpoly/realization.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "permpoly/config.hpp"

namespace permpoly {

namespace {

// Re-rank the values to small integers; order (and therefore every
// window pattern) is preserved. Keeps midpoint denominators bounded on
// long walks.
void renormalize(std::vector<Rational>& values, std::set<Rational>& used) {
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<Rational> ranked(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranked[order[r]] = Rational(static_cast<long>(r) + 1);
  }
  values = std::move(ranked);
  used.clear();
  used.insert(values.begin(), values.end());
}

constexpr std::size_t kRenormalizeEvery = 1024;

}  // namespace

RealizationTrace realize_label_walk(const std::vector<Permutation>& labels) {
  if (labels.empty()) {
    throw InvalidInputError("cannot realize an empty walk");
  }
  const int k = labels.front().size();
  if (k < 2) {
    throw InvalidInputError("walk labels must have order >= 2");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].size() != k) {
      throw InvalidInputError("walk labels must all have the same order");
    }
    if (i > 0) {
      const auto& prev = labels[i - 1].values();
      const auto& cur = labels[i].values();
      const std::vector<int> tail(prev.begin() + 1, prev.end());
      const std::vector<int> head(cur.begin(), cur.end() - 1);
      if (pattern_of(tail) != pattern_of(head)) {
        throw InvalidInputError("walk is not head-to-tail consistent at step " +
                                std::to_string(i));
      }
    }
  }

  RealizationTrace trace;
  trace.labels = labels;
  trace.k = k;

  // Seed with the source vertex pattern, then append one value per edge:
  // the new value's rank among the last k values must equal label(k).
  std::vector<Rational>& values = trace.values;
  {
    const auto& first = labels.front().values();
    const std::vector<int> head(first.begin(), first.end() - 1);
    for (int v : pattern_of(head).values()) {
      values.emplace_back(static_cast<long>(v));
    }
  }
  std::set<Rational> used(values.begin(), values.end());
  Rational global_min = *used.begin();
  Rational global_max = *used.rbegin();
  std::size_t since_renormalize = 0;

  for (const Permutation& label : labels) {
    std::vector<Rational> window(values.end() - (k - 1), values.end());
    std::sort(window.begin(), window.end());
    const int rank = label.at(k);
    Rational next;
    if (rank == 1) {
      next = global_min - 1;
    } else if (rank == k) {
      next = global_max + 1;
    } else {
      const Rational& lo = window[static_cast<std::size_t>(rank) - 2];
      const Rational& hi = window[static_cast<std::size_t>(rank) - 1];
      next = (lo + hi) / 2;
      while (used.contains(next)) {
        next = (lo + next) / 2;
      }
    }
    next.canonicalize();
    values.push_back(next);
    used.insert(next);
    global_min = std::min(global_min, next);
    global_max = std::max(global_max, next);
    if (++since_renormalize == kRenormalizeEvery) {
      renormalize(values, used);
      global_min = *used.begin();
      global_max = *used.rbegin();
      since_renormalize = 0;
    }
  }

  trace.permutation = pattern_of(std::span<const Rational>(values));
  return trace;
}

RealizationTrace realize_walk_trace(const DirectedMultigraph& ov, const Walk& w, int k) {
  if (!is_walk(ov, w)) {
    throw InvalidInputError("not a walk of the given overlap graph");
  }
  std::vector<Permutation> labels;
  labels.reserve(w.edge_ids.size());
  for (int e : w.edge_ids) {
    labels.push_back(edge_pattern(ov, e));
    if (labels.back().size() != k) {
      throw InvalidInputError("edge labels do not have order k");
    }
  }
  return realize_label_walk(labels);
}

Permutation realize_walk(const DirectedMultigraph& ov, const Walk& w, int k) {
  return realize_walk_trace(ov, w, k).permutation;
}

Permutation superpermutation(int k, int k_limit) {
  const DirectedMultigraph ov = overlap_graph(k, k_limit);
  const Cycle circuit = eulerian_circuit(ov);
  return realize_walk(ov, circuit, k);
}

Permutation cycle_sequence(const DirectedMultigraph& ov, const Cycle& c, int m, int k) {
  if (m < 1) {
    throw InvalidInputError("cycle_sequence needs m >= 1");
  }
  if (!is_cycle(ov, c)) {
    throw InvalidInputError("cycle_sequence requires a cycle of the overlap graph");
  }
  Walk repeated;
  repeated.edge_ids.reserve(c.edge_ids.size() * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    repeated.edge_ids.insert(repeated.edge_ids.end(), c.edge_ids.begin(),
                             c.edge_ids.end());
  }
  return realize_walk(ov, repeated, k);
}

namespace {

constexpr long long kMaxConstructedSize = 50'000'000;

void check_constructed_size(long long size) {
  if (size > kMaxConstructedSize) {
    throw ResourceBudgetError("constructed permutation would have " +
                              std::to_string(size) + " entries");
  }
}

}  // namespace

Permutation convex_mix(const Permutation& sigma1, const Permutation& sigma2,
                       int s, int t) {
  if (s < 1 || t < 1) {
    throw InvalidInputError("convex_mix needs positive integer weights");
  }
  const long long n1 = sigma1.size(), n2 = sigma2.size();
  const long long copies1 = static_cast<long long>(s) * n2;
  const long long copies2 = static_cast<long long>(t) * n1;
  const long long total = copies1 * n1 + copies2 * n2;
  check_constructed_size(total);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(total));
  int shift = 0;
  for (long long i = 0; i < copies1; ++i) {
    for (int v : sigma1.values()) out.push_back(v + shift);
    shift += sigma1.size();
  }
  for (long long i = 0; i < copies2; ++i) {
    for (int v : sigma2.values()) out.push_back(v + shift);
    shift += sigma2.size();
  }
  return Permutation(std::move(out));
}

Permutation mixing_inflation(const Permutation& sigma1, const Permutation& sigma2) {
  check_constructed_size(static_cast<long long>(sigma1.size()) * sigma2.size());
  const std::vector<Permutation> parts(static_cast<std::size_t>(sigma2.size()), sigma1);
  return inflate(sigma2, parts);
}

TargetRealization target_sequence(const DirectedMultigraph& ov, int k,
                                  const RationalVector& point, long long min_size) {
  if (min_size < 1) {
    throw InvalidInputError("target_sequence needs min_size >= 1");
  }
  MembershipResult member = contains(ov, point);
  if (!member.inside) {
    throw InvalidInputError("target point is not in the polytope: " +
                            member.violation);
  }
  for (const Edge& e : ov.edges()) {
    if (static_cast<std::size_t>(e.id) != pattern_rank(parse_permutation(e.label))) {
      throw InvalidInputError("target_sequence requires the overlap graph of order k");
    }
  }
  // Deterministic block order.
  std::sort(member.certificate.begin(), member.certificate.end(),
            [](const auto& a, const auto& b) { return a.first.edge_ids < b.first.edge_ids; });

  // Scale L makes every repetition count integral: with weights mu_i on
  // cycles of length L_i, block i is repeated mu_i * m * L / L_i times.
  BigInt common(1);
  for (const auto& [cycle, weight] : member.certificate) {
    Rational per_step = weight / Rational(static_cast<long>(cycle.edge_ids.size()));
    per_step.canonicalize();
    BigInt den = per_step.get_den();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
  }
  const long blocks = static_cast<long>(member.certificate.size());
  if (!common.fits_slong_p() || common.get_si() > kMaxConstructedSize) {
    throw ResourceBudgetError("certificate denominators are too large to realize");
  }
  const long long L = common.get_si();
  const long long junction = blocks * (k - 1);
  long long m = (min_size - junction + L - 1) / L;
  if (m < 1) m = 1;
  check_constructed_size(m * L + junction);

  std::vector<Permutation> realized;
  std::vector<long long> reps;
  for (const auto& [cycle, weight] : member.certificate) {
    Rational count = weight * Rational(static_cast<long>(m)) * Rational(common) /
                     Rational(static_cast<long>(cycle.edge_ids.size()));
    count.canonicalize();
    if (count.get_den() != 1) {
      throw CrossCheckError("repetition count is not integral");
    }
    const long long r = count.get_num().get_si();
    reps.push_back(r);
    realized.push_back(cycle_sequence(ov, cycle, static_cast<int>(r), k));
  }
  TargetRealization out;
  out.permutation = direct_sum(realized);
  out.target = point;
  out.scale = static_cast<int>(m);

  const long size = out.permutation.size();
  const Rational size_q(size);

  // Interior window counts per edge: sum over blocks of reps * multiplicity.
  std::vector<Rational> interior(static_cast<std::size_t>(ov.edge_count()), Rational(0));
  for (std::size_t b = 0; b < member.certificate.size(); ++b) {
    for (int e : member.certificate[b].first.edge_ids) {
      interior[static_cast<std::size_t>(e)] += Rational(static_cast<long>(reps[b]));
    }
  }

  const std::vector<BigInt> counts = cocc_counts(k, out.permutation);
  out.achieved.coords.assign(static_cast<std::size_t>(ov.edge_count()), Rational(0));
  out.deviation = 0;
  out.bound = Rational((blocks - 1) * (k - 1), size);
  out.bound.canonicalize();
  Rational residual(0);
  for (int e = 0; e < ov.edge_count(); ++e) {
    Rational a(counts[static_cast<std::size_t>(e)], BigInt(size));
    a.canonicalize();
    out.achieved.coords[static_cast<std::size_t>(e)] = a;
    Rational dev = abs(a - point.coords[static_cast<std::size_t>(e)]);
    dev.canonicalize();
    out.deviation = std::max(out.deviation, dev);
    Rational res = abs(interior[static_cast<std::size_t>(e)] / size_q -
                       point.coords[static_cast<std::size_t>(e)]);
    residual = std::max(residual, res);
  }
  out.bound += residual;
  out.bound.canonicalize();
  if (out.deviation > out.bound) {
    throw CrossCheckError("realized deviation exceeds the reported bound");
  }
  return out;
}

std::string target_report_json(const DirectedMultigraph& ov,
                               const TargetRealization& r) {
  nlohmann::json j;
  j["target"] = nlohmann::json::parse(vector_to_json(ov, r.target))["coords"];
  j["achieved"] = nlohmann::json::parse(vector_to_json(ov, r.achieved))["coords"];
  j["bound"] = rational_to_string(r.bound);
  j["deviation"] = rational_to_string(r.deviation);
  j["size"] = r.permutation.size();
  return j.dump(2) + "\n";
}

}  // namespace permpoly
