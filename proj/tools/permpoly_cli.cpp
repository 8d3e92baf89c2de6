// Command-line front-end: overlap graphs, cycle polytopes, superpermutations
// and convergence experiments. All rational output is exact "p/q" text; the
// --approx flag adds a clearly marked non-authoritative decimal column.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permpoly/config.hpp"
#include "permpoly/multigraph.hpp"
#include "permpoly/overlap.hpp"
#include "permpoly/pattern_count.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/polytope.hpp"
#include "permpoly/rational.hpp"
#include "permpoly/realization.hpp"

namespace {

using namespace permpoly;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitCrossCheck = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<long long> parse_sizes(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss{text};
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw InvalidInputError("bad size list entry: '" + tok + "'");
    }
    if (out.back() < 1) {
      throw InvalidInputError("sizes must be positive");
    }
  }
  if (out.empty()) {
    throw InvalidInputError("need at least one size");
  }
  return out;
}

std::string approx(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", r.get_d());
  return buf;
}

DirectedMultigraph load_graph(int k, const std::string& graph_file) {
  if (!graph_file.empty()) {
    return graph_from_json(read_file(graph_file));
  }
  return overlap_graph(k);
}

// ---- graph ---------------------------------------------------------------

int cmd_graph(int k, const std::string& format) {
  const DirectedMultigraph g = overlap_graph(k);
  if (format == "dot") {
    std::cout << to_dot(g);
  } else if (format == "json") {
    std::cout << to_json(g);
  } else {
    throw InvalidInputError("graph supports --format dot or json");
  }
  return kExitOk;
}

// ---- polytope ------------------------------------------------------------

int cmd_polytope_vertices(const DirectedMultigraph& g, std::size_t cycle_budget,
                          const std::string& format) {
  const CyclePolytope p = polytope_of(g, cycle_budget);
  if (format == "csv" || format.empty()) {
    std::cout << vertices_to_csv(g, p);
  } else if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& v : p.vertices) {
      rows.push_back(nlohmann::json::parse(vector_to_json(g, v))["coords"]);
    }
    nlohmann::json j;
    j["dim"] = p.dim;
    j["vertices"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    throw InvalidInputError("vertices supports --format csv or json");
  }
  return kExitOk;
}

int cmd_polytope_faces(const DirectedMultigraph& g, int budget_edges, int sample,
                       std::uint64_t seed, const std::string& format) {
  if (sample > 0) {
    const auto subs = sample_full_subgraphs(g, sample, seed);
    nlohmann::json j = nlohmann::json::array();
    for (const auto& h : subs) {
      j.push_back({{"edge_ids", h.edge_ids}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  const FacePoset poset = face_poset(g, budget_edges);
  if (format == "json") {
    std::cout << face_poset_to_json(poset);
    return kExitOk;
  }
  // Text summary: rank counts by dimension.
  int max_dim = -1;
  for (int d : poset.dims) max_dim = std::max(max_dim, d);
  std::cout << "full subgraphs: " << poset.nodes.size() << "\n";
  for (int d = -1; d <= max_dim; ++d) {
    int count = 0;
    for (int x : poset.dims) {
      if (x == d) ++count;
    }
    std::cout << "dim " << d << ": " << count << "\n";
  }
  return kExitOk;
}

int cmd_polytope_contains(const DirectedMultigraph& g, const std::string& vector_file,
                          const std::string& format) {
  if (vector_file.empty()) {
    throw InvalidInputError("contains needs --vector FILE");
  }
  const RationalVector v = vector_from_json(g, read_file(vector_file));
  const MembershipResult res = contains(g, v);
  if (format == "json") {
    nlohmann::json j;
    j["inside"] = res.inside;
    if (res.inside) {
      nlohmann::json cert = nlohmann::json::array();
      for (const auto& [cycle, weight] : res.certificate) {
        std::vector<std::string> names;
        for (int e : cycle.edge_ids) {
          names.push_back(g.edge(e).label.empty() ? std::to_string(e)
                                                  : g.edge(e).label);
        }
        cert.push_back({{"weight", rational_to_string(weight)}, {"edges", names}});
      }
      j["certificate"] = cert;
    } else {
      j["violation"] = res.violation;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (res.inside) {
      std::cout << "inside\n";
      for (const auto& [cycle, weight] : res.certificate) {
        std::cout << rational_to_string(weight) << " *";
        for (int e : cycle.edge_ids) {
          std::cout << ' '
                    << (g.edge(e).label.empty() ? std::to_string(e) : g.edge(e).label);
        }
        std::cout << "\n";
      }
    } else {
      std::cout << "outside: " << res.violation << "\n";
    }
  }
  return kExitOk;
}

// ---- converge ------------------------------------------------------------

struct SequenceSpec {
  std::string type;            // "monotone", "permutation", "target"
  std::string direction;      // for monotone
  std::optional<Permutation> constant;
  std::optional<RationalVector> target;  // over Ov(k)
};

SequenceSpec parse_sequence_spec(const DirectedMultigraph& ov, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("bad sequence spec " + path + ": " + e.what());
  }
  SequenceSpec spec;
  spec.type = j.value("type", std::string());
  if (spec.type == "monotone") {
    spec.direction = j.value("direction", std::string("increasing"));
    if (spec.direction != "increasing" && spec.direction != "decreasing") {
      throw InvalidInputError("monotone direction must be increasing or decreasing");
    }
  } else if (spec.type == "permutation") {
    if (!j.contains("values")) {
      throw InvalidInputError("permutation spec needs 'values'");
    }
    spec.constant = parse_permutation(j["values"].get<std::string>());
  } else if (spec.type == "target") {
    spec.target = vector_from_json(ov, j.dump());
  } else {
    throw InvalidInputError("sequence spec type must be monotone, permutation or target");
  }
  return spec;
}

Permutation realize_spec(const DirectedMultigraph& ov, int k, const SequenceSpec& spec,
                         long long size, bool allow_target) {
  if (spec.type == "monotone") {
    const int n = static_cast<int>(std::max<long long>(size, k));
    return spec.direction == "increasing" ? Permutation::identity(n)
                                          : Permutation::decreasing(n);
  }
  if (spec.type == "permutation") {
    return *spec.constant;
  }
  if (!allow_target) {
    throw InvalidInputError(
        "classical-side sequence specs must be monotone or permutation");
  }
  return target_sequence(ov, k, *spec.target, size).permutation;
}

void print_table(const std::vector<std::vector<std::string>>& rows,
                 const std::string& format) {
  if (format == "csv") {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << row[i];
      }
      std::cout << "\n";
    }
    return;
  }
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t r = 1; r < rows.size(); ++r) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < rows[0].size(); ++i) obj[rows[0][i]] = rows[r][i];
      j.push_back(obj);
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) std::cout << "  ";
      std::cout << row[i] << std::string(width[i] - row[i].size(), ' ');
    }
    std::cout << "\n";
  }
}

int cmd_converge_target(int k, const std::string& target_file,
                        const std::vector<long long>& sizes,
                        const std::string& format, bool show_approx) {
  const DirectedMultigraph ov = overlap_graph(k);
  const RationalVector target = vector_from_json(ov, read_file(target_file));
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"size", "deviation", "bound"};
  if (show_approx) {
    header.push_back("deviation~");
    header.push_back("bound~");
  }
  rows.push_back(header);
  for (long long s : sizes) {
    const TargetRealization r = target_sequence(ov, k, target, s);
    std::vector<std::string> row{std::to_string(r.permutation.size()),
                                 rational_to_string(r.deviation),
                                 rational_to_string(r.bound)};
    if (show_approx) {
      row.push_back(approx(r.deviation));
      row.push_back(approx(r.bound));
    }
    rows.push_back(std::move(row));
  }
  print_table(rows, format);
  return kExitOk;
}

int cmd_converge_mix(int k, const std::string& classical_file,
                     const std::string& consecutive_file,
                     const std::vector<long long>& sizes,
                     const std::string& format, bool show_approx) {
  const DirectedMultigraph ov = overlap_graph(k);
  const SequenceSpec classical = parse_sequence_spec(ov, classical_file);
  const SequenceSpec consecutive = parse_sequence_spec(ov, consecutive_file);
  const std::vector<Permutation> patterns = all_patterns(k);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"size",     "occ_dev",  "occ_bound",
                                  "cocc_dev", "cocc_bound"};
  if (show_approx) {
    header.push_back("occ_dev~");
    header.push_back("cocc_dev~");
  }
  rows.push_back(header);
  for (long long s : sizes) {
    const Permutation sigma1 = realize_spec(ov, k, consecutive, s, true);
    const Permutation sigma2 = realize_spec(ov, k, classical, s, false);
    const Permutation sigma3 = mixing_inflation(sigma1, sigma2);
    const long n2 = sigma2.size();
    const long n3 = sigma3.size();

    // occ via the block decomposition of the inflation: exact at any size.
    const BigInt total3 = binomial(static_cast<unsigned long>(n3),
                                   static_cast<unsigned long>(k));
    Rational occ_dev(0);
    for (const Permutation& pi : patterns) {
      Rational t3(occ_in_uniform_inflation(pi, sigma2, sigma1), total3);
      t3.canonicalize();
      Rational dev = abs(t3 - occ_tilde(pi, sigma2));
      if (dev > occ_dev) occ_dev = dev;
    }
    Rational occ_bound(static_cast<long>(k) * (k - 1), 2 * n2);
    occ_bound.canonicalize();

    Rational cocc_dev(0);
    const PatternVector p3 = cocc_profile(k, sigma3);
    const PatternVector p1 = cocc_profile(k, sigma1);
    for (std::size_t i = 0; i < p3.entries().size(); ++i) {
      const Rational dev = abs(p3.entries()[i] - p1.entries()[i]);
      if (dev > cocc_dev) cocc_dev = dev;
    }
    Rational cocc_bound((n2 - 1) * k, n3);
    cocc_bound.canonicalize();

    std::vector<std::string> row{
        std::to_string(n3), rational_to_string(occ_dev),
        rational_to_string(occ_bound), rational_to_string(cocc_dev),
        rational_to_string(cocc_bound)};
    if (show_approx) {
      row.push_back(approx(occ_dev));
      row.push_back(approx(cocc_dev));
    }
    rows.push_back(std::move(row));
  }
  print_table(rows, format);
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"cycle polytopes of permutation overlap graphs"};
  app.require_subcommand(1);

  int k = 3;
  std::string format;
  std::string graph_file;
  std::string vector_file;
  std::string target_file;
  std::vector<std::string> mix_files;
  std::string sizes_text;
  int budget_edges = kDefaultFaceEdgeBudget;
  std::size_t cycle_budget = kDefaultCycleBudget;
  int sample = 0;
  std::uint64_t seed = 0;
  bool show_approx = false;

  auto* graph = app.add_subcommand("graph", "construct an overlap graph");
  graph->add_option("-k", k, "pattern order")->required();
  graph->add_option("--format", format, "dot or json");

  auto* polytope = app.add_subcommand("polytope", "cycle-polytope computations");
  polytope->add_option("-k", k, "pattern order (overlap graph host)");
  polytope->add_option("--graph", graph_file, "host graph JSON file");
  polytope->add_option("--format", format, "output format");
  polytope->add_option("--budget-edges", budget_edges, "face enumeration cap");
  polytope->add_option("--cycle-budget", cycle_budget, "simple-cycle cap");
  polytope->add_option("--vector", vector_file, "rational vector JSON (contains)");
  polytope->add_option("--sample", sample, "sample N full subgraphs instead");
  polytope->add_option("--seed", seed, "sampling seed");
  polytope->require_subcommand(1);
  auto* sub_vertices = polytope->add_subcommand("vertices", "list polytope vertices");
  auto* sub_dim = polytope->add_subcommand("dim", "print the dimension");
  auto* sub_faces = polytope->add_subcommand("faces", "face poset");
  auto* sub_contains = polytope->add_subcommand("contains", "membership + certificate");
  for (auto* sub : {sub_vertices, sub_dim, sub_faces, sub_contains}) {
    sub->fallthrough();
  }

  auto* superperm = app.add_subcommand("superperm", "consecutive superpermutation");
  superperm->add_option("-k", k, "pattern order")->required();

  auto* converge = app.add_subcommand("converge", "convergence experiments");
  converge->add_option("-k", k, "pattern order");
  converge->add_option("--target", target_file, "target vector JSON over Ov(k)");
  converge->add_option("--mix", mix_files,
                       "classical.json consecutive.json (inflation mixing)")
      ->expected(2);
  converge->add_option("--sizes", sizes_text, "comma-separated sizes")->required();
  converge->add_option("--format", format, "text, csv or json");
  converge->add_flag("--approx", show_approx, "add decimal columns (informational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (graph->parsed()) {
      return cmd_graph(k, format.empty() ? "json" : format);
    }
    if (polytope->parsed()) {
      const DirectedMultigraph g = load_graph(k, graph_file);
      if (sub_dim->parsed()) {
        std::cout << polytope_dimension(g) << "\n";
        return kExitOk;
      }
      if (sub_vertices->parsed()) {
        return cmd_polytope_vertices(g, cycle_budget, format);
      }
      if (sub_faces->parsed()) {
        return cmd_polytope_faces(g, budget_edges, sample, seed, format);
      }
      if (sub_contains->parsed()) {
        return cmd_polytope_contains(g, vector_file, format);
      }
    }
    if (superperm->parsed()) {
      std::cout << format_permutation(superpermutation(k)) << "\n";
      return kExitOk;
    }
    if (converge->parsed()) {
      const std::vector<long long> sizes = parse_sizes(sizes_text);
      if (!mix_files.empty()) {
        return cmd_converge_mix(k, mix_files[0], mix_files[1], sizes, format,
                                show_approx);
      }
      if (target_file.empty()) {
        throw InvalidInputError("converge needs --target FILE or --mix A B");
      }
      return cmd_converge_target(k, target_file, sizes, format, show_approx);
    }
  } catch (const ResourceBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const CrossCheckError& e) {
    std::cerr << "internal cross-check failure: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const NoEulerianCircuitError& e) {
    // Overlap graphs are always balanced; reaching this is a bug.
    std::cerr << "internal cross-check failure: " << e.what() << "\n";
    return kExitCrossCheck;
  }
  return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
