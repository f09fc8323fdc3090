// twisted: command-line front end for the twisted hypercube library.
//
//   twisted gen 4 edgelist
//   twisted nbr 0010 "3,1,1*"
//   twisted cut 5 pk 00000 3
//   twisted verify thm-k13 4..6
//   twisted audit 6 --shape k13 --mode sampled --budget 1000
//   twisted search 5 p3 --mode substructure --budget 4
//
// Results go to stdout, diagnostics to stderr. Exit status is 0 when every
// check passes, 1 when one fails, 2 on bad usage.

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twisted/claims.hpp"
#include "twisted/oracles.hpp"
#include "twisted/structures.hpp"
#include "twisted/topology.hpp"

using namespace twisted;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::string format;
  std::string shape;
  std::string mode;
  std::optional<int> budget;
  std::uint64_t seed = 0;
  std::optional<int> limit;
  int jobs = 0;

  std::string vertex;
  std::string chain;
  std::optional<int> order;
  std::string claim;
  std::string range;
  std::string json_path;
};

Vertex parse_vertex(const std::string& text, int n) {
  Vertex v;
  try {
    v = Vertex::from_string(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (n != 0 && v.size() != n) throw UsageError("vertex " + text + " does not have " + std::to_string(n) + " bits");
  return v;
}

std::string join(std::span<const Vertex> vs, const char* sep) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : sep) + v.to_string();
  return out;
}

// "5", "4..6", or "4,5,7".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  try {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      std::stringstream in(text);
      for (std::string part; std::getline(in, part, ',');) out.push_back(std::stoi(part));
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad n range: " + text);
  }
  if (out.empty()) throw UsageError("empty n range: " + text);
  for (int n : out) {
    if (n < 1 || n > Vertex::kMaxBits) throw UsageError("n out of range: " + std::to_string(n));
  }
  return out;
}

int materialize_limit(const Options& o) { return o.limit.value_or(MaterializedTopology::kDefaultLimit); }

int cmd_gen(const Options& o) {
  if (!o.format.empty() && o.format != "edgelist" && o.format != "dot") throw UsageError("format must be edgelist or dot");
  MaterializedTopology graph = [&] {
    try {
      return MaterializedTopology::build_recursive(o.n, materialize_limit(o));
    } catch (const std::length_error& e) {
      throw UsageError(e.what());
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }();
  if (o.format == "dot") {
    write_dot(std::cout, graph);
  } else {
    write_edge_list(std::cout, graph);
  }
  return kPass;
}

int cmd_nbr(const Options& o) {
  const auto u = parse_vertex(o.vertex, 0);
  try {
    std::cout << resolve_chain(u, o.chain).to_string() << '\n';
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  return kPass;
}

CutFamily build_cut(const Options& o, const Vertex& u) {
  std::string shape = o.shape;
  for (auto& c : shape) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  try {
    if (shape == "k13") return star_cut_k13(u);
    if (shape == "k14") return star_cut_k14(u);
    if (shape == "p2") return path_cut_p2(u);
    if (shape == "pk") {
      if (!o.order) throw UsageError("pk needs a path order k");
      return path_cut_pk(u, *o.order);
    }
    if (shape.size() > 1 && shape[0] == 'p') {
      const int k = Shape::parse(shape).parameter();
      return k == 2 ? path_cut_p2(u) : path_cut_pk(u, k);
    }
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("shape must be one of k13, k14, p2, pk");
}

int cmd_cut(const Options& o) {
  const auto u = o.vertex.empty() ? Vertex(o.n) : parse_vertex(o.vertex, o.n);
  const auto family = build_cut(o, u);
  const ImplicitTopology formula(o.n);
  const bool ok = family.well_formed(formula) && family.pairwise_disjoint();
  std::optional<ConnectivityResult> split;
  if (o.n <= materialize_limit(o)) {
    const auto graph = MaterializedTopology::build_recursive(o.n, materialize_limit(o));
    split = components_after_removal(graph, family.vertex_union());
  }
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["u"] = u.to_string();
    j["shape"] = family.shape.name();
    j["provenance"] = family.provenance;
    j["size"] = family.size();
    j["members"] = nlohmann::ordered_json::array();
    for (const auto& m : family.members) j["members"].push_back(m.to_string());
    j["well_formed"] = ok;
    if (split) {
      j["components"] = split->component_count;
      j["component_sizes"] = split->component_sizes;
      j["smallest_component"] = nlohmann::ordered_json::array();
      for (const auto& v : split->smallest_component) j["smallest_component"].push_back(v.to_string());
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << family.to_text();
    if (split) {
      std::cout << "components=" << split->component_count << " sizes=";
      for (std::size_t i = 0; i < split->component_sizes.size(); ++i) {
        std::cout << (i ? "," : "") << split->component_sizes[i];
      }
      std::cout << " smallest=" << join(split->smallest_component, ",") << '\n';
    }
  }
  if (!ok) std::cerr << "family is not a set of disjoint embedded members\n";
  return ok && (!split || split->disconnected()) ? kPass : kFail;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> ids;
  if (o.claim == "all") {
    for (const auto& c : claim_registry()) ids.push_back(c.id);
  } else {
    try {
      find_claim(o.claim);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    ids.push_back(o.claim);
  }
  VerifyOptions options;
  options.seed = o.seed;
  if (o.limit) options.search_limit = *o.limit;
  if (o.budget) options.samples = static_cast<std::size_t>(*o.budget);
  const auto ns = parse_range(o.range);

  std::vector<VerificationReport> reports;
  for (const auto& id : ids) {
    for (int n : ns) {
      auto cell = verify_claim(id, n, options);
      for (auto& r : cell) {
        if (o.format != "json") std::cout << r.to_line() << std::endl;
        reports.push_back(std::move(r));
      }
    }
  }
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const auto& r : reports) all.push_back(r.to_json());
  if (o.format == "json") std::cout << all.dump(2) << '\n';
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) throw std::runtime_error("cannot write " + o.json_path);
    out << all.dump(2) << '\n';
  }
  for (const auto& r : reports) {
    if (r.status() == "fail") {
      std::cerr << "first failing: claim=" << r.claim << " n=" << r.n << '\n';
      return kFail;
    }
  }
  return kPass;
}

int emit(const std::vector<VerificationReport>& reports, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& r : reports) all.push_back(r.to_json());
    std::cout << all.dump(2) << '\n';
  } else {
    for (const auto& r : reports) std::cout << r.to_line() << '\n';
  }
  for (const auto& r : reports) {
    if (r.status() == "fail") return kFail;
  }
  return kPass;
}

int cmd_audit(const Options& o) {
  if (o.n < 1) throw UsageError("n must be positive");
  const std::string mode = o.mode.empty() ? (o.n <= 5 ? "exhaustive" : "sampled") : o.mode;
  if (mode != "exhaustive" && mode != "sampled") throw UsageError("audit mode must be exhaustive or sampled");
  const std::size_t samples = static_cast<std::size_t>(o.budget.value_or(1000));

  std::vector<Shape> shapes;
  if (!o.shape.empty()) {
    try {
      shapes.push_back(Shape::parse(o.shape));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    if (o.n >= 3) shapes.push_back(Shape::star(3));
    if (o.n >= 4) shapes.push_back(Shape::star(4));
    for (int k = 3; k <= o.n; ++k) shapes.push_back(Shape::path(k));
  }

  std::vector<VerificationReport> reports;
  std::optional<MaterializedTopology> graph;
  if (mode == "exhaustive") {
    try {
      graph = MaterializedTopology::build_recursive(o.n, o.limit.value_or(8));
    } catch (const std::length_error& e) {
      throw UsageError(std::string(e.what()) + "; use --mode sampled");
    }
  }
  const ImplicitTopology formula(o.n);
  for (const auto& shape : shapes) {
    if (graph) {
      reports.push_back(neighborhood_bound_audit(*graph, shape));
    } else {
      reports.push_back(neighborhood_bound_audit(formula, shape, samples, o.seed));
    }
  }
  if (o.n >= 3) reports.push_back(book_lemma_check(o.n, samples, o.seed));
  return emit(reports, o.format);
}

int cmd_search(const Options& o) {
  if (o.n < 1 || o.n > 8) throw UsageError("search supports 1 <= n <= 8");
  Shape shape = Shape::path(1);
  CutMode mode = CutMode::Structure;
  try {
    shape = Shape::parse(o.shape);
    if (!o.mode.empty()) mode = parse_mode(o.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int budget = o.budget.value_or(o.n + 1);
  const auto graph = MaterializedTopology::build_recursive(o.n);
  const auto outcome = structure_connectivity_exact(graph, shape, mode, budget, Execution::Parallel);

  VerificationReport r;
  r.claim = "search";
  r.n = o.n;
  r.shape = shape.name();
  r.mode = std::string(to_string(mode));
  r.value = outcome.value ? std::optional<long long>(*outcome.value) : std::nullopt;
  r.pass = outcome.value.has_value();
  r.explored = outcome.explored;
  if (outcome.witness) {
    std::string w;
    for (const auto& m : outcome.witness->members) w += (w.empty() ? "" : "; ") + m.to_string();
    r.witness = w;
  }
  r.add_detail("budget", std::to_string(budget));
  r.add_detail("universe", std::to_string(outcome.universe_size));
  if (outcome.witness_overlaps) {
    r.add_detail("witness_overlaps", "true");
    r.add_detail("disjoint_witness", *outcome.disjoint_witness_exists ? "true" : "false");
  }
  if (!outcome.value) std::cerr << "no family of at most " << budget << " members disconnects H_" << o.n << '\n';
  return emit({r}, o.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted hypercube construction, structure cuts and connectivity oracles"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format");
    cmd->add_option("--seed", o.seed, "Seed for sampled checks");
    cmd->add_option("--jobs", o.jobs, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  };

  auto* gen = app.add_subcommand("gen", "Print H_n as an edge list or DOT graph");
  gen->add_option("n,--n", o.n, "Dimension")->required();
  gen->add_option("fmt", o.format, "edgelist or dot");
  gen->add_option("--limit", o.limit, "Largest n that may be materialized");
  add_common(gen);

  auto* nbr = app.add_subcommand("nbr", "Resolve a superscript chain such as 3,1,1* from u");
  nbr->add_option("u", o.vertex, "Start vertex bit string")->required();
  nbr->add_option("chain", o.chain, "Comma-separated chain")->required();

  auto* cut = app.add_subcommand("cut", "Print a constructed cut family and the resulting components");
  cut->add_option("n,--n", o.n, "Dimension")->required();
  cut->add_option("shape,--shape", o.shape, "k13, k14, p2 or pk")->required();
  cut->add_option("u", o.vertex, "Vertex to isolate (default all zeros)");
  cut->add_option("k", o.order, "Path order for pk");
  cut->add_option("--limit", o.limit, "Largest n for the component check");
  add_common(cut);

  auto* verify = app.add_subcommand("verify", "Check claims against their closed forms");
  verify->add_option("claim", o.claim, "Claim id or all")->required();
  verify->add_option("range,--n", o.range, "n, lo..hi, or a comma list")->required();
  verify->add_option("--limit", o.limit, "Largest n for exhaustive family searches");
  verify->add_option("--budget", o.budget, "Sample count for formula-only checks");
  verify->add_option("--json", o.json_path, "Also write the reports as JSON to this file");
  add_common(verify);

  auto* audit = app.add_subcommand("audit", "Neighborhood-intersection bounds and the book lemma");
  audit->add_option("n,--n", o.n, "Dimension")->required();
  audit->add_option("--shape", o.shape, "Single shape to audit (default: K1,3, K1,4, P3..Pn)");
  audit->add_option("--mode", o.mode, "exhaustive or sampled");
  audit->add_option("--budget", o.budget, "Number of sampled instances");
  audit->add_option("--limit", o.limit, "Largest n for exhaustive audits");
  add_common(audit);

  auto* search = app.add_subcommand("search", "Exact minimum (sub)structure cut by exhaustive search");
  search->add_option("n,--n", o.n, "Dimension")->required();
  search->add_option("shape,--shape", o.shape, "Shape such as k13 or p3")->required();
  search->add_option("--mode", o.mode, "structure or substructure");
  search->add_option("--budget", o.budget, "Largest family size tried");
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  if (o.jobs > 0) omp_set_num_threads(o.jobs);

  try {
    if (*gen) return cmd_gen(o);
    if (*nbr) return cmd_nbr(o);
    if (*cut) return cmd_cut(o);
    if (*verify) return cmd_verify(o);
    if (*audit) return cmd_audit(o);
    if (*search) return cmd_search(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
