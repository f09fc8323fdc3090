#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "twisted/oracles.hpp"

namespace twisted {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Vertex random_vertex(int n, std::mt19937_64& rng) {
  Vertex v(n);
  for (int i = 1; i <= n; ++i) v.set(i, (rng() & 1U) != 0);
  return v;
}

StructureInstance random_star(const Topology& topology, int leaves, const Vertex& center, std::mt19937_64& rng) {
  std::vector<int> idx(static_cast<std::size_t>(topology.dimension()));
  for (int i = 0; i < topology.dimension(); ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<Vertex> chosen;
  for (int j = 0; j < leaves; ++j) chosen.push_back(topology.neighbor(center, idx[static_cast<std::size_t>(j)]));
  return StructureInstance::star(center, std::move(chosen));
}

StructureInstance random_path(const Topology& topology, int order, std::mt19937_64& rng) {
  const int n = topology.dimension();
  while (true) {
    std::vector<Vertex> seq{random_vertex(n, rng)};
    while (static_cast<int>(seq.size()) < order) {
      std::vector<Vertex> options;
      for (const auto& w : topology.neighbors(seq.back())) {
        if (std::find(seq.begin(), seq.end(), w) == seq.end()) options.push_back(w);
      }
      if (options.empty()) break;
      seq.push_back(options[rng() % options.size()]);
    }
    if (static_cast<int>(seq.size()) == order) return StructureInstance::path(std::move(seq));
  }
}

std::size_t count_in(std::span<const Vertex> items, const std::vector<Vertex>& sorted_set) {
  std::size_t c = 0;
  for (const auto& v : items) {
    if (std::binary_search(sorted_set.begin(), sorted_set.end(), v)) ++c;
  }
  return c;
}

struct BoundAuditor {
  const Topology& topology;
  const Shape& shape;
  VerificationReport& report;
  std::size_t max_vertex = 0;
  std::size_t max_edge = 0;
  std::size_t max_family_edge = 0;
  std::size_t violations = 0;
  std::size_t equality_cases = 0;

  void violation(const std::string& what) {
    if (violations++ == 0) report.witness = what;
  }

  void audit_instance(const StructureInstance& t) {
    const int k = shape.vertex_count();
    const auto members = t.vertex_set();
    const auto outside = topology.neighborhood(members);
    const std::size_t vertex_bound =
        shape.kind() == Shape::Kind::Star ? 2 : static_cast<std::size_t>((k + 1) / 2);
    for (const auto& u : outside) {
      const auto nu = topology.neighbors(u);
      const auto cu = count_in(nu, members);
      max_vertex = std::max(max_vertex, cu);
      if (cu > vertex_bound) violation(t.to_string() + " | vertex " + u.to_string());
      for (const auto& v : nu) {
        if (std::binary_search(members.begin(), members.end(), v)) continue;
        auto joint = topology.neighbors(v);
        joint.insert(joint.end(), nu.begin(), nu.end());
        std::sort(joint.begin(), joint.end());
        joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
        const auto ce = count_in(joint, members);
        max_edge = std::max(max_edge, ce);
        check_edge(t, u, v, ce);
      }
    }
  }

  void check_edge(const StructureInstance& t, const Vertex& u, const Vertex& v, std::size_t count) {
    const std::string where = t.to_string() + " | edge " + u.to_string() + " " + v.to_string();
    if (shape.kind() == Shape::Kind::Star) {
      if (shape.parameter() == 3 && count > 3) violation(where + " exceeds 3");
      if (count > 4) violation(where + " exceeds 4");
      if (count == 4) {
        ++equality_cases;
        const auto& x = t.center();
        if (topology.is_adjacent(u, x) || topology.is_adjacent(v, x)) violation(where + " center adjacent");
        if (u.bit(1) != v.bit(1) || u.bit(1) != x.bit(1)) violation(where + " not in one half");
      }
      return;
    }
    const int k = shape.parameter();
    if (k < 3) return;
    const auto bound = static_cast<std::size_t>(2 * (k / 3) + k % 3);
    if (count > bound || count > static_cast<std::size_t>(k - 1)) violation(where + " exceeds path bound");
  }

  // Union of ceil(n/2)-1 stars against every outside edge near it.
  void audit_star_family(std::span<const StructureInstance* const> family) {
    const int n = topology.dimension();
    std::vector<Vertex> members;
    for (const auto* s : family) {
      auto vs = s->vertices();
      members.insert(members.end(), vs.begin(), vs.end());
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const auto bound = static_cast<std::size_t>(2 * n - 3);
    for (const auto& u : topology.neighborhood(members)) {
      const auto nu = topology.neighbors(u);
      for (const auto& v : nu) {
        if (std::binary_search(members.begin(), members.end(), v)) continue;
        auto joint = topology.neighbors(v);
        joint.insert(joint.end(), nu.begin(), nu.end());
        std::sort(joint.begin(), joint.end());
        joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
        const auto ce = count_in(joint, members);
        max_family_edge = std::max(max_family_edge, ce);
        if (ce > bound) violation("star family | edge " + u.to_string() + " " + v.to_string() + " exceeds 2n-3");
      }
    }
  }
};

}  // namespace

VerificationReport neighborhood_bound_audit(const Topology& topology, const Shape& shape,
                                            std::optional<std::size_t> samples, std::uint64_t seed) {
  const auto start = Clock::now();
  const int n = topology.dimension();
  if (shape.vertex_count() > n + 1 || (shape.kind() == Shape::Kind::Path && shape.parameter() > n)) {
    throw std::domain_error("neighborhood_bound_audit: shape does not fit in H_n");
  }
  VerificationReport report;
  report.claim = "audit";
  report.n = n;
  report.shape = shape.name();
  report.mode = samples ? "sampled" : "exhaustive";

  BoundAuditor auditor{topology, shape, report};
  std::vector<StructureInstance> instances;
  std::mt19937_64 rng(seed);
  if (!samples) {
    const auto* materialized = dynamic_cast<const MaterializedTopology*>(&topology);
    if (materialized == nullptr) throw std::invalid_argument("exhaustive audit needs a materialized topology");
    instances = shape.kind() == Shape::Kind::Star ? enumerate_stars(*materialized, shape.parameter())
                                                  : enumerate_paths(*materialized, shape.parameter());
  } else {
    for (std::size_t s = 0; s < *samples; ++s) {
      instances.push_back(shape.kind() == Shape::Kind::Star
                              ? random_star(topology, shape.parameter(), random_vertex(n, rng), rng)
                              : random_path(topology, shape.parameter(), rng));
    }
  }
  for (const auto& t : instances) auditor.audit_instance(t);

  std::size_t families = 0;
  const int family_size = (n + 1) / 2 - 1;
  if (shape.kind() == Shape::Kind::Star && family_size >= 1) {
    std::vector<const StructureInstance*> family(static_cast<std::size_t>(family_size));
    if (!samples) {
      // Every combination of family_size distinct stars.
      std::vector<std::size_t> pick(family.size());
      for (std::size_t j = 0; j < pick.size(); ++j) pick[j] = j;
      const std::size_t total = instances.size();
      while (pick.size() <= total) {
        for (std::size_t j = 0; j < pick.size(); ++j) family[j] = &instances[pick[j]];
        auditor.audit_star_family(family);
        ++families;
        std::size_t j = pick.size();
        while (j > 0 && pick[j - 1] == total - pick.size() + j - 1) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (std::size_t t = j; t < pick.size(); ++t) pick[t] = pick[t - 1] + 1;
      }
    } else {
      // Stars clustered around a random edge so the bound is actually stressed.
      std::vector<StructureInstance> drawn;
      for (std::size_t s = 0; s < *samples; ++s) {
        const Vertex u = random_vertex(n, rng);
        const Vertex v = topology.neighbor(u, static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1);
        drawn.clear();
        for (int f = 0; f < family_size; ++f) {
          Vertex center = (rng() & 1U) != 0 ? u : v;
          const int hops = 2 + static_cast<int>(rng() % 2);
          for (int h = 0; h < hops; ++h) center = topology.neighbor(center, static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1);
          drawn.push_back(random_star(topology, shape.parameter(), center, rng));
        }
        for (std::size_t f = 0; f < drawn.size(); ++f) family[f] = &drawn[f];
        auditor.audit_star_family(family);
        ++families;
      }
    }
  }

  report.pass = auditor.violations == 0;
  report.explored = instances.size();
  report.add_detail("instances", std::to_string(instances.size()));
  report.add_detail("max_vertex", std::to_string(auditor.max_vertex));
  report.add_detail("max_edge", std::to_string(auditor.max_edge));
  if (shape.kind() == Shape::Kind::Star) {
    report.add_detail("equality_cases", std::to_string(auditor.equality_cases));
    report.add_detail("families", std::to_string(families));
    report.add_detail("max_family_edge", std::to_string(auditor.max_family_edge));
  }
  report.add_detail("violations", std::to_string(auditor.violations));
  report.elapsed_ms = millis_since(start);
  return report;
}

VerificationReport book_lemma_check(int n, std::size_t samples, std::uint64_t seed) {
  const auto start = Clock::now();
  if (n < 3 || n > Vertex::kMaxBits) throw std::domain_error("book_lemma_check: need 3 <= n <= 128");
  const ImplicitTopology topology(n);
  VerificationReport report;
  report.claim = "book-lemma";
  report.n = n;
  std::size_t violations = 0;

  auto common = [&](const Vertex& a, const Vertex& b) {
    auto na = topology.neighbors(a);
    auto nb = topology.neighbors(b);
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    std::vector<Vertex> out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
  };

  if (kappa(static_cast<std::uint64_t>(n - 1)) >= 2) {
    report.mode = "no-book";
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      const Vertex u = random_vertex(n, rng);
      const auto nbrs = topology.neighbors(u);
      const auto& un = nbrs[static_cast<std::size_t>(n - 1)];
      auto only_u = [&](const std::vector<Vertex>& c) { return c.size() == 1 && c.front() == u; };
      for (int i = 1; i <= n - 2; ++i) {
        if (!only_u(common(nbrs[static_cast<std::size_t>(i - 1)], un))) {
          if (violations++ == 0) report.witness = u.to_string() + " i=" + std::to_string(i);
        }
      }
      if (!only_u(common(nbrs[static_cast<std::size_t>(n - 2)], nbrs[0]))) {
        if (violations++ == 0) report.witness = u.to_string() + " i=n-1";
      }
    }
    report.explored = samples;
  } else {
    report.mode = "book";
    const Vertex u(n);
    const Vertex v = topology.neighbor(u, n - 1);
    for (int i = 1; i <= n; ++i) {
      if (i == n - 1) continue;
      if (!topology.is_adjacent(topology.neighbor(u, i), topology.neighbor(v, i))) {
        if (violations++ == 0) report.witness = "i=" + std::to_string(i);
      }
    }
    report.explored = 1;
  }
  report.pass = violations == 0;
  report.add_detail("violations", std::to_string(violations));
  report.elapsed_ms = millis_since(start);
  return report;
}

VerificationReport equivalence_check(int n, int limit) {
  const auto start = Clock::now();
  const auto built = MaterializedTopology::build_recursive(n, limit);
  VerificationReport report;
  report.claim = "equivalence";
  report.n = n;
  report.pass = true;
  for (std::uint32_t id = 0; id < built.vertex_count(); ++id) {
    const Vertex u = built.vertex(id);
    std::vector<std::uint32_t> formula;
    for (int i = 1; i <= n; ++i) formula.push_back(static_cast<std::uint32_t>(neighbor(u, i).id()));
    std::sort(formula.begin(), formula.end());
    const auto stored = built.adjacency(id);
    if (!std::equal(formula.begin(), formula.end(), stored.begin(), stored.end())) {
      report.pass = false;
      report.witness = u.to_string();
      break;
    }
  }
  report.explored = built.edge_count();
  report.value = static_cast<long long>(built.edge_count());
  report.elapsed_ms = millis_since(start);
  return report;
}

}  // namespace twisted
