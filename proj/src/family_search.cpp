#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include "bitmask.hpp"
#include "twisted/oracles.hpp"

namespace twisted {

namespace {

using detail::Mask;
using detail::MaskGraph;

template <int W>
class FamilySearch {
 public:
  FamilySearch(const MaterializedTopology& topology, std::span<const StructureInstance> universe)
      : graph_(topology) {
    std::map<Mask<W>, bool> seen;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      Mask<W> m;
      for (const auto& v : universe[i].vertices()) m.set(static_cast<std::uint32_t>(v.id()));
      if (seen.emplace(m, true).second) {
        masks_.push_back(m);
        source_.push_back(i);
      }
    }
  }

  std::size_t size() const { return masks_.size(); }
  std::size_t source(std::size_t rep) const { return source_[rep]; }

  // Result of exploring every family of size m that starts with `lead`.
  struct LeadResult {
    std::uint64_t explored = 0;
    std::vector<std::size_t> witness;  // empty when none found
    bool abandoned = false;
  };

  template <typename Abandon>
  LeadResult explore(std::size_t lead, int m, bool disjoint_only, Abandon&& abandon) const {
    LeadResult result;
    std::vector<std::size_t> chosen(static_cast<std::size_t>(m));
    chosen[0] = lead;
    if (dfs(1, lead + 1, masks_[lead], m, disjoint_only, chosen, result, abandon)) result.witness = chosen;
    return result;
  }

 private:
  template <typename Abandon>
  bool dfs(int depth, std::size_t start, const Mask<W>& removed, int m, bool disjoint_only,
           std::vector<std::size_t>& chosen, LeadResult& result, Abandon& abandon) const {
    if (depth == m) {
      ++result.explored;
      return graph_.disconnects(removed);
    }
    const std::size_t remaining = static_cast<std::size_t>(m - depth);
    if (masks_.size() < remaining) return false;
    const std::size_t stop = masks_.size() - remaining;
    if (depth == m - 1) {
      for (std::size_t j = start; j <= stop; ++j) {
        if (disjoint_only && masks_[j].intersects(removed)) continue;
        ++result.explored;
        if (graph_.disconnects(removed | masks_[j])) {
          chosen[static_cast<std::size_t>(depth)] = j;
          return true;
        }
      }
      return false;
    }
    for (std::size_t j = start; j <= stop; ++j) {
      if (abandon()) {
        result.abandoned = true;
        return false;
      }
      if (disjoint_only && masks_[j].intersects(removed)) continue;
      chosen[static_cast<std::size_t>(depth)] = j;
      if (dfs(depth + 1, j + 1, removed | masks_[j], m, disjoint_only, chosen, result, abandon)) return true;
    }
    return false;
  }

  MaskGraph<W> graph_;
  std::vector<Mask<W>> masks_;
  std::vector<std::size_t> source_;
};

struct SizeResult {
  std::uint64_t explored = 0;
  std::vector<std::size_t> witness;
};

template <int W>
SizeResult search_size_serial(const FamilySearch<W>& search, int m, bool disjoint_only) {
  SizeResult out;
  const auto never = [] { return false; };
  if (search.size() < static_cast<std::size_t>(m)) return out;
  for (std::size_t lead = 0; lead + static_cast<std::size_t>(m) <= search.size(); ++lead) {
    auto r = search.explore(lead, m, disjoint_only, never);
    out.explored += r.explored;
    if (!r.witness.empty()) {
      out.witness = std::move(r.witness);
      return out;
    }
  }
  return out;
}

template <int W>
SizeResult search_size_parallel(const FamilySearch<W>& search, int m, bool disjoint_only) {
  SizeResult out;
  if (search.size() < static_cast<std::size_t>(m)) return out;
  const auto leads = static_cast<long long>(search.size() - static_cast<std::size_t>(m) + 1);
  std::vector<typename FamilySearch<W>::LeadResult> per_lead(static_cast<std::size_t>(leads));
  std::atomic<long long> best{leads};

#pragma omp parallel for schedule(dynamic, 1)
  for (long long lead = 0; lead < leads; ++lead) {
    if (lead > best.load(std::memory_order_relaxed)) continue;
    auto abandon = [&] { return lead > best.load(std::memory_order_relaxed); };
    auto r = search.explore(static_cast<std::size_t>(lead), m, disjoint_only, abandon);
    if (!r.witness.empty()) {
      long long current = best.load();
      while (lead < current && !best.compare_exchange_weak(current, lead)) {
      }
    }
    per_lead[static_cast<std::size_t>(lead)] = std::move(r);
  }

  // Every lead below the final best was explored to completion, so the sum is
  // the same count the serial search reports.
  const long long stop = std::min(best.load(), leads - 1);
  for (long long lead = 0; lead <= stop; ++lead) out.explored += per_lead[static_cast<std::size_t>(lead)].explored;
  if (best.load() < leads) out.witness = per_lead[static_cast<std::size_t>(best.load())].witness;
  return out;
}

template <int W>
SearchOutcome run_search(const MaterializedTopology& topology, std::span<const StructureInstance> universe,
                         const Shape& shape, CutMode mode, int budget, Execution exec) {
  const FamilySearch<W> search(topology, universe);
  SearchOutcome outcome;
  outcome.universe_size = search.size();
  auto by_size = [&](int m, bool disjoint_only) {
    return exec == Execution::Serial ? search_size_serial(search, m, disjoint_only)
                                     : search_size_parallel(search, m, disjoint_only);
  };
  for (int m = 1; m <= budget; ++m) {
    auto r = by_size(m, false);
    outcome.explored += r.explored;
    if (r.witness.empty()) continue;
    CutFamily family{shape, mode, "search", {}};
    for (auto rep : r.witness) family.members.push_back(universe[search.source(rep)]);
    outcome.value = m;
    outcome.witness_overlaps = !family.pairwise_disjoint();
    if (outcome.witness_overlaps) outcome.disjoint_witness_exists = !by_size(m, true).witness.empty();
    outcome.witness = std::move(family);
    return outcome;
  }
  return outcome;
}

}  // namespace

SearchOutcome family_search(const MaterializedTopology& topology, std::span<const StructureInstance> universe,
                            const Shape& shape, CutMode mode, int budget, Execution exec) {
  if (budget < 1) throw std::domain_error("structure search: budget must be >= 1");
  const auto words = (topology.vertex_count() + 63) / 64;
  switch (words) {
    case 1:
      return run_search<1>(topology, universe, shape, mode, budget, exec);
    case 2:
      return run_search<2>(topology, universe, shape, mode, budget, exec);
    case 4:
      return run_search<4>(topology, universe, shape, mode, budget, exec);
    default:
      throw std::length_error("structure search supports n <= 8");
  }
}

SearchOutcome structure_connectivity_exact(const MaterializedTopology& topology, const Shape& shape, CutMode mode,
                                           int budget, Execution exec) {
  if (topology.dimension() > 8) throw std::length_error("structure search supports n <= 8");
  const auto universe = instance_universe(topology, shape, mode);
  return family_search(topology, universe, shape, mode, budget, exec);
}

}  // namespace twisted
