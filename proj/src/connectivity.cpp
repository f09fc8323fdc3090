#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "twisted/oracles.hpp"

namespace twisted {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();

// Unit-capacity vertex-split flow network over H_n. Node 2v is v_in, 2v+1 is
// v_out. The only finite arcs are v_in -> v_out (capacity 1), so a max flow
// equals a minimum vertex separator.
class SplitNetwork {
 public:
  explicit SplitNetwork(const MaterializedTopology& topology) : vertices_(topology.vertex_count()) {
    const std::size_t nodes = 2 * static_cast<std::size_t>(vertices_);
    first_.assign(nodes + 1, 0);
    std::vector<std::vector<std::uint32_t>> out(nodes);
    std::vector<std::vector<std::uint32_t>> rev_of(nodes);
    // Build arc list: forward arcs and their paired residual arcs.
    auto add = [&](std::uint32_t from, std::uint32_t to, bool split) {
      const auto fwd = static_cast<std::uint32_t>(head_.size());
      head_.push_back(to);
      split_.push_back(split ? 1 : 0);
      forward_.push_back(1);
      head_.push_back(from);
      split_.push_back(split ? 1 : 0);
      forward_.push_back(0);
      out[from].push_back(fwd);
      out[to].push_back(fwd + 1);
    };
    for (std::uint32_t v = 0; v < vertices_; ++v) {
      add(2 * v, 2 * v + 1, true);
      for (auto w : topology.adjacency(v)) add(2 * v + 1, 2 * w, false);
    }
    for (std::size_t node = 0; node < nodes; ++node) first_[node + 1] = first_[node] + static_cast<std::uint32_t>(out[node].size());
    arcs_.reserve(head_.size());
    for (const auto& list : out) arcs_.insert(arcs_.end(), list.begin(), list.end());
    flow_.assign(head_.size(), 0);
    role_.assign(vertices_, 0);
    parent_.assign(nodes, kNone);
  }

  // Max number of vertex-disjoint paths from `sources` to `sinks` avoiding
  // both sets' vertices as cut points, stopping once it exceeds `cap`.
  // Returns kUnbounded when a source is adjacent to a sink.
  int min_cut(std::span<const std::uint32_t> sources, std::span<const std::uint32_t> sinks, int cap) {
    std::fill(flow_.begin(), flow_.end(), 0);
    for (auto s : sources) role_[s] = 1;
    for (auto t : sinks) role_[t] = 2;
    int result = 0;
    for (auto s : sources) {
      for (std::uint32_t k = first_[2 * s + 1]; k < first_[2 * s + 2]; ++k) {
        const auto a = arcs_[k];
        if (forward_[a] && role_[head_[a] / 2] == 2) result = kUnbounded;
      }
    }
    if (result == 0) {
      while (augment(sources)) {
        ++result;
        if (result > cap) break;
      }
    }
    for (auto s : sources) role_[s] = 0;
    for (auto t : sinks) role_[t] = 0;
    return result;
  }

  // After a completed min_cut, the separator closest to the sources.
  std::vector<std::uint32_t> source_side_cut(std::span<const std::uint32_t> sources,
                                             std::span<const std::uint32_t> sinks) {
    for (auto s : sources) role_[s] = 1;
    for (auto t : sinks) role_[t] = 2;
    reach(sources);
    std::vector<std::uint32_t> cut;
    for (std::uint32_t v = 0; v < vertices_; ++v) {
      if (role_[v] == 0 && parent_[2 * v] != kNone && parent_[2 * v + 1] == kNone) cut.push_back(v);
    }
    for (auto s : sources) role_[s] = 0;
    for (auto t : sinks) role_[t] = 0;
    return cut;
  }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t kRoot = kNone - 1;

  int residual(std::uint32_t a) const {
    const bool finite = split_[a] && role_[head_[a] / 2] == 0 && role_[head_[a ^ 1U] / 2] == 0;
    if (forward_[a]) return finite ? 1 - flow_[a] : 1;
    return flow_[a ^ 1U];
  }

  // BFS over the residual graph; fills parent_ with the arc used to reach
  // each node. Returns the first sink in-node reached, or kNone.
  std::uint32_t reach(std::span<const std::uint32_t> sources) {
    std::fill(parent_.begin(), parent_.end(), kNone);
    queue_.clear();
    for (auto s : sources) {
      for (std::uint32_t node : {2 * s, 2 * s + 1}) {
        parent_[node] = kRoot;
        queue_.push_back(node);
      }
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto node = queue_[head];
      for (std::uint32_t k = first_[node]; k < first_[node + 1]; ++k) {
        const auto a = arcs_[k];
        const auto to = head_[a];
        if (parent_[to] != kNone || residual(a) <= 0) continue;
        parent_[to] = a;
        if (role_[to / 2] == 2 && to % 2 == 0) return to;
        queue_.push_back(to);
      }
    }
    return kNone;
  }

  bool augment(std::span<const std::uint32_t> sources) {
    auto node = reach(sources);
    if (node == kNone) return false;
    while (parent_[node] != kRoot) {
      const auto a = parent_[node];
      if (forward_[a]) {
        ++flow_[a];
      } else {
        --flow_[a ^ 1U];
      }
      node = head_[a ^ 1U];
    }
    return true;
  }

  std::uint32_t vertices_;
  std::vector<std::uint32_t> first_;
  std::vector<std::uint32_t> arcs_;
  std::vector<std::uint32_t> head_;
  std::vector<std::uint8_t> split_;
  std::vector<std::uint8_t> forward_;
  std::vector<int> flow_;
  std::vector<std::uint8_t> role_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
};

void lower_to(std::atomic<int>& best, int value) {
  int current = best.load();
  while (value < current && !best.compare_exchange_weak(current, value)) {
  }
}

// Connected vertex sets of size g + 1 (edges for g = 1, paths on three
// vertices for g = 2), as sorted id lists in lexicographic order.
std::vector<std::vector<std::uint32_t>> connected_sets(const MaterializedTopology& topology, int size) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& p : enumerate_paths(topology, size)) {
    std::vector<std::uint32_t> ids;
    for (const auto& v : p.vertices()) ids.push_back(static_cast<std::uint32_t>(v.id()));
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool leaves_only_large_components(const MaterializedTopology& topology, std::span<const std::uint32_t> cut, int g) {
  std::vector<Vertex> removed;
  for (auto id : cut) removed.push_back(topology.vertex(id));
  const auto result = components_after_removal(topology, removed);
  return result.disconnected() && result.component_sizes.front() > static_cast<std::size_t>(g);
}

}  // namespace

ConnectivityResult components_after_removal(const MaterializedTopology& topology, std::span<const Vertex> removed) {
  const auto count = topology.vertex_count();
  std::vector<std::int32_t> label(count, -1);
  for (const auto& v : removed) {
    if (v.size() == topology.dimension()) label[v.id()] = -2;
  }
  std::vector<std::vector<std::uint32_t>> components;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < count; ++s) {
    if (label[s] != -1) continue;
    const auto index = static_cast<std::int32_t>(components.size());
    components.emplace_back();
    label[s] = index;
    stack.assign(1, s);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      components.back().push_back(v);
      for (auto w : topology.adjacency(v)) {
        if (label[w] == -1) {
          label[w] = index;
          stack.push_back(w);
        }
      }
    }
  }
  ConnectivityResult result;
  result.component_count = static_cast<int>(components.size());
  std::size_t smallest = 0;
  for (std::size_t c = 0; c < components.size(); ++c) {
    result.component_sizes.push_back(components[c].size());
    // Components are discovered in order of their smallest vertex.
    if (components[c].size() < components[smallest].size()) smallest = c;
  }
  std::sort(result.component_sizes.begin(), result.component_sizes.end());
  if (!components.empty()) {
    auto ids = components[smallest];
    std::sort(ids.begin(), ids.end());
    for (auto id : ids) result.smallest_component.push_back(topology.vertex(id));
  }
  return result;
}

int vertex_connectivity(const MaterializedTopology& topology, Execution exec) {
  const auto count = topology.vertex_count();
  std::size_t min_degree = count;
  for (std::uint32_t v = 0; v < count; ++v) min_degree = std::min(min_degree, topology.adjacency(v).size());
  std::atomic<int> best{static_cast<int>(std::min<std::size_t>(min_degree, count - 1))};

  auto sweep = [&](SplitNetwork& net, std::uint32_t s) {
    const auto adj = topology.adjacency(s);
    for (std::uint32_t t = s + 1; t < count; ++t) {
      if (std::binary_search(adj.begin(), adj.end(), t)) continue;
      const std::uint32_t src[] = {s};
      const std::uint32_t dst[] = {t};
      lower_to(best, net.min_cut(src, dst, best.load()));
    }
  };

  if (exec == Execution::Serial) {
    SplitNetwork net(topology);
    for (std::uint32_t s = 0; s < count; ++s) sweep(net, s);
  } else {
#pragma omp parallel
    {
      SplitNetwork net(topology);
#pragma omp for schedule(dynamic, 1)
      for (long long s = 0; s < static_cast<long long>(count); ++s) sweep(net, static_cast<std::uint32_t>(s));
    }
  }
  return best.load();
}

ExtraConnectivityResult g_extra_connectivity(const MaterializedTopology& topology, int g, Execution exec) {
  if (g != 1 && g != 2) throw std::domain_error("g_extra_connectivity: g must be 1 or 2");
  const auto sets = connected_sets(topology, g + 1);
  const std::size_t total = sets.size();
  std::atomic<int> best{kUnbounded};
  // Pair values, row-major over i < j; values above the running best are
  // recorded as kUnbounded.
  std::vector<std::vector<int>> values(total);

  auto row = [&](SplitNetwork& net, std::size_t i) {
    auto& out = values[i];
    out.assign(total - i - 1, kUnbounded);
    for (std::size_t j = i + 1; j < total; ++j) {
      const bool overlap = std::find_first_of(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end()) !=
                           sets[i].end();
      if (overlap) continue;
      const int cap = best.load();
      const int v = net.min_cut(sets[i], sets[j], cap);
      if (v <= cap) {
        out[j - i - 1] = v;
        lower_to(best, v);
      }
    }
  };

  if (exec == Execution::Serial) {
    SplitNetwork net(topology);
    for (std::size_t i = 0; i < total; ++i) row(net, i);
  } else {
#pragma omp parallel
    {
      SplitNetwork net(topology);
#pragma omp for schedule(dynamic, 1)
      for (long long i = 0; i < static_cast<long long>(total); ++i) row(net, static_cast<std::size_t>(i));
    }
  }

  ExtraConnectivityResult result;
  result.value = best.load();
  if (result.value == kUnbounded) return result;

  // First minimizing pair, in lexicographic order, whose source- or sink-side
  // separator is a valid g-extra cut.
  SplitNetwork net(topology);
  for (std::size_t i = 0; i < total && !result.attained; ++i) {
    for (std::size_t j = i + 1; j < total; ++j) {
      if (values[i][j - i - 1] != result.value) continue;
      for (int side = 0; side < 2; ++side) {
        const auto& a = side == 0 ? sets[i] : sets[j];
        const auto& b = side == 0 ? sets[j] : sets[i];
        net.min_cut(a, b, kUnbounded - 1);
        auto cut = net.source_side_cut(a, b);
        if (static_cast<int>(cut.size()) == result.value && leaves_only_large_components(topology, cut, g)) {
          for (auto id : cut) result.cut.push_back(topology.vertex(id));
          result.attained = true;
          break;
        }
      }
      if (result.attained) break;
    }
  }
  return result;
}

}  // namespace twisted
