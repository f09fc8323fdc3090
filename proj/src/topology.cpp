#include "twisted/topology.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

namespace twisted {

namespace {

// kappa(m) for suffix lengths 0..128; kappa(0) is unused and left at 0.
const std::array<int, Vertex::kMaxBits + 1>& twist_widths() {
  static const auto table = [] {
    std::array<int, Vertex::kMaxBits + 1> t{};
    for (int m = 1; m <= Vertex::kMaxBits; ++m) t[static_cast<std::size_t>(m)] = kappa(static_cast<std::uint64_t>(m));
    return t;
  }();
  return table;
}

int first_difference(const Vertex& u, const Vertex& v) {
  for (int i = 1; i <= u.size(); ++i) {
    if (u.bit(i) != v.bit(i)) return i;
  }
  return 0;
}

// phi on an m-bit integer whose most significant bit is string position 1.
std::uint64_t phi_bits(std::uint64_t x, int m) {
  const int k = kappa(static_cast<std::uint64_t>(m));
  if (k == 0) return x;
  const std::uint64_t low_mask = (std::uint64_t{1} << k) - 1;
  const int shift = m - k;
  const std::uint64_t head = (x >> shift) & low_mask;
  const std::uint64_t tail = x & low_mask;
  const std::uint64_t body = x & ((std::uint64_t{1} << shift) - 1);
  return body | ((head ^ tail) << shift);
}

std::vector<std::vector<std::uint32_t>> build_level(int n) {
  if (n == 1) return {{1}, {0}};
  auto lower = build_level(n - 1);
  const auto half = static_cast<std::uint32_t>(lower.size());
  std::vector<std::vector<std::uint32_t>> adj(2 * static_cast<std::size_t>(half));
  for (std::uint32_t x = 0; x < half; ++x) {
    adj[x] = lower[x];
    auto& upper = adj[half + x];
    upper.reserve(lower[x].size() + 1);
    for (auto w : lower[x]) upper.push_back(half + w);
  }
  for (std::uint32_t x = 0; x < half; ++x) {
    const auto partner = half + static_cast<std::uint32_t>(phi_bits(x, n - 1));
    adj[x].push_back(partner);
    adj[partner].push_back(x);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

Vertex neighbor(const Vertex& u, int i) {
  const int n = u.size();
  if (i < 1 || i > n) throw std::domain_error("neighbor: index out of range");
  Vertex w = u;
  w.flip(i);
  const int m = n - i;
  if (m == 0) return w;
  const int k = twist_widths()[static_cast<std::size_t>(m)];
  for (int j = 1; j <= k; ++j) {
    w.set(i + j, u.bit(i + j) != u.bit(n - k + j));
  }
  return w;
}

bool is_adjacent(const Vertex& u, const Vertex& v) {
  if (u.size() != v.size()) throw std::domain_error("is_adjacent: length mismatch");
  const int i = first_difference(u, v);
  return i != 0 && neighbor(u, i) == v;
}

void Topology::check_vertex(const Vertex& u) const {
  if (u.size() != dimension()) throw std::domain_error("topology: vertex length does not match dimension");
}

std::vector<Vertex> Topology::neighbors(const Vertex& u) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(dimension()));
  for (int i = 1; i <= dimension(); ++i) out.push_back(neighbor(u, i));
  return out;
}

std::vector<Vertex> Topology::neighborhood(std::span<const Vertex> set) const {
  std::vector<Vertex> members(set.begin(), set.end());
  std::sort(members.begin(), members.end());
  std::vector<Vertex> out;
  for (const auto& v : members) {
    for (int i = 1; i <= dimension(); ++i) {
      auto w = neighbor(v, i);
      if (!std::binary_search(members.begin(), members.end(), w)) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ImplicitTopology::ImplicitTopology(int n) : n_(n) {
  if (n < 1 || n > Vertex::kMaxBits) throw std::domain_error("ImplicitTopology: n must be in [1, 128]");
}

Vertex ImplicitTopology::neighbor(const Vertex& u, int i) const {
  check_vertex(u);
  return twisted::neighbor(u, i);
}

bool ImplicitTopology::is_adjacent(const Vertex& u, const Vertex& v) const {
  check_vertex(u);
  return twisted::is_adjacent(u, v);
}

MaterializedTopology MaterializedTopology::build_recursive(int n, int limit) {
  if (n < 1) throw std::domain_error("build_recursive: n must be positive");
  if (n > limit) throw std::length_error("build_recursive: n exceeds materialization limit");
  if (n > 31) throw std::length_error("build_recursive: n too large for 32-bit vertex ids");
  return MaterializedTopology(n, build_level(n));
}

Vertex MaterializedTopology::neighbor(const Vertex& u, int i) const {
  check_vertex(u);
  if (i < 1 || i > n_) throw std::domain_error("neighbor: index out of range");
  const auto id = static_cast<std::uint32_t>(u.id());
  const std::uint32_t top = std::uint32_t{1} << (n_ - i);
  for (auto w : adjacency_[id]) {
    const std::uint32_t diff = w ^ id;
    if (diff >= top && diff < 2 * top) return vertex(w);
  }
  throw std::logic_error("MaterializedTopology: missing i-neighbor");
}

bool MaterializedTopology::is_adjacent(const Vertex& u, const Vertex& v) const {
  check_vertex(u);
  if (u.size() != v.size()) throw std::domain_error("is_adjacent: length mismatch");
  const auto& list = adjacency_[u.id()];
  return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(v.id()));
}

std::uint64_t MaterializedTopology::edge_count() const {
  std::uint64_t degree_sum = 0;
  for (const auto& list : adjacency_) degree_sum += list.size();
  return degree_sum / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> MaterializedTopology::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count());
  for (std::uint32_t a = 0; a < vertex_count(); ++a) {
    for (auto b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

void write_edge_list(std::ostream& out, const MaterializedTopology& topology) {
  for (auto [a, b] : topology.edges()) {
    out << topology.vertex(a).to_string() << ' ' << topology.vertex(b).to_string() << '\n';
  }
}

void write_dot(std::ostream& out, const MaterializedTopology& topology) {
  out << "graph H" << topology.dimension() << " {\n";
  for (std::uint32_t id = 0; id < topology.vertex_count(); ++id) {
    const auto label = topology.vertex(id).to_string();
    out << "  \"" << label << "\" [label=\"" << label << "\"];\n";
  }
  for (auto [a, b] : topology.edges()) {
    out << "  \"" << topology.vertex(a).to_string() << "\" -- \"" << topology.vertex(b).to_string() << "\";\n";
  }
  out << "}\n";
}

}  // namespace twisted
