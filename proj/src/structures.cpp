#include "twisted/structures.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace twisted {

Shape Shape::path(int order) {
  if (order < 1) throw std::domain_error("Shape: path order must be >= 1");
  return Shape(Kind::Path, order);
}

Shape Shape::star(int leaves) {
  if (leaves < 1) throw std::domain_error("Shape: star needs at least one leaf");
  if (leaves <= 2) return Shape(Kind::Path, leaves + 1);
  return Shape(Kind::Star, leaves);
}

Shape Shape::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ',' && c != '_' && c != ' ') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  auto number = [&](std::string_view digits) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("unrecognized shape: " + std::string(text));
    }
    return value;
  };
  if (s.size() >= 2 && s[0] == 'p') return path(number(std::string_view(s).substr(1)));
  if (s.size() >= 3 && s[0] == 'k' && s[1] == '1') return star(number(std::string_view(s).substr(2)));
  throw std::invalid_argument("unrecognized shape: " + std::string(text));
}

std::string Shape::name() const {
  return kind_ == Kind::Path ? "P" + std::to_string(parameter_) : "K1," + std::to_string(parameter_);
}

bool is_subshape(const Shape& member, const Shape& target) {
  if (target.kind() == Shape::Kind::Path) {
    return member.kind() == Shape::Kind::Path && member.parameter() <= target.parameter();
  }
  if (member.kind() == Shape::Kind::Path) return member.parameter() <= 3;
  return member.parameter() <= target.parameter();
}

std::vector<Shape> subshapes(const Shape& target) {
  std::vector<Shape> out;
  if (target.kind() == Shape::Kind::Star) {
    for (int r = target.parameter(); r >= 3; --r) out.push_back(Shape::star(r));
    for (int k = 3; k >= 1; --k) out.push_back(Shape::path(k));
  } else {
    for (int k = target.parameter(); k >= 1; --k) out.push_back(Shape::path(k));
  }
  return out;
}

StructureInstance StructureInstance::star(const Vertex& center, std::vector<Vertex> leaves) {
  if (leaves.empty()) throw std::domain_error("star: needs at least one leaf");
  std::sort(leaves.begin(), leaves.end());
  if (leaves.size() <= 2) {
    std::vector<Vertex> seq{leaves.front(), center};
    if (leaves.size() == 2) seq.push_back(leaves.back());
    return path(std::move(seq));
  }
  std::vector<Vertex> vertices;
  vertices.reserve(leaves.size() + 1);
  vertices.push_back(center);
  vertices.insert(vertices.end(), leaves.begin(), leaves.end());
  return StructureInstance(true, std::move(vertices));
}

StructureInstance StructureInstance::path(std::vector<Vertex> sequence) {
  if (sequence.empty()) throw std::domain_error("path: needs at least one vertex");
  if (sequence.back() < sequence.front()) std::reverse(sequence.begin(), sequence.end());
  return StructureInstance(false, std::move(sequence));
}

Shape StructureInstance::shape() const {
  if (star_) return Shape::star(static_cast<int>(vertices_.size()) - 1);
  return Shape::path(static_cast<int>(vertices_.size()));
}

std::vector<Vertex> StructureInstance::vertex_set() const {
  std::vector<Vertex> out = vertices_;
  std::sort(out.begin(), out.end());
  return out;
}

bool StructureInstance::embedded_in(const Topology& topology) const {
  for (const auto& v : vertices_) {
    if (v.size() != topology.dimension()) return false;
  }
  auto set = vertex_set();
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) return false;
  if (star_) {
    for (std::size_t j = 1; j < vertices_.size(); ++j) {
      if (!topology.is_adjacent(vertices_.front(), vertices_[j])) return false;
    }
    return true;
  }
  for (std::size_t j = 1; j < vertices_.size(); ++j) {
    if (!topology.is_adjacent(vertices_[j - 1], vertices_[j])) return false;
  }
  return true;
}

std::string StructureInstance::to_string() const {
  std::string out = star_ ? "star" : "path";
  for (const auto& v : vertices_) {
    out += ' ';
    out += v.to_string();
  }
  return out;
}

std::string_view to_string(CutMode mode) { return mode == CutMode::Structure ? "structure" : "substructure"; }

CutMode parse_mode(std::string_view text) {
  if (text == "structure") return CutMode::Structure;
  if (text == "substructure") return CutMode::Substructure;
  throw std::invalid_argument("mode must be 'structure' or 'substructure'");
}

std::vector<Vertex> CutFamily::vertex_union() const {
  std::vector<Vertex> out;
  for (const auto& m : members) {
    auto vs = m.vertices();
    out.insert(out.end(), vs.begin(), vs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CutFamily::pairwise_disjoint() const {
  std::size_t total = 0;
  for (const auto& m : members) total += m.vertices().size();
  return vertex_union().size() == total;
}

bool CutFamily::well_formed(const Topology& topology) const {
  for (const auto& m : members) {
    if (!m.embedded_in(topology)) return false;
    const bool shape_ok = mode == CutMode::Structure ? m.shape() == shape : is_subshape(m.shape(), shape);
    if (!shape_ok) return false;
  }
  return true;
}

std::string CutFamily::to_text() const {
  std::ostringstream out;
  out << "family provenance=" << provenance << " shape=" << shape.name() << " mode=" << to_string(mode)
      << " size=" << members.size() << '\n';
  for (const auto& m : members) out << m.to_string() << '\n';
  return out.str();
}

std::vector<StructureInstance> enumerate_stars(const MaterializedTopology& topology, int leaves) {
  const int n = topology.dimension();
  if (leaves < 1 || leaves > n) throw std::domain_error("enumerate_stars: need 1 <= r <= n");
  std::vector<StructureInstance> out;
  if (leaves == 1) {
    for (auto [a, b] : topology.edges()) {
      out.push_back(StructureInstance::path({topology.vertex(a), topology.vertex(b)}));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<int> pick(static_cast<std::size_t>(leaves));
  for (std::uint32_t c = 0; c < topology.vertex_count(); ++c) {
    auto adj = topology.adjacency(c);
    const int degree = static_cast<int>(adj.size());
    for (int j = 0; j < leaves; ++j) pick[static_cast<std::size_t>(j)] = j;
    while (true) {
      std::vector<Vertex> chosen;
      chosen.reserve(pick.size());
      for (int j : pick) chosen.push_back(topology.vertex(adj[static_cast<std::size_t>(j)]));
      out.push_back(StructureInstance::star(topology.vertex(c), std::move(chosen)));
      int j = leaves - 1;
      while (j >= 0 && pick[static_cast<std::size_t>(j)] == degree - leaves + j) --j;
      if (j < 0) break;
      ++pick[static_cast<std::size_t>(j)];
      for (int t = j + 1; t < leaves; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StructureInstance> enumerate_paths(const MaterializedTopology& topology, int order) {
  if (order < 1) throw std::domain_error("enumerate_paths: order must be >= 1");
  std::vector<StructureInstance> out;
  const auto count = topology.vertex_count();
  std::vector<std::uint32_t> seq;
  std::vector<char> on_path(count, 0);

  std::function<void()> extend = [&] {
    if (static_cast<int>(seq.size()) == order) {
      if (order == 1 || seq.front() < seq.back()) {
        std::vector<Vertex> vs;
        vs.reserve(seq.size());
        for (auto id : seq) vs.push_back(topology.vertex(id));
        out.push_back(StructureInstance::path(std::move(vs)));
      }
      return;
    }
    for (auto w : topology.adjacency(seq.back())) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      seq.push_back(w);
      extend();
      seq.pop_back();
      on_path[w] = 0;
    }
  };

  for (std::uint32_t s = 0; s < count; ++s) {
    on_path[s] = 1;
    seq.assign(1, s);
    extend();
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StructureInstance> instance_universe(const MaterializedTopology& topology, const Shape& shape,
                                                 CutMode mode) {
  std::vector<Shape> shapes = mode == CutMode::Structure ? std::vector<Shape>{shape} : subshapes(shape);
  std::vector<StructureInstance> out;
  for (const auto& s : shapes) {
    auto part = s.kind() == Shape::Kind::Star ? enumerate_stars(topology, s.parameter())
                                              : enumerate_paths(topology, s.parameter());
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

namespace {

// Composite neighbors of a fixed root u, each one a chain of neighbor().
struct NeighborChains {
  const Vertex& u;

  Vertex at(int i) const { return neighbor(u, i); }
  // u^{i,1}
  Vertex step1(int i) const { return neighbor(at(i), i + 1); }
  // u^{i,1,j}
  Vertex step1j(int i, int j) const { return neighbor(step1(i), i + 1 + j); }
};

void require_dimension(const Vertex& u, int minimum, const char* what) {
  if (u.size() < minimum) throw std::domain_error(std::string(what) + ": dimension too small");
}

}  // namespace

CutFamily star_cut_k13(const Vertex& u) {
  require_dimension(u, 4, "star_cut_k13");
  const int n = u.size();
  const NeighborChains c{u};
  CutFamily family{Shape::star(3), CutMode::Structure, "star_cut_k13", {}};
  auto regular = [&](int i) {
    return StructureInstance::star(c.step1(i), {c.at(i), c.at(i + 1), c.step1j(i, 1)});
  };
  if (n % 2 == 1) {
    for (int i = 1; i <= n - 2; i += 2) family.members.push_back(regular(i));
    const Vertex un = c.at(n);
    family.members.push_back(StructureInstance::star(un, {c.step1(n - 1), neighbor(un, 1), neighbor(un, 2)}));
  } else {
    for (int i = 1; i <= n - 3; i += 2) family.members.push_back(regular(i));
    const Vertex center = c.step1(n - 1);
    family.members.push_back(StructureInstance::star(center, {c.at(n - 1), c.at(n), neighbor(center, 1)}));
  }
  return family;
}

CutFamily star_cut_k14(const Vertex& u) {
  require_dimension(u, 4, "star_cut_k14");
  const int n = u.size();
  const NeighborChains c{u};
  CutFamily family{Shape::star(4), CutMode::Structure, "star_cut_k14", {}};
  auto regular = [&](int i) {
    return StructureInstance::star(c.step1(i), {c.at(i), c.at(i + 1), c.step1j(i, 1), c.step1j(i, 2)});
  };
  if (n % 2 == 1) {
    for (int i = 1; i <= n - 4; i += 2) family.members.push_back(regular(i));
    const Vertex center = c.step1(n - 2);
    family.members.push_back(
        StructureInstance::star(center, {c.at(n - 2), c.at(n - 1), c.step1j(n - 2, 1), neighbor(center, 1)}));
    const Vertex un = c.at(n);
    family.members.push_back(
        StructureInstance::star(un, {c.step1(n - 1), neighbor(un, 1), neighbor(un, 2), neighbor(un, 3)}));
  } else {
    for (int i = 1; i <= n - 3; i += 2) family.members.push_back(regular(i));
    const Vertex center = c.step1(n - 1);
    family.members.push_back(
        StructureInstance::star(center, {c.at(n - 1), c.at(n), neighbor(center, 1), neighbor(center, 2)}));
  }
  return family;
}

CutFamily path_cut_p2(const Vertex& u) {
  require_dimension(u, 3, "path_cut_p2");
  const int n = u.size();
  CutFamily family{Shape::path(2), CutMode::Structure, "path_cut_p2", {}};
  if (kappa(static_cast<std::uint64_t>(n - 1)) == 1) {
    if (u != Vertex(n)) throw std::domain_error("path_cut_p2: the kappa(n-1) = 1 family is anchored at 0...0");
    const Vertex v = neighbor(u, n - 1);
    for (int i = 1; i <= n; ++i) {
      if (i == n - 1) continue;
      family.members.push_back(StructureInstance::path({neighbor(u, i), neighbor(v, i)}));
    }
    family.provenance = "path_cut_p2:pair";
  } else {
    const NeighborChains c{u};
    for (int i = 1; i <= n - 1; ++i) family.members.push_back(StructureInstance::path({c.at(i), c.step1(i)}));
    const Vertex un = c.at(n);
    family.members.push_back(StructureInstance::path({un, neighbor(un, 1)}));
    family.provenance = "path_cut_p2:single";
  }
  return family;
}

CutFamily path_cut_pk(const Vertex& u, int order) {
  const int n = u.size();
  const int k = order;
  if (k < 3 || k > n) throw std::domain_error("path_cut_pk: need 3 <= k <= n");
  const NeighborChains c{u};
  CutFamily family{Shape::path(k), CutMode::Structure, "path_cut_pk", {}};

  const bool odd = k % 2 == 1;
  const int width = odd ? (k + 1) / 2 : k / 2;  // neighbor indices covered per path
  const int q = n / width;
  const int r = n % width;

  // <u^a, u^{a,1}, ..., u^{a+width-1}> with a trailing connector for even k.
  auto block = [&](int a) {
    std::vector<Vertex> seq;
    for (int i = a; i < a + width; ++i) {
      seq.push_back(c.at(i));
      if (i < a + width - 1) seq.push_back(c.step1(i));
    }
    if (!odd) {
      const int last = a + width - 1;
      seq.push_back(last < n ? c.step1(last) : neighbor(c.at(n), 1));
    }
    return seq;
  };
  for (int j = 0; j < q; ++j) family.members.push_back(StructureInstance::path(block(j * width + 1)));

  if (r > 0) {
    std::vector<Vertex> seq;
    for (int i = n - r + 1; i <= n; ++i) {
      seq.push_back(c.at(i));
      if (i < n) seq.push_back(c.step1(i));
    }
    const int lowest = n - k + 2 * r - 2;
    if (lowest < 1) throw std::domain_error("path_cut_pk: tail walk undefined for this (n, k)");
    Vertex w = seq.back();
    for (int pos = n - 2; pos >= lowest; --pos) {
      w = neighbor(w, pos);
      seq.push_back(w);
    }
    family.members.push_back(StructureInstance::path(std::move(seq)));
  }
  return family;
}

Vertex resolve_chain(const Vertex& u, std::string_view chain) {
  if (chain.empty()) throw std::invalid_argument("neighbor chain is empty");
  Vertex w = u;
  int position = 0;
  std::size_t start = 0;
  while (start <= chain.size()) {
    auto end = chain.find(',', start);
    if (end == std::string_view::npos) end = chain.size();
    std::string_view token = chain.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const bool absolute = !token.empty() && token.back() == '*';
    if (absolute) token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
      throw std::invalid_argument("malformed neighbor chain: " + std::string(chain));
    }
    position = absolute ? value : position + value;
    if (position > u.size()) throw std::invalid_argument("neighbor chain leaves the index range");
    w = neighbor(w, position);
    start = end + 1;
  }
  return w;
}

}  // namespace twisted
