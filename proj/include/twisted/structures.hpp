#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twisted/topology.hpp"
#include "twisted/vertex.hpp"

namespace twisted {

/// Shape of a structure: a path P_k on k vertices or a star K_{1,r}.
///
/// K_{1,1} and K_{1,2} are the paths P_2 and P_3; Shape::star normalizes
/// them so there is exactly one representation per graph.
class Shape {
 public:
  enum class Kind { Path, Star };

  static Shape path(int order);
  static Shape star(int leaves);
  /// Accepts "p3", "P3", "k13", "K1,3", "k1,4" (case-insensitive).
  static Shape parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// Path order k, or star leaf count r.
  int parameter() const { return parameter_; }
  int vertex_count() const { return kind_ == Kind::Path ? parameter_ : parameter_ + 1; }
  std::string name() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  Shape(Kind kind, int parameter) : kind_(kind), parameter_(parameter) {}
  Kind kind_;
  int parameter_;
};

/// True when `member` is a connected subgraph shape of `target`.
bool is_subshape(const Shape& member, const Shape& target);

/// Connected subgraph shapes of `target`, largest first (target itself first).
std::vector<Shape> subshapes(const Shape& target);

/// An embedded star or path, stored in canonical form.
///
/// Paths keep the lexicographically smaller of the sequence and its reversal.
/// Stars with r >= 3 keep (center, sorted leaves); stars with fewer leaves are
/// stored as the equivalent path.
class StructureInstance {
 public:
  static StructureInstance star(const Vertex& center, std::vector<Vertex> leaves);
  static StructureInstance path(std::vector<Vertex> sequence);

  Shape shape() const;
  bool is_star() const { return star_; }
  /// Path: the canonical sequence. Star: center followed by sorted leaves.
  std::span<const Vertex> vertices() const { return vertices_; }
  const Vertex& center() const { return vertices_.front(); }
  /// Sorted vertex set.
  std::vector<Vertex> vertex_set() const;

  /// Checks adjacency and distinctness against `topology`.
  bool embedded_in(const Topology& topology) const;

  /// "star <center> <leaves...>" or "path <v1> ... <vk>".
  std::string to_string() const;

  friend bool operator==(const StructureInstance&, const StructureInstance&) = default;
  friend auto operator<=>(const StructureInstance& a, const StructureInstance& b) {
    if (auto c = a.star_ <=> b.star_; c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }

 private:
  StructureInstance(bool star, std::vector<Vertex> vertices) : star_(star), vertices_(std::move(vertices)) {}
  bool star_;
  std::vector<Vertex> vertices_;
};

enum class CutMode { Structure, Substructure };

std::string_view to_string(CutMode mode);
CutMode parse_mode(std::string_view text);

/// A set of structures proposed as a (sub)structure cut.
struct CutFamily {
  Shape shape = Shape::path(1);
  CutMode mode = CutMode::Structure;
  std::string provenance;
  std::vector<StructureInstance> members;

  std::size_t size() const { return members.size(); }
  /// Sorted union of member vertex sets.
  std::vector<Vertex> vertex_union() const;
  bool pairwise_disjoint() const;
  /// Every member is embedded in `topology` and has a shape allowed by `mode`.
  bool well_formed(const Topology& topology) const;

  /// Header line followed by one member per line.
  std::string to_text() const;
};

/// Every K_{1,r} in a materialized topology. 2^n * C(n, r) instances for
/// r >= 2; each edge once for r = 1. Sorted canonically.
std::vector<StructureInstance> enumerate_stars(const MaterializedTopology& topology, int leaves);

/// Every simple path on `order` vertices, one instance per sequence/reversal
/// pair. Sorted canonically.
std::vector<StructureInstance> enumerate_paths(const MaterializedTopology& topology, int order);

/// All instances eligible for a family of the given shape and mode, grouped by
/// shape with the largest shape first and sorted canonically within a shape.
std::vector<StructureInstance> instance_universe(const MaterializedTopology& topology, const Shape& shape,
                                                 CutMode mode);

/// ceil(n/2) disjoint K_{1,3} isolating u. Requires n >= 4.
CutFamily star_cut_k13(const Vertex& u);

/// ceil(n/2) disjoint K_{1,4} isolating u. Requires n >= 4.
CutFamily star_cut_k14(const Vertex& u);

/// P_2 cut. When kappa(n-1) = 1 the family is the n-1 edges u^i v^i (i != n-1)
/// around u = 0...0 and v = u^{n-1}, and `u` must be all zeros. Otherwise it
/// is the n edges u^i u^{i,1} (i < n) plus u^n u^{n,1*}. Requires n >= 3.
CutFamily path_cut_p2(const Vertex& u);

/// ceil(2n/(k+1)) (odd k) or ceil(2n/k) (even k) disjoint P_k isolating u.
/// Requires 3 <= k <= n.
CutFamily path_cut_pk(const Vertex& u, int order);

/// Resolve a superscript chain such as "2,1,1*" starting from u. A plain index
/// j moves to position (previous position + j); "j*" moves to position j.
Vertex resolve_chain(const Vertex& u, std::string_view chain);

}  // namespace twisted
