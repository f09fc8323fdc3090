#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "twisted/vertex.hpp"

namespace twisted {

/// The i-neighbor of u: bits 1..i-1 kept, bit i flipped, and phi applied to
/// the suffix u[i+1..n] (twist width kappa(n - i)). Composite neighbors are
/// chains of this call; the starred "i*" neighbor of an already computed
/// vertex w is neighbor(w, i).
Vertex neighbor(const Vertex& u, int i);

/// Formula-based adjacency test. Throws std::domain_error on length mismatch.
bool is_adjacent(const Vertex& u, const Vertex& v);

/// Read-only graph view of the twisted hypercube H_n.
class Topology {
 public:
  virtual ~Topology() = default;

  virtual int dimension() const = 0;
  /// Neighbor that agrees with u on bits 1..i-1 and differs at bit i.
  virtual Vertex neighbor(const Vertex& u, int i) const = 0;
  virtual bool is_adjacent(const Vertex& u, const Vertex& v) const = 0;

  /// N(u) ordered by index: {u^1, ..., u^n}.
  std::vector<Vertex> neighbors(const Vertex& u) const;
  /// N(S) = union of N(v) over v in S, minus S. Sorted, no duplicates.
  std::vector<Vertex> neighborhood(std::span<const Vertex> set) const;

 protected:
  void check_vertex(const Vertex& u) const;
};

/// Adjacency answered from the closed-form neighbor formula. No storage.
class ImplicitTopology final : public Topology {
 public:
  explicit ImplicitTopology(int n);

  int dimension() const override { return n_; }
  Vertex neighbor(const Vertex& u, int i) const override;
  bool is_adjacent(const Vertex& u, const Vertex& v) const override;

 private:
  int n_;
};

/// H_n materialized from the recursive two-copies construction.
///
/// Vertex ids are the integer value of the bit string with bit 1 as the most
/// significant bit. Adjacency lists are sorted by id.
class MaterializedTopology final : public Topology {
 public:
  static constexpr int kDefaultLimit = 20;

  /// Throws std::length_error when n exceeds `limit`, std::domain_error when n < 1.
  static MaterializedTopology build_recursive(int n, int limit = kDefaultLimit);

  int dimension() const override { return n_; }
  Vertex neighbor(const Vertex& u, int i) const override;
  bool is_adjacent(const Vertex& u, const Vertex& v) const override;

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(adjacency_.size()); }
  std::uint64_t edge_count() const;
  std::span<const std::uint32_t> adjacency(std::uint32_t id) const { return adjacency_[id]; }
  Vertex vertex(std::uint32_t id) const { return Vertex::from_id(n_, id); }
  /// Edges (a, b) with a < b, sorted lexicographically.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

 private:
  MaterializedTopology(int n, std::vector<std::vector<std::uint32_t>> adjacency)
      : n_(n), adjacency_(std::move(adjacency)) {}

  int n_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Edge list: "u v" per line with u < v, lexicographic, LF endings.
void write_edge_list(std::ostream& out, const MaterializedTopology& topology);
/// Undirected DOT graph labelled by bit strings.
void write_dot(std::ostream& out, const MaterializedTopology& topology);

}  // namespace twisted
