#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twisted/report.hpp"
#include "twisted/structures.hpp"
#include "twisted/topology.hpp"

namespace twisted {

/// Kernels come in a serial reference form and an OpenMP form. Both return
/// bit-identical results; the serial one exists for cross-checking.
enum class Execution { Serial, Parallel };

struct ConnectivityResult {
  int component_count = 0;
  /// Ascending.
  std::vector<std::size_t> component_sizes;
  /// Smallest component; ties go to the one holding the smallest vertex.
  std::vector<Vertex> smallest_component;

  bool disconnected() const { return component_count >= 2; }
};

/// Components of H_n minus `removed`. Vertices not in the graph are ignored.
ConnectivityResult components_after_removal(const MaterializedTopology& topology, std::span<const Vertex> removed);

/// Exact vertex connectivity by unit-capacity max flow on the split graph.
int vertex_connectivity(const MaterializedTopology& topology, Execution exec = Execution::Parallel);

struct ExtraConnectivityResult {
  int value = 0;
  /// A separating set of size `value` whose removal leaves only components
  /// larger than g.
  std::vector<Vertex> cut;
  /// False if no minimum pair cut could be shown to be a valid g-extra cut.
  bool attained = false;
};

/// Exact g-extra connectivity for g in {1, 2}: the minimum over pairs of
/// disjoint connected (g+1)-sets of the min vertex cut between them, with the
/// minimizing cut checked to leave only components of more than g vertices.
ExtraConnectivityResult g_extra_connectivity(const MaterializedTopology& topology, int g,
                                             Execution exec = Execution::Parallel);

struct SearchOutcome {
  /// Minimum family size, or nullopt when nothing up to the budget disconnects.
  std::optional<int> value;
  std::optional<CutFamily> witness;
  /// Families tested, in search order, up to and including the witness.
  std::uint64_t explored = 0;
  /// Witness members share vertices.
  bool witness_overlaps = false;
  /// Set when the witness overlaps: whether some vertex-disjoint family of the
  /// same size also disconnects.
  std::optional<bool> disjoint_witness_exists;
  /// Universe size after merging instances with identical vertex sets.
  std::size_t universe_size = 0;
};

/// Smallest m <= budget such that some m distinct instances of the given
/// shape (or its connected subshapes) disconnect the graph. Sizes are tried in
/// increasing order; within a size, combinations are visited in lexicographic
/// order of universe index and the first disconnecting one is the witness.
/// Supports n <= 8.
SearchOutcome structure_connectivity_exact(const MaterializedTopology& topology, const Shape& shape, CutMode mode,
                                           int budget, Execution exec = Execution::Parallel);

/// Exact search on an explicit universe (already in search order).
SearchOutcome family_search(const MaterializedTopology& topology, std::span<const StructureInstance> universe,
                            const Shape& shape, CutMode mode, int budget, Execution exec = Execution::Parallel);

/// Checks every neighborhood-intersection bound that applies to `shape`
/// against `topology`. With `samples` unset, every instance of the shape in
/// the (materialized) topology is audited; otherwise `samples` random instances
/// are drawn from the formula adjacency with the given seed. Outside vertices
/// and edges are enumerated exhaustively around each instance.
///
/// Stars K_{1,r}: single vertex <= 2; edge <= 3 (r = 3); edge <= 4 with the
/// same-half and non-adjacency conclusions at equality; and, for families of
/// ceil(n/2)-1 stars, edge <= 2n-3. Paths P_k: single vertex <= ceil(k/2);
/// edge <= 2 floor(k/3) + (k mod 3) and <= k-1 for k >= 3.
VerificationReport neighborhood_bound_audit(const Topology& topology, const Shape& shape,
                                            std::optional<std::size_t> samples = std::nullopt,
                                            std::uint64_t seed = 0);

/// For n with kappa(n-1) >= 2: on `samples` random u, u^i and u^n share only u
/// for i <= n-2, and u^{n-1} and u^1 share only u. For kappa(n-1) = 1: with
/// u = 0...0 and v = u^{n-1}, u^i v^i is an edge for every i != n-1.
VerificationReport book_lemma_check(int n, std::size_t samples, std::uint64_t seed = 0);

/// Recursive construction and formula adjacency agree edge for edge.
VerificationReport equivalence_check(int n, int limit = MaterializedTopology::kDefaultLimit);

}  // namespace twisted
