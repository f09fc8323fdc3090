#include <doctest.h>

#include <random>

#include "support.hpp"
#include "twisted/oracles.hpp"
#include "twisted/structures.hpp"

using namespace twisted;

namespace {

Vertex v(const char* s) { return Vertex::from_string(s); }

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// N(u) lies inside the family, u does not, and the members are embedded
// copies of the shape (disjoint unless `may_overlap`).
void check_isolates(const CutFamily& f, const Vertex& u, bool may_overlap = false) {
  const ImplicitTopology t(u.size());
  REQUIRE(f.well_formed(t));
  if (!may_overlap) REQUIRE(f.pairwise_disjoint());
  const auto removed = f.vertex_union();
  REQUIRE_FALSE(std::binary_search(removed.begin(), removed.end(), u));
  for (const auto& w : t.neighbors(u)) REQUIRE(std::binary_search(removed.begin(), removed.end(), w));
  for (const auto& m : f.members) REQUIRE(m.shape() == f.shape);
}

}  // namespace

TEST_CASE("shape parsing and names") {
  CHECK(Shape::parse("k13") == Shape::star(3));
  CHECK(Shape::parse("K1,4") == Shape::star(4));
  CHECK(Shape::parse("P3") == Shape::path(3));
  CHECK(Shape::parse("k12") == Shape::path(3));
  CHECK(Shape::star(1) == Shape::path(2));
  CHECK(Shape::star(3).name() == "K1,3");
  CHECK(Shape::path(5).name() == "P5");
  CHECK(Shape::star(4).vertex_count() == 5);
  CHECK_THROWS(Shape::parse("q3"));
  CHECK_THROWS(Shape::parse("p0"));
}

TEST_CASE("subshapes") {
  CHECK(is_subshape(Shape::path(2), Shape::star(3)));
  CHECK(is_subshape(Shape::star(3), Shape::star(4)));
  CHECK_FALSE(is_subshape(Shape::path(4), Shape::star(4)));
  CHECK_FALSE(is_subshape(Shape::star(3), Shape::path(6)));
  CHECK(is_subshape(Shape::path(3), Shape::path(5)));
  const auto subs = subshapes(Shape::star(4));
  CHECK(subs == std::vector<Shape>{Shape::star(4), Shape::star(3), Shape::path(3), Shape::path(2), Shape::path(1)});
}

TEST_CASE("instance canonical form") {
  const auto p = StructureInstance::path({v("0011"), v("0001"), v("0000")});
  CHECK(p.to_string() == "path 0000 0001 0011");
  const auto s = StructureInstance::star(v("0000"), {v("0100"), v("1000"), v("0001")});
  CHECK(s.to_string() == "star 0000 0001 0100 1000");
  CHECK(s.shape() == Shape::star(3));
  CHECK(StructureInstance::star(v("0000"), {v("1000")}).shape() == Shape::path(2));
  const auto h4 = MaterializedTopology::build_recursive(4);
  CHECK(p.embedded_in(h4));
  CHECK_FALSE(StructureInstance::path({v("0000"), v("0011")}).embedded_in(h4));
}

TEST_CASE("instance enumeration counts") {
  const auto h2 = MaterializedTopology::build_recursive(2);
  const auto h4 = MaterializedTopology::build_recursive(4);
  CHECK(enumerate_stars(h4, 3).size() == 64);
  CHECK(enumerate_stars(h2, 1).size() == 4);
  CHECK(enumerate_stars(h4, 4).size() == 16);
  CHECK(enumerate_paths(h2, 2).size() == 4);
  CHECK(enumerate_paths(h2, 3).size() == 4);
  CHECK(enumerate_paths(h4, 3).size() == 96);
  CHECK(enumerate_paths(h4, 1).size() == 16);
}

TEST_CASE("path enumeration matches a brute-force walk count") {
  // Ordered simple walks on k vertices, counted by DFS over the reference
  // adjacency, are exactly twice the number of paths for k >= 2.
  for (int n = 2; n <= 5; ++n) {
    const auto adj = ref::graph(n);
    const auto g = MaterializedTopology::build_recursive(n);
    for (int k = 2; k <= 6; ++k) {
      std::uint64_t walks = 0;
      std::vector<std::uint32_t> seq;
      auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == k) {
          ++walks;
          return;
        }
        for (auto w : adj[seq.back()]) {
          if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
          seq.push_back(w);
          self(self);
          seq.pop_back();
        }
      };
      for (std::uint32_t s = 0; s < adj.size(); ++s) {
        seq.assign(1, s);
        dfs(dfs);
      }
      CHECK_MESSAGE(enumerate_paths(g, k).size() * 2 == walks, "n=" << n << " k=" << k);
    }
  }
}

TEST_CASE("resolve_chain") {
  const auto u = v("0010");
  CHECK(resolve_chain(u, "3,1,1*").to_string() == "1101");
  CHECK(resolve_chain(u, "4,1*").to_string() == "1111");
  CHECK_THROWS_AS(resolve_chain(u, ""), std::invalid_argument);
  CHECK_THROWS_AS(resolve_chain(u, "1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_chain(u, "x"), std::invalid_argument);
  CHECK_THROWS(resolve_chain(u, "5"));
  CHECK_THROWS(resolve_chain(u, "3,2"));
}

TEST_CASE("K1,3 cut") {
  const auto u = v("0000");
  const auto f = star_cut_k13(u);
  CHECK(f.size() == 2);
  check_isolates(f, u);
  const auto result = components_after_removal(MaterializedTopology::build_recursive(4), f.vertex_union());
  CHECK(result.component_count == 2);
  CHECK(result.smallest_component == std::vector<Vertex>{u});
  CHECK(result.component_sizes == std::vector<std::size_t>{1, 7});

  const auto h5 = MaterializedTopology::build_recursive(5);
  for (std::uint32_t id = 0; id < h5.vertex_count(); ++id) {
    const auto r = components_after_removal(h5, star_cut_k13(h5.vertex(id)).vertex_union());
    REQUIRE(r.component_count == 2);
    REQUIRE(r.smallest_component == std::vector<Vertex>{h5.vertex(id)});
  }
  CHECK_THROWS(star_cut_k13(v("000")));
}

TEST_CASE("K1,4 cut") {
  const auto u = v("0000");
  CHECK(star_cut_k14(u).size() == 2);
  check_isolates(star_cut_k14(u), u, true);
  const auto h6 = MaterializedTopology::build_recursive(6);
  for (std::uint32_t id = 0; id < h6.vertex_count(); ++id) {
    const auto r = components_after_removal(h6, star_cut_k14(h6.vertex(id)).vertex_union());
    REQUIRE(r.component_count == 2);
    REQUIRE(r.smallest_component == std::vector<Vertex>{h6.vertex(id)});
  }
}

TEST_CASE("K1,4 cut members can overlap for n = 4, 5") {
  // At n = 5 the last two stars share u^{3,1,1} = u^{5,3*} for every u; at
  // n = 4 the two stars share a leaf for some u. The union still isolates u.
  const auto f5 = star_cut_k14(Vertex(5));
  CHECK_FALSE(f5.pairwise_disjoint());
  CHECK(resolve_chain(Vertex(5), "3,1,1") == resolve_chain(Vertex(5), "5,3*"));
  CHECK(resolve_chain(Vertex(5), "3,1,1").to_string() == "00111");
  const auto h4 = MaterializedTopology::build_recursive(4);
  int overlapping = 0;
  for (std::uint32_t id = 0; id < 16; ++id) {
    const auto f = star_cut_k14(h4.vertex(id));
    overlapping += f.pairwise_disjoint() ? 0 : 1;
    check_isolates(f, h4.vertex(id), true);
  }
  CHECK(overlapping > 0);
  CHECK(overlapping < 16);
  const auto h5 = MaterializedTopology::build_recursive(5);
  for (std::uint32_t id = 0; id < h5.vertex_count(); ++id) {
    const auto f = star_cut_k14(h5.vertex(id));
    CHECK_FALSE(f.pairwise_disjoint());
    check_isolates(f, h5.vertex(id), true);
    const auto r = components_after_removal(h5, f.vertex_union());
    REQUIRE(r.smallest_component == std::vector<Vertex>{h5.vertex(id)});
  }
}

TEST_CASE("star cuts on random vertices up to n = 64") {
  std::mt19937_64 rng(1);
  for (int n = 4; n <= 64; ++n) {
    for (int s = 0; s < 10; ++s) {
      const auto u = Vertex::from_string(ref::random_bits(n, rng));
      const auto a = star_cut_k13(u);
      const auto b = star_cut_k14(u);
      REQUIRE(static_cast<long long>(a.size()) == ceil_div(n, 2));
      REQUIRE(static_cast<long long>(b.size()) == ceil_div(n, 2));
      check_isolates(a, u);
      check_isolates(b, u, n <= 5);
    }
  }
}

TEST_CASE("P2 cut with kappa(n-1) = 1") {
  const auto u = v("0000");
  const auto f = path_cut_p2(u);
  CHECK(f.size() == 3);
  for (const auto& m : f.members) CHECK(m.vertices().size() == 2);
  const auto r = components_after_removal(MaterializedTopology::build_recursive(4), f.vertex_union());
  CHECK(r.smallest_component == std::vector<Vertex>{v("0000"), v("0010")});
  for (int n = 3; n <= 8; ++n) {
    const Vertex z(n);
    const auto fam = path_cut_p2(z);
    CHECK(fam.size() == static_cast<std::size_t>(n - 1));
    const auto res = components_after_removal(MaterializedTopology::build_recursive(n), fam.vertex_union());
    CHECK(res.disconnected());
    std::vector<Vertex> pair{z, neighbor(z, n - 1)};
    std::sort(pair.begin(), pair.end());
    CHECK(res.smallest_component == pair);
  }
  CHECK_THROWS(path_cut_p2(v("0001")));
}

TEST_CASE("P2 cut with kappa(n-1) >= 2") {
  std::mt19937_64 rng(2);
  for (int n : {81, 90, 100, 128}) {
    for (int s = 0; s < 20; ++s) {
      const auto u = Vertex::from_string(ref::random_bits(n, rng));
      const auto f = path_cut_p2(u);
      CHECK(f.size() == static_cast<std::size_t>(n));
      check_isolates(f, u);
    }
  }
}

TEST_CASE("Pk cut sizes and validity") {
  CHECK(path_cut_pk(v("0000"), 3).size() == 2);
  CHECK(path_cut_pk(Vertex(6), 4).size() == 3);
  CHECK(path_cut_pk(Vertex(5), 3).size() == 3);
  std::mt19937_64 rng(4);
  for (int n = 4; n <= 32; ++n) {
    for (int k = 3; k <= n; ++k) {
      const long long expected = k % 2 ? ceil_div(2LL * n, k + 1) : ceil_div(2LL * n, k);
      for (int s = 0; s < 3; ++s) {
        const auto u = Vertex::from_string(ref::random_bits(n, rng));
        const auto f = path_cut_pk(u, k);
        REQUIRE_MESSAGE(static_cast<long long>(f.size()) == expected, "n=" << n << " k=" << k);
        check_isolates(f, u);
      }
    }
  }
  CHECK_THROWS(path_cut_pk(Vertex(5), 2));
  CHECK_THROWS(path_cut_pk(Vertex(5), 6));
}

TEST_CASE("constructed cuts isolate u in the materialized graph, n <= 8") {
  for (int n = 4; n <= 8; ++n) {
    const auto g = MaterializedTopology::build_recursive(n);
    const Vertex u(n);
    std::vector<CutFamily> families{star_cut_k13(u), star_cut_k14(u)};
    for (int k = 3; k <= n; ++k) families.push_back(path_cut_pk(u, k));
    for (const auto& f : families) {
      const auto r = components_after_removal(g, f.vertex_union());
      REQUIRE(r.disconnected());
      REQUIRE(r.smallest_component == std::vector<Vertex>{u});
    }
  }
}

TEST_CASE("family text") {
  const auto text = star_cut_k13(v("0000")).to_text();
  CHECK(text.rfind("family provenance=star_cut_k13 shape=K1,3 mode=structure size=2\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}
