#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "support.hpp"
#include "twisted/structures.hpp"
#include "twisted/topology.hpp"

using namespace twisted;

namespace {

Vertex v(const char* s) { return Vertex::from_string(s); }

std::vector<Vertex> common_neighbors(const Topology& t, const Vertex& a, const Vertex& b) {
  auto na = t.neighbors(a);
  auto nb = t.neighbors(b);
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  std::vector<Vertex> out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TEST_CASE("neighbor examples from u = 0010") {
  const auto u = v("0010");
  CHECK(neighbor(u, 1).to_string() == "1010");
  CHECK(neighbor(u, 3).to_string() == "0000");
  CHECK(neighbor(neighbor(u, 2), 3).to_string() == "0100");
  CHECK(neighbor(neighbor(neighbor(u, 2), 3), 1).to_string() == "1100");
}

TEST_CASE("worked example: eleven composite neighbors of 0010") {
  const auto u = v("0010");
  const std::pair<const char*, const char*> table[] = {
      {"1", "1010"},   {"2", "0110"},     {"3", "0000"},     {"4", "0011"},
      {"1,1", "1110"}, {"2,1*", "1110"},  {"2,1", "0100"},   {"3,1", "0001"},
      {"3,1*", "1000"}, {"4,1*", "1111"}, {"2,1,1*", "1100"}, {"3,1,1*", "1101"},
  };
  for (const auto& [chain, expected] : table) CHECK_MESSAGE(resolve_chain(u, chain).to_string() == expected, chain);
}

TEST_CASE("neighbor matches the definition on random vertices") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 3000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 128);
    const auto s = ref::random_bits(n, rng);
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    REQUIRE(neighbor(Vertex::from_string(s), i).to_string() == ref::neighbor(s, i));
  }
}

TEST_CASE("neighbor is an involution per index") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 3000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 128);
    const auto u = Vertex::from_string(ref::random_bits(n, rng));
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    REQUIRE(neighbor(neighbor(u, i), i) == u);
  }
}

TEST_CASE("is_adjacent") {
  CHECK(is_adjacent(v("0010"), v("1010")));
  CHECK_FALSE(is_adjacent(v("0010"), v("0010")));
  CHECK_FALSE(is_adjacent(v("0010"), v("1111")));
  CHECK_THROWS(is_adjacent(v("0010"), v("101")));
}

TEST_CASE("build_recursive small cases") {
  const auto h1 = MaterializedTopology::build_recursive(1);
  CHECK(h1.vertex_count() == 2);
  CHECK(h1.edges() == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}});

  const auto h2 = MaterializedTopology::build_recursive(2);
  CHECK(h2.edge_count() == 4);
  for (std::uint32_t id = 0; id < 4; ++id) CHECK(h2.adjacency(id).size() == 2);
  CHECK_FALSE(h2.is_adjacent(v("00"), v("11")));

  const auto h4 = MaterializedTopology::build_recursive(4);
  CHECK(h4.vertex_count() == 16);
  CHECK(h4.edge_count() == 32);

  CHECK_THROWS_AS(MaterializedTopology::build_recursive(0), std::domain_error);
  CHECK_THROWS_AS(MaterializedTopology::build_recursive(9, 8), std::length_error);
}

TEST_CASE("recursive construction equals the definition, exhaustive n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    const auto built = MaterializedTopology::build_recursive(n);
    const auto reference = ref::graph(n);
    CHECK(built.edge_count() == static_cast<std::uint64_t>(n) << (n - 1));
    for (std::uint32_t id = 0; id < built.vertex_count(); ++id) {
      const auto adj = built.adjacency(id);
      REQUIRE(adj.size() == static_cast<std::size_t>(n));
      REQUIRE(std::equal(adj.begin(), adj.end(), reference[id].begin(), reference[id].end()));
    }
  }
}

TEST_CASE("materialized neighbor and is_adjacent agree with the formula") {
  for (int n = 1; n <= 8; ++n) {
    const auto built = MaterializedTopology::build_recursive(n);
    const ImplicitTopology formula(n);
    for (std::uint32_t id = 0; id < built.vertex_count(); ++id) {
      const auto u = built.vertex(id);
      CHECK(built.neighbors(u) == formula.neighbors(u));
      for (std::uint32_t w = 0; w < built.vertex_count(); ++w) {
        REQUIRE(built.is_adjacent(u, built.vertex(w)) == formula.is_adjacent(u, built.vertex(w)));
      }
    }
  }
}

TEST_CASE("triangle-free with at most two common neighbors, exhaustive n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto g = MaterializedTopology::build_recursive(n);
    for (std::uint32_t a = 0; a < g.vertex_count(); ++a) {
      for (auto b : g.adjacency(a)) {
        const auto aa = g.adjacency(a);
        const auto bb = g.adjacency(b);
        std::vector<std::uint32_t> shared;
        std::set_intersection(aa.begin(), aa.end(), bb.begin(), bb.end(), std::back_inserter(shared));
        REQUIRE(shared.empty());
      }
      for (std::uint32_t b = a + 1; b < g.vertex_count(); ++b) {
        const auto aa = g.adjacency(a);
        const auto bb = g.adjacency(b);
        std::vector<std::uint32_t> shared;
        std::set_intersection(aa.begin(), aa.end(), bb.begin(), bb.end(), std::back_inserter(shared));
        REQUIRE(shared.size() <= 2);
      }
    }
  }
}

TEST_CASE("N(u^i) and N(u^{i+1}) meet exactly in {u, u^{i,1}}") {
  auto check = [](const Topology& t, const Vertex& u, int i) {
    auto shared = common_neighbors(t, neighbor(u, i), neighbor(u, i + 1));
    std::vector<Vertex> expected{u, resolve_chain(u, std::to_string(i) + ",1")};
    std::sort(expected.begin(), expected.end());
    return shared == expected;
  };
  SUBCASE("exhaustive n <= 8") {
    for (int n = 2; n <= 8; ++n) {
      const auto g = MaterializedTopology::build_recursive(n);
      for (std::uint32_t id = 0; id < g.vertex_count(); ++id) {
        for (int i = 1; i < n; ++i) REQUIRE_MESSAGE(check(g, g.vertex(id), i), "n=" << n << " id=" << id << " i=" << i);
      }
    }
  }
  SUBCASE("sampled n <= 64") {
    std::mt19937_64 rng(0);
    for (int n = 9; n <= 64; ++n) {
      const ImplicitTopology t(n);
      for (int s = 0; s < 40; ++s) {
        const auto u = Vertex::from_string(ref::random_bits(n, rng));
        for (int i = 1; i < n; ++i) REQUIRE_MESSAGE(check(t, u, i), "n=" << n << " u=" << u.to_string());
      }
    }
  }
}

TEST_CASE("neighborhood sizes") {
  for (int n = 1; n <= 6; ++n) {
    const auto g = MaterializedTopology::build_recursive(n);
    for (std::uint32_t id = 0; id < g.vertex_count(); ++id) {
      const std::vector<Vertex> single{g.vertex(id)};
      CHECK(g.neighborhood(single).size() == static_cast<std::size_t>(n));
      for (auto w : g.adjacency(id)) {
        const std::vector<Vertex> edge{g.vertex(id), g.vertex(w)};
        CHECK(g.neighborhood(edge).size() == static_cast<std::size_t>(2 * n - 2));
      }
    }
  }
  const auto h1 = MaterializedTopology::build_recursive(1);
  const std::vector<Vertex> both{v("0"), v("1")};
  CHECK(h1.neighborhood(both).empty());
}

TEST_CASE("edge list and DOT output") {
  std::ostringstream edges;
  write_edge_list(edges, MaterializedTopology::build_recursive(1));
  CHECK(edges.str() == "0 1\n");

  std::ostringstream c4;
  write_edge_list(c4, MaterializedTopology::build_recursive(2));
  CHECK(c4.str() == "00 01\n00 10\n01 11\n10 11\n");

  std::ostringstream dot;
  write_dot(dot, MaterializedTopology::build_recursive(2));
  const auto text = dot.str();
  CHECK(text.rfind("graph H2 {", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') >= 4 + 4 + 2);

  std::ostringstream again;
  write_dot(again, MaterializedTopology::build_recursive(2));
  CHECK(again.str() == text);
}
