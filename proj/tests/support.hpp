#pragma once

// Independent reference implementations used as oracles by the unit tests.
// None of these call into the library code they check.

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "twisted/vertex.hpp"

namespace ref {

// ceil(f) for f = log2 n - 2 log2 log2 n is the least integer c with
// 2^c * (log2 n)^2 >= n. Evaluated in long double, then clamped.
inline int kappa(std::uint64_t n) {
  if (n == 1) return 0;
  const long double l = std::log2(static_cast<long double>(n));
  int c = -64;
  while (std::ldexp(l * l, c) < static_cast<long double>(n)) ++c;
  return c < 1 ? 1 : c;
}

// Bit strings as std::string of '0'/'1', bit 1 leftmost.
inline std::string phi(const std::string& x) {
  const int n = static_cast<int>(x.size());
  const int k = kappa(static_cast<std::uint64_t>(n));
  std::string y = x;
  for (int j = 0; j < k; ++j) y[j] = (x[j] != x[n - k + j]) ? '1' : '0';
  return y;
}

// The i-neighbor straight from the definition: prefix kept, bit i flipped,
// suffix replaced by phi of the suffix.
inline std::string neighbor(const std::string& u, int i) {
  const auto n = u.size();
  std::string w = u.substr(0, i - 1);
  w += u[i - 1] == '0' ? '1' : '0';
  if (static_cast<std::size_t>(i) < n) w += phi(u.substr(i));
  return w;
}

inline std::string random_bits(int n, std::mt19937_64& rng) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (auto& c : s) c = (rng() & 1U) ? '1' : '0';
  return s;
}

inline std::string bits_of(std::uint64_t id, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = ((id >> (n - 1 - i)) & 1U) ? '1' : '0';
  return s;
}

// Adjacency lists of H_n by id, built from ref::neighbor.
inline std::vector<std::set<std::uint32_t>> graph(int n) {
  std::vector<std::set<std::uint32_t>> adj(std::size_t{1} << n);
  for (std::uint32_t id = 0; id < adj.size(); ++id) {
    const auto u = bits_of(id, n);
    for (int i = 1; i <= n; ++i) adj[id].insert(static_cast<std::uint32_t>(std::stoull(neighbor(u, i), nullptr, 2)));
  }
  return adj;
}

// Number of components of the graph minus `removed` (bitmask over ids, n <= 6).
inline int components(const std::vector<std::set<std::uint32_t>>& adj, std::uint64_t removed) {
  const auto count = adj.size();
  std::vector<char> seen(count, 0);
  int comps = 0;
  for (std::uint32_t s = 0; s < count; ++s) {
    if (seen[s] || ((removed >> s) & 1U)) continue;
    ++comps;
    std::vector<std::uint32_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v]) {
        if (!seen[w] && !((removed >> w) & 1U)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

}  // namespace ref
