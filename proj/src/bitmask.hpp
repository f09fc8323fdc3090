#pragma once

// Fixed-width vertex sets for graphs of up to 64*W vertices.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "twisted/topology.hpp"

namespace twisted::detail {

template <int W>
struct Mask {
  std::array<std::uint64_t, W> words{};

  void set(std::uint32_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint32_t i) const { return ((words[i >> 6] >> (i & 63)) & 1U) != 0; }

  bool empty() const {
    for (auto w : words) {
      if (w != 0) return false;
    }
    return true;
  }
  int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }
  int first() const {
    for (int k = 0; k < W; ++k) {
      if (words[k] != 0) return 64 * k + std::countr_zero(words[k]);
    }
    return -1;
  }
  bool intersects(const Mask& o) const {
    for (int k = 0; k < W; ++k) {
      if ((words[k] & o.words[k]) != 0) return true;
    }
    return false;
  }

  Mask& operator|=(const Mask& o) {
    for (int k = 0; k < W; ++k) words[k] |= o.words[k];
    return *this;
  }
  friend Mask operator|(Mask a, const Mask& b) { return a |= b; }
  friend Mask and_not(const Mask& a, const Mask& b) {
    Mask r;
    for (int k = 0; k < W; ++k) r.words[k] = a.words[k] & ~b.words[k];
    return r;
  }
  friend bool operator==(const Mask&, const Mask&) = default;
  friend auto operator<=>(const Mask&, const Mask&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (int k = 0; k < W; ++k) {
      for (std::uint64_t w = words[k]; w != 0; w &= w - 1) f(static_cast<std::uint32_t>(64 * k + std::countr_zero(w)));
    }
  }
};

/// Bit-parallel flood fill over a materialized topology.
template <int W>
class MaskGraph {
 public:
  explicit MaskGraph(const MaterializedTopology& topology) : neighbors_(topology.vertex_count()) {
    for (std::uint32_t v = 0; v < topology.vertex_count(); ++v) {
      full_.set(v);
      for (auto w : topology.adjacency(v)) neighbors_[v].set(w);
    }
  }

  const Mask<W>& full() const { return full_; }

  /// True when removing `removed` leaves at least two components.
  bool disconnects(const Mask<W>& removed) const {
    const Mask<W> alive = and_not(full_, removed);
    const int start = alive.first();
    if (start < 0) return false;
    Mask<W> reach;
    reach.set(static_cast<std::uint32_t>(start));
    Mask<W> frontier = reach;
    while (!frontier.empty()) {
      Mask<W> next;
      frontier.for_each([&](std::uint32_t v) { next |= neighbors_[v]; });
      for (int k = 0; k < W; ++k) next.words[k] &= alive.words[k] & ~reach.words[k];
      reach |= next;
      frontier = next;
    }
    return reach != alive;
  }

 private:
  std::vector<Mask<W>> neighbors_;
  Mask<W> full_;
};

}  // namespace twisted::detail
