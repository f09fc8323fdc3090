#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace twisted {

/// Twist width used by the permutation phi on strings of length n.
///
/// kappa(1) = 0, otherwise max{1, ceil(log2 n - 2 log2 log2 n)}. Values that
/// land within 1e-9 of an integer are re-evaluated in extended precision so
/// the ceiling never flips on rounding noise. Throws std::domain_error for
/// n = 0.
int kappa(std::uint64_t n);

/// A binary string of fixed length n (1 <= n <= 128).
///
/// Bits are addressed 1-based from the left, so bit(1) is the leftmost
/// character of to_string(). Ordering is lexicographic on the string, which
/// coincides with the numeric order of id() for n <= 64.
class Vertex {
 public:
  static constexpr int kMaxBits = 128;

  Vertex() = default;
  /// All-zeros string of length n.
  explicit Vertex(int n);

  static Vertex from_string(std::string_view bits);
  /// Bit 1 is the most significant bit of id. Requires n <= 64.
  static Vertex from_id(int n, std::uint64_t id);

  int size() const { return n_; }
  bool bit(int i) const;
  void set(int i, bool value);
  void flip(int i);

  std::uint64_t id() const;
  std::string to_string() const;

  /// Copy of bits lo..hi (inclusive) as a new vertex of length hi - lo + 1.
  Vertex slice(int lo, int hi) const;
  /// Overwrite bits starting at position `at` with the bits of `part`.
  void splice(int at, const Vertex& part);

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

  std::size_t hash() const;

 private:
  void check_index(int i) const;

  int n_ = 0;
  // Bit i lives at position n - i of the 128-bit value {words_[1], words_[0]}.
  std::array<std::uint64_t, 2> words_{};
};

/// Read-only window x[lo..hi] over a vertex, 1-based and inclusive.
class BitRangeView {
 public:
  BitRangeView(const Vertex& source, int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int width() const { return hi_ - lo_ + 1; }
  /// k-th bit of the window, 1-based.
  bool operator[](int k) const { return source_->bit(lo_ + k - 1); }

 private:
  const Vertex* source_;
  int lo_;
  int hi_;
};

/// Elementwise XOR of two windows of equal width.
std::vector<bool> xor_range(const BitRangeView& a, const BitRangeView& b);

/// phi(x)[1..k] = x[1..k] XOR x[n-k+1..n] with k = kappa(n); the rest is
/// copied. phi is an involution.
Vertex phi(const Vertex& x);

}  // namespace twisted

template <>
struct std::hash<twisted::Vertex> {
  std::size_t operator()(const twisted::Vertex& v) const noexcept { return v.hash(); }
};
