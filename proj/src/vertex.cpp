#include "twisted/vertex.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace twisted {

namespace {

using Extended = boost::multiprecision::cpp_bin_float_100;

// Ceiling of log2(n) - 2 log2 log2(n) for n >= 2, robust near integers.
long long twist_ceiling(std::uint64_t n) {
  const double lg = std::log2(static_cast<double>(n));
  const double value = lg - 2.0 * std::log2(lg);
  const double nearest = std::round(value);
  if (std::abs(value - nearest) > 1e-9) return static_cast<long long>(std::ceil(value));

  // n = 2^p gives log2 n = p exactly; if p = 2^s the value is p - 2s exactly.
  if (std::has_single_bit(n)) {
    const auto p = static_cast<std::uint64_t>(std::countr_zero(n));
    if (std::has_single_bit(p)) {
      return static_cast<long long>(p) - 2LL * std::countr_zero(p);
    }
  }
  const Extended lgx = boost::multiprecision::log(Extended(n)) / boost::multiprecision::log(Extended(2));
  const Extended vx = lgx - 2 * boost::multiprecision::log(lgx) / boost::multiprecision::log(Extended(2));
  return boost::multiprecision::ceil(vx).convert_to<long long>();
}

}  // namespace

int kappa(std::uint64_t n) {
  if (n == 0) throw std::domain_error("kappa: n must be positive");
  if (n == 1) return 0;
  const long long c = twist_ceiling(n);
  return static_cast<int>(c < 1 ? 1 : c);
}

Vertex::Vertex(int n) : n_(n) {
  if (n < 1 || n > kMaxBits) throw std::domain_error("Vertex: length must be in [1, 128]");
}

Vertex Vertex::from_string(std::string_view bits) {
  Vertex v(static_cast<int>(bits.size()));
  for (int i = 1; i <= v.n_; ++i) {
    const char c = bits[static_cast<std::size_t>(i - 1)];
    if (c != '0' && c != '1') throw std::domain_error("Vertex: expected only '0' and '1'");
    v.set(i, c == '1');
  }
  return v;
}

Vertex Vertex::from_id(int n, std::uint64_t id) {
  if (n > 64) throw std::domain_error("Vertex::from_id: n must be <= 64");
  Vertex v(n);
  if (n < 64 && (id >> n) != 0) throw std::domain_error("Vertex::from_id: id out of range");
  v.words_[0] = id;
  return v;
}

void Vertex::check_index(int i) const {
  if (i < 1 || i > n_) throw std::domain_error("Vertex: bit index out of range");
}

bool Vertex::bit(int i) const {
  check_index(i);
  const int p = n_ - i;
  return ((words_[p >> 6] >> (p & 63)) & 1U) != 0;
}

void Vertex::set(int i, bool value) {
  check_index(i);
  const int p = n_ - i;
  const std::uint64_t mask = std::uint64_t{1} << (p & 63);
  if (value) {
    words_[p >> 6] |= mask;
  } else {
    words_[p >> 6] &= ~mask;
  }
}

void Vertex::flip(int i) {
  check_index(i);
  const int p = n_ - i;
  words_[p >> 6] ^= std::uint64_t{1} << (p & 63);
}

std::uint64_t Vertex::id() const {
  if (n_ > 64) throw std::domain_error("Vertex::id: n must be <= 64");
  return words_[0];
}

std::string Vertex::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 1; i <= n_; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

Vertex Vertex::slice(int lo, int hi) const {
  if (lo < 1 || lo > hi || hi > n_) throw std::domain_error("Vertex::slice: bad range");
  Vertex out(hi - lo + 1);
  for (int i = lo; i <= hi; ++i) out.set(i - lo + 1, bit(i));
  return out;
}

void Vertex::splice(int at, const Vertex& part) {
  if (at < 1 || at + part.n_ - 1 > n_) throw std::domain_error("Vertex::splice: bad range");
  for (int k = 1; k <= part.n_; ++k) set(at + k - 1, part.bit(k));
}

std::size_t Vertex::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(words_[0]);
  h ^= std::hash<std::uint64_t>{}(words_[1]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(n_);
}

BitRangeView::BitRangeView(const Vertex& source, int lo, int hi) : source_(&source), lo_(lo), hi_(hi) {
  if (lo < 1 || lo > hi || hi > source.size()) throw std::domain_error("BitRangeView: need 1 <= lo <= hi <= n");
}

std::vector<bool> xor_range(const BitRangeView& a, const BitRangeView& b) {
  if (a.width() != b.width()) throw std::domain_error("xor_range: width mismatch");
  std::vector<bool> out(static_cast<std::size_t>(a.width()));
  for (int k = 1; k <= a.width(); ++k) out[static_cast<std::size_t>(k - 1)] = a[k] != b[k];
  return out;
}

Vertex phi(const Vertex& x) {
  const int n = x.size();
  const int k = kappa(static_cast<std::uint64_t>(n));
  if (k == 0) return x;
  const auto folded = xor_range(BitRangeView(x, 1, k), BitRangeView(x, n - k + 1, n));
  Vertex out = x;
  for (int j = 1; j <= k; ++j) out.set(j, folded[static_cast<std::size_t>(j - 1)]);
  return out;
}

}  // namespace twisted
