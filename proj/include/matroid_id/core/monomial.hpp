#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace matroid_id {

inline constexpr std::size_t kMaxVariables = 64;

// Exponent vector over at most kMaxVariables indeterminates, one byte per
// variable. Variable i lives in byte (7 - i % 8) of word i / 8, so comparing
// the words as unsigned integers is the lexicographic order with x0 > x1 > ...
class Monomial {
 public:
  static constexpr std::size_t kWords = kMaxVariables / 8;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;

  static Monomial variable(std::size_t i, unsigned exponent = 1) {
    Monomial m;
    m.set(i, exponent);
    return m;
  }

  unsigned get(std::size_t i) const {
    return static_cast<unsigned>((words_[i >> 3] >> shift(i)) & 0xffu);
  }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVariables) throw std::out_of_range("variable index exceeds kMaxVariables");
    if (e > kMaxExponent) throw std::overflow_error("exponent exceeds 255");
    degree_ = degree_ - get(i) + e;
    std::uint64_t mask = std::uint64_t{0xff} << shift(i);
    words_[i >> 3] = (words_[i >> 3] & ~mask) | (std::uint64_t{e} << shift(i));
  }

  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.degree_ = a.degree_ + b.degree_;
    if (r.degree_ <= kMaxExponent) {
      // No byte can carry into its neighbour.
      for (std::size_t w = 0; w < kWords; ++w) r.words_[w] = a.words_[w] + b.words_[w];
      return r;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = a.get(i) + b.get(i);
      if (e > kMaxExponent) throw std::overflow_error("exponent exceeds 255");
      if (e) r.words_[i >> 3] |= std::uint64_t{e} << shift(i);
    }
    return r;
  }

  bool divides(const Monomial& b) const {
    if (degree_ > b.degree_) return false;
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t x = words_[w], y = b.words_[w];
      if (x == 0) continue;
      for (int s = 0; s < 64; s += 8)
        if (((x >> s) & 0xffu) > ((y >> s) & 0xffu)) return false;
    }
    return true;
  }

  // b / *this; requires divides(b).
  Monomial quotient_of(const Monomial& b) const {
    Monomial r;
    r.degree_ = b.degree_ - degree_;
    // Bytewise subtraction cannot borrow because every byte of b >= ours.
    for (std::size_t w = 0; w < kWords; ++w) r.words_[w] = b.words_[w] - words_[w];
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = std::min(a.get(i), b.get(i));
      if (e) r.set(i, e);
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.words_ != b.words_; }
  // Lexicographic with x0 the most significant variable.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.words_ < b.words_; }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static constexpr unsigned shift(std::size_t i) { return static_cast<unsigned>(56 - 8 * (i & 7)); }

  std::array<std::uint64_t, kWords> words_{};
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace matroid_id
