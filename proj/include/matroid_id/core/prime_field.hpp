#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "matroid_id/core/rational.hpp"

namespace matroid_id {

// Element of the prime field F_P. The default modulus is the Mersenne prime
// 2^31 - 1, large enough that sample sets of size 10^6 * alpha fit inside it
// for every Jacobian this library builds.
template <std::uint32_t P>
class ModP {
  static_assert(P > 2 && P < (1u << 31), "modulus must fit in 31 bits");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr ModP() = default;
  constexpr ModP(std::int64_t v)  // NOLINT(google-explicit-constructor)
      : v_(static_cast<std::uint32_t>(((v % std::int64_t{P}) + P) % P)) {}

  static ModP from_raw(std::uint32_t v) {
    ModP r;
    r.v_ = v;
    return r;
  }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP& operator+=(ModP o) {
    v_ += o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  ModP& operator-=(ModP o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_;
    return *this;
  }
  ModP& operator*=(ModP o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % P);
    return *this;
  }
  ModP& operator/=(ModP o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  ModP operator-() const { return ModP{} - *this; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
  friend bool operator!=(ModP a, ModP b) { return a.v_ != b.v_; }

  ModP pow(std::uint64_t e) const {
    ModP base = *this, acc = 1;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(P - 2);
  }

  static ModP from_integer(const Integer& z) {
    Integer r = z % P;
    if (r < 0) r += P;
    return from_raw(static_cast<std::uint32_t>(r.get_ui()));
  }

  // Reduction of a rational whose denominator is a unit mod P.
  static ModP from_rational(const Rational& q) {
    ModP den = from_integer(q.get_den());
    if (den.is_zero()) throw std::domain_error("denominator vanishes mod p");
    return from_integer(q.get_num()) / den;
  }

  friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;
using Fp = ModP<kDefaultPrime>;

// Uniform interface used by the generic linear algebra.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <std::uint32_t P>
struct FieldTraits<ModP<P>> {
  static ModP<P> from_rational(const Rational& q) { return ModP<P>::from_rational(q); }
  static bool is_zero(ModP<P> x) { return x.is_zero(); }
};

}  // namespace matroid_id
