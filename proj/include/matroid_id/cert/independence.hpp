#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "matroid_id/core/poly_matrix.hpp"

namespace matroid_id {

using Rng = std::mt19937_64;

// Uniform point of {1, ..., bound}^n carried in the field F.
template <class F>
std::vector<F> random_point(std::size_t n, const Integer& bound, Rng& rng) {
  std::vector<F> pt;
  pt.reserve(n);
  if (bound.fits_ulong_p()) {
    std::uniform_int_distribution<unsigned long> pick(1, bound.get_ui());
    for (std::size_t i = 0; i < n; ++i) pt.push_back(FieldTraits<F>::from_rational(Rational(pick(rng))));
    return pt;
  }
  // Sample sets this large only appear through user configuration.
  gmp_randclass g(gmp_randinit_default);
  g.seed(static_cast<unsigned long>(rng()));
  for (std::size_t i = 0; i < n; ++i) pt.push_back(FieldTraits<F>::from_rational(Rational(g.get_z_range(bound) + 1)));
  return pt;
}

// Default screening range: the whole of F_p minus zero.
inline Integer default_screen_bound() { return Integer(Fp::modulus - 1); }

// Rank of the S-columns of J at the given point equals |S|.
template <class F>
bool is_independent_numeric(const PolyMatrix& J, std::span<const std::size_t> S, std::span<const F> point) {
  if (S.empty()) return true;
  if (S.size() > J.rows()) return false;
  return scalar_rank(J.evaluate_columns(point, S)) == S.size();
}

template <class F>
bool is_independent_numeric(const PolyMatrix& J, const std::vector<std::size_t>& S, const std::vector<F>& point) {
  return is_independent_numeric<F>(J, std::span<const std::size_t>(S), std::span<const F>(point));
}

namespace detail {

// Reducing an integer evaluation mod p can only lower rank, so full rank at
// an integer point mod p proves full rank of the integer matrix, which in turn
// proves a nonzero minor over Q(theta).
inline bool independence_witness(const PolyMatrix& J, std::span<const std::size_t> S, std::uint64_t seed,
                                 int attempts) {
  Rng rng(seed);
  for (int a = 0; a < attempts; ++a) {
    auto pt = random_point<Fp>(J.num_variables(), default_screen_bound(), rng);
    if (is_independent_numeric<Fp>(J, S, pt)) return true;
  }
  return false;
}

}  // namespace detail

// Exact test over Q(theta). A full-rank evaluation at an integer point settles
// independence; otherwise the columns go through fraction-free elimination.
inline bool is_independent_symbolic(const PolyMatrix& J, std::span<const std::size_t> S) {
  if (S.empty()) return true;
  if (S.size() > J.rows()) return false;
  if (detail::independence_witness(J, S, 0x5eedULL + S.size(), 2)) return true;
  return symbolic_rank(J.select_columns(S)) == S.size();
}

inline bool is_independent_symbolic(const PolyMatrix& J, const std::vector<std::size_t>& S) {
  return is_independent_symbolic(J, std::span<const std::size_t>(S));
}

// Rank of J over Q(theta) found by evaluation; a lower bound on the symbolic
// rank that is attained with high probability.
inline std::size_t numeric_rank(const PolyMatrix& J, Rng& rng) {
  auto pt = random_point<Fp>(J.num_variables(), default_screen_bound(), rng);
  return scalar_rank(J.evaluate<Fp>(pt));
}

// Exact rank of the Jacobian, i.e. the dimension of the model. A full-rank
// evaluation is conclusive; anything less is confirmed symbolically.
inline std::size_t model_dimension(const PolyMatrix& J) {
  Rng rng(0xd1ceULL);
  std::size_t r = 0;
  for (int a = 0; a < 2; ++a) r = std::max(r, numeric_rank(J, rng));
  if (r == std::min(J.rows(), J.cols())) return r;
  return symbolic_rank(J);
}

}  // namespace matroid_id
