#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroid_id/core/matrix.hpp"
#include "matroid_id/core/polynomial.hpp"

namespace matroid_id {

// Matrix of polynomials over one shared variable list. Jacobians are stored
// with rows indexed by parameters and columns by coordinates.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::vector<std::string> variables, std::size_t rows, std::size_t cols)
      : variables_(std::move(variables)),
        entries_(rows, cols, Polynomial(variables_.size())) {}

  static PolyMatrix from_rows(std::vector<std::string> variables,
                              const std::vector<std::vector<Polynomial>>& rows) {
    PolyMatrix m(std::move(variables), rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged polynomial matrix");
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  void set(std::size_t i, std::size_t j, Polynomial p) {
    if (p.num_variables() != variables_.size())
      throw std::invalid_argument("entry uses a different variable list");
    entries_(i, j) = std::move(p);
  }

  PolyMatrix select_columns(std::span<const std::size_t> cols) const {
    PolyMatrix m;
    m.variables_ = variables_;
    m.entries_ = entries_.select_columns(cols);
    return m;
  }

  template <class F>
  Matrix<F> evaluate(std::span<const F> point) const {
    std::vector<std::size_t> all(cols());
    std::iota(all.begin(), all.end(), 0);
    return evaluate_columns(point, std::span<const std::size_t>(all));
  }

  template <class F>
  Matrix<F> evaluate_columns(std::span<const F> point, std::span<const std::size_t> cols) const {
    if (point.size() != num_variables())
      throw std::invalid_argument("evaluation point length does not match variable count");
    Matrix<F> out(rows(), cols.size(), F(0));
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& p = entries_(i, cols[k]);
        if (!p.is_zero()) out(i, k) = p.evaluate(point);
      }
    return out;
  }

 private:
  std::vector<std::string> variables_;
  Matrix<Polynomial> entries_;
};

namespace detail {

// Divides the monomial and integer content out of every row, then every
// column. Scaling a row or column by a nonzero polynomial preserves rank.
inline void strip_contents(Matrix<IntPolynomial>& m, std::size_t nv) {
  auto strip = [&](auto&& entry, std::size_t count) {
    bool first = true;
    Monomial g;
    Integer c = 0;
    for (std::size_t k = 0; k < count; ++k) {
      const IntPolynomial& p = entry(k);
      if (p.is_zero()) continue;
      Monomial pc = p.monomial_content();
      g = first ? pc : Monomial::gcd(g, pc);
      first = false;
      for (const auto& t : p.terms()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
    }
    if (first) return;
    for (std::size_t k = 0; k < count; ++k) {
      IntPolynomial& p = entry(k);
      if (p.is_zero()) continue;
      if (!g.is_one()) p = p.divide_monomial(g);
      if (c != 1) p = exact_divide(p, IntPolynomial::constant(nv, c));
    }
  };
  for (std::size_t i = 0; i < m.rows(); ++i)
    strip([&](std::size_t k) -> IntPolynomial& { return m(i, k); }, m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    strip([&](std::size_t k) -> IntPolynomial& { return m(k, j); }, m.rows());
}

// Variables that may be set to 1 without changing which minors vanish.
// A grading is a weight vector w on the variables together with row weights
// r and column weights c such that every term of entry (i, j) has weight
// c_j - r_i; every minor is then w-homogeneous, so it vanishes identically
// iff it does after scaling one variable of weight != 0 to 1. One variable is
// returned per independent grading (the pivots of an echelon basis).
inline std::vector<std::size_t> dehomogenizing_variables(const Matrix<IntPolynomial>& m, std::size_t nv) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t unknowns = nv + cols + rows;
  std::vector<std::vector<int>> eqs;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& t : m(i, j).terms()) {
        std::vector<int> e(unknowns, 0);
        for (std::size_t v = 0; v < nv; ++v) e[v] = static_cast<int>(t.mono.get(v));
        e[nv + j] = -1;
        e[nv + cols + i] = 1;
        eqs.push_back(std::move(e));
      }
  std::sort(eqs.begin(), eqs.end());
  eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
  Matrix<Rational> sys(eqs.size(), unknowns, Rational(0));
  for (std::size_t k = 0; k < eqs.size(); ++k)
    for (std::size_t u = 0; u < unknowns; ++u)
      if (eqs[k][u]) sys(k, u) = eqs[k][u];
  auto basis = nullspace_basis(std::move(sys));
  Matrix<Rational> weights(basis.size(), nv, Rational(0));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t v = 0; v < nv; ++v) weights(b, v) = basis[b][v];
  return reduce_to_rref(weights);
}

// Integer polynomial copy of m with rank-preserving normalisations applied:
// rows scaled by their variable (square in variables only), denominators
// cleared row by row, zero rows/columns dropped, contents stripped, and one
// variable per grading set to 1.
inline Matrix<IntPolynomial> normalized_integer_matrix(const PolyMatrix& m) {
  const std::size_t nv = m.num_variables();
  // With one row per variable, row i is multiplied by theta_i. For a
  // Jacobian this turns d/d(theta_i) into the Euler operator, so a monomial
  // column becomes its exponent vector times the monomial, whose content is
  // then stripped.
  const bool jacobian_rows = m.rows() == nv;
  std::vector<std::vector<IntPolynomial>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer lcm = 1;
    bool nonzero = false;
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& t : m(i, j).terms()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        nonzero = true;
      }
    if (!nonzero) continue;
    std::vector<IntPolynomial> row;
    row.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<IntPolynomial::Term> terms;
      for (const auto& t : m(i, j).terms()) {
        Monomial mono = t.mono;
        if (jacobian_rows) mono.set(i, mono.get(i) + 1);
        terms.push_back({mono, Integer(t.coeff.get_num() * (lcm / t.coeff.get_den()))});
      }
      row.push_back(IntPolynomial::from_terms(nv, std::move(terms)));
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> keep_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& row : rows)
      if (!row[j].is_zero()) {
        keep_cols.push_back(j);
        break;
      }
  Matrix<IntPolynomial> out(rows.size(), keep_cols.size(), IntPolynomial(nv));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < keep_cols.size(); ++k) out(i, k) = std::move(rows[i][keep_cols[k]]);

  strip_contents(out, nv);
  auto ones = dehomogenizing_variables(out, nv);
  if (!ones.empty()) {
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = out(i, j).set_to_one(ones);
    strip_contents(out, nv);
  }
  return out;
}

}  // namespace detail

// Rank over the rational function field Q(theta), by single-step
// fraction-free (Bareiss) elimination over Z[theta]. Every intermediate entry
// is a minor of the input, so each division is exact; an inexact one throws
// InexactDivision. Pivot: lowest total degree, ties by row-major position.
inline std::size_t symbolic_rank(const PolyMatrix& input) {
  Matrix<IntPolynomial> m = detail::normalized_integer_matrix(input);
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t nv = input.num_variables();
  IntPolynomial prev = IntPolynomial::constant(nv, Integer(1));
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    std::size_t pi = rows, pj = cols;
    unsigned best = 0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        if (m(i, j).is_zero()) continue;
        unsigned d = m(i, j).total_degree();
        if (pi == rows || d < best) {
          pi = i;
          pj = j;
          best = d;
        }
      }
    if (pi == rows) break;
    m.swap_rows(k, pi);
    m.swap_cols(k, pj);
    const IntPolynomial& pivot = m(k, k);
    const bool unit_prev = prev.is_constant() && (prev.terms()[0].coeff == 1);
    for (std::size_t i = k + 1; i < rows; ++i) {
      const IntPolynomial& lead = m(i, k);
      for (std::size_t j = k + 1; j < cols; ++j) {
        IntPolynomial& e = m(i, j);
        const IntPolynomial& top = m(k, j);
        if (e.is_zero() && (lead.is_zero() || top.is_zero())) continue;
        IntPolynomial t = pivot * e;
        if (!lead.is_zero() && !top.is_zero()) t -= lead * top;
        e = unit_prev ? std::move(t) : exact_divide(t, prev);
      }
    }
    for (std::size_t i = k + 1; i < rows; ++i) m(i, k) = IntPolynomial(nv);
    prev = m(k, k);
    ++rank;
  }
  return rank;
}

// Upper bound on the total degree of every s x s minor: the smaller of the
// sums of the s largest row-wise and column-wise maximum entry degrees.
inline unsigned minor_degree_bound(const PolyMatrix& m, std::size_t s) {
  if (s > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minor size " + std::to_string(s) + " exceeds matrix dimensions");
  if (s == 0) return 0;
  std::vector<unsigned> row_max(m.rows(), 0), col_max(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      unsigned d = m(i, j).total_degree();
      row_max[i] = std::max(row_max[i], d);
      col_max[j] = std::max(col_max[j], d);
    }
  auto top_sum = [s](std::vector<unsigned> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return std::accumulate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s), 0u);
  };
  return std::min(top_sum(row_max), top_sum(col_max));
}

}  // namespace matroid_id
