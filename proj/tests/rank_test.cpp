#include <gtest/gtest.h>

#include <random>
#include <set>

#include "matroid_id/cert/independence.hpp"

using namespace matroid_id;

namespace {

// Determinant by cofactor expansion along the first row.
Rational cofactor_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Rational>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      sub.push_back(row);
    }
    Rational term = a[0][c] * cofactor_det(sub);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

// Rank oracle: the largest s with a nonzero s x s minor.
std::size_t minor_rank(const std::vector<std::vector<Rational>>& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t s = std::min(rows, cols); s > 0; --s) {
    std::vector<bool> rp(rows, false), cp(cols, false);
    std::fill(rp.begin(), rp.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      std::fill(cp.begin(), cp.end(), false);
      std::fill(cp.begin(), cp.begin() + static_cast<std::ptrdiff_t>(s), true);
      do {
        std::vector<std::vector<Rational>> m;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rp[i]) continue;
          std::vector<Rational> row;
          for (std::size_t j = 0; j < cols; ++j)
            if (cp[j]) row.push_back(a[i][j]);
          m.push_back(row);
        }
        if (cofactor_det(m) != 0) return s;
      } while (std::prev_permutation(cp.begin(), cp.end()));
    } while (std::prev_permutation(rp.begin(), rp.end()));
  }
  return 0;
}

Matrix<Rational> example_matrix() {
  return Matrix<Rational>::from_rows({{1, 1, -1, -2}, {3, 1, 2, 4}, {0, -1, 1, 2}});
}

// Jacobian of t * ((1 - th)^2, 2 th (1 - th), th^2) in (t, th).
PolyMatrix binomial_jacobian() {
  auto t = Polynomial::variable(2, 0), th = Polynomial::variable(2, 1);
  auto one = Polynomial::constant(2, Rational(1)), two = Polynomial::constant(2, Rational(2));
  return PolyMatrix::from_rows({"t", "th"}, {{(one - th) * (one - th), two * th * (one - th), th * th},
                                              {Polynomial::constant(2, Rational(-2)) * t * (one - th),
                                               two * t * (one - two * th), two * t * th}});
}

Polynomial random_entry(std::size_t nv, std::mt19937_64& rng, int max_terms = 3) {
  Polynomial f(nv);
  const int terms = static_cast<int>(rng() % (max_terms + 1));
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t i = 0; i < nv; ++i) m = m * Monomial::variable(i, static_cast<unsigned>(rng() % 3));
    f = f + Polynomial::monomial(nv, m, Rational(static_cast<long>(rng() % 7) - 3));
  }
  return f;
}

PolyMatrix random_poly_matrix(std::size_t rows, std::size_t cols, std::size_t nv, std::mt19937_64& rng) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nv; ++i) names.push_back("x" + std::to_string(i));
  PolyMatrix m(names, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_entry(nv, rng));
  return m;
}

PolyMatrix product(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c(a.variables(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial s(a.num_variables());
      for (std::size_t k = 0; k < a.cols(); ++k) s = s + a(i, k) * b(k, j);
      c.set(i, j, s);
    }
  return c;
}

std::size_t max_pointwise_rank(const PolyMatrix& m, int points, std::mt19937_64& rng) {
  std::size_t best = 0;
  for (int p = 0; p < points; ++p) {
    std::vector<Fp> pt;
    for (std::size_t i = 0; i < m.num_variables(); ++i) pt.push_back(Fp(static_cast<std::int64_t>(rng() % 2000000) + 1));
    best = std::max(best, scalar_rank(m.evaluate<Fp>(pt)));
  }
  return best;
}

}  // namespace

TEST(ScalarRank, ExampleMatrixColumns) {
  auto A = example_matrix();
  const std::vector<std::size_t> c123{0, 1, 2}, c34{2, 3};
  EXPECT_EQ(scalar_rank(A.select_columns(c123)), 3u);
  EXPECT_EQ(scalar_rank(A.select_columns(c34)), 1u);
  EXPECT_EQ(scalar_rank(Matrix<Rational>(3, 4, Rational(0))), 0u);
}

TEST(ScalarRank, ExampleMatrixIndependentSets) {
  auto A = example_matrix();
  std::set<std::vector<std::size_t>> expected{{},     {0},    {1},    {2},       {3},      {0, 1},
                                              {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 1, 2}, {0, 1, 3}};
  std::set<std::vector<std::size_t>> found;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> S;
    for (std::size_t j = 0; j < 4; ++j)
      if (mask >> j & 1) S.push_back(j);
    if (scalar_rank(A.select_columns(S)) == S.size()) found.insert(S);
  }
  EXPECT_EQ(found, expected);
}

TEST(ScalarRank, AgreesWithMinorOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    // Sparse and low-rank draws are overrepresented so deficient ranks occur.
    const bool low_rank = trial % 3 == 0;
    for (auto& row : a)
      for (auto& x : row) x = Rational(static_cast<long>(rng() % 7) - 3);
    if (low_rank && rows > 1)
      for (std::size_t j = 0; j < cols; ++j) a[rows - 1][j] = a[0][j] - a[rows - 2][j];
    auto m = Matrix<Rational>::from_rows(a);
    EXPECT_EQ(scalar_rank(m), minor_rank(a));
    std::vector<std::vector<Fp>> ap;
    for (const auto& row : a) {
      std::vector<Fp> r;
      for (const auto& x : row) r.push_back(Fp::from_rational(x));
      ap.push_back(r);
    }
    EXPECT_EQ(scalar_rank(Matrix<Fp>::from_rows(ap)), minor_rank(a));
  }
}

TEST(SymbolicRank, SmallCases) {
  EXPECT_EQ(symbolic_rank(binomial_jacobian()), 2u);
  auto a = Polynomial::variable(2, 0), b = Polynomial::variable(2, 1);
  EXPECT_EQ(symbolic_rank(PolyMatrix::from_rows({"a", "b"}, {{a * b - b * a}})), 0u);
  EXPECT_EQ(symbolic_rank(PolyMatrix::from_rows({"a", "b"}, {{a, Polynomial(2)}, {Polynomial(2), b}})), 2u);
  // rows proportional over Q(a, b)
  EXPECT_EQ(symbolic_rank(PolyMatrix::from_rows({"a", "b"}, {{a, b, a * b}, {a * a, a * b, a * a * b}})), 1u);
}

TEST(SymbolicRank, MatchesBestPointwiseRank) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t nv = 1 + rng() % 3;
    PolyMatrix m = random_poly_matrix(1 + rng() % 4, 1 + rng() % 4, nv, rng);
    const std::size_t sym = symbolic_rank(m);
    EXPECT_EQ(sym, max_pointwise_rank(m, 1000, rng)) << "trial " << trial;
  }
}

TEST(SymbolicRank, ProductsHaveInnerRank) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t inner = 1 + rng() % 3, nv = 2;
    PolyMatrix a = random_poly_matrix(4, inner, nv, rng), b = random_poly_matrix(inner, 5, nv, rng);
    PolyMatrix c = product(a, b);
    const std::size_t sym = symbolic_rank(c);
    EXPECT_LE(sym, inner);
    EXPECT_EQ(sym, max_pointwise_rank(c, 200, rng));
  }
}

TEST(MinorDegreeBound, Examples) {
  auto J = binomial_jacobian();
  EXPECT_LE(minor_degree_bound(J, 2), 4u);
  // oracle: expand every 2 x 2 minor
  unsigned worst = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      worst = std::max(worst, (J(0, i) * J(1, j) - J(0, j) * J(1, i)).total_degree());
  EXPECT_GE(minor_degree_bound(J, 2), worst);
  EXPECT_EQ(minor_degree_bound(J, 0), 0u);
  EXPECT_THROW(minor_degree_bound(J, 3), std::invalid_argument);
  auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  auto D = PolyMatrix::from_rows({"x", "y"}, {{x * x, Polynomial(2)}, {Polynomial(2), y * y * y}});
  EXPECT_GE(minor_degree_bound(D, 2), 5u);
}

TEST(Nullspace, SpansKernel) {
  auto A = example_matrix();
  auto basis = nullspace_basis(A);
  ASSERT_EQ(basis.size(), 4u - scalar_rank(A));
  for (const auto& v : basis)
    for (std::size_t i = 0; i < A.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * v[j];
      EXPECT_EQ(s, 0);
    }
}

TEST(Independence, NumericAndSymbolic) {
  auto J = binomial_jacobian();
  const std::vector<std::size_t> s01{0, 1}, s12{1, 2}, s012{0, 1, 2}, none{};
  EXPECT_TRUE(is_independent_numeric<Rational>(J, s01, std::vector<Rational>{1, Rational(1, 3)}));
  EXPECT_TRUE(is_independent_numeric<Rational>(J, none, std::vector<Rational>{1, 2}));
  EXPECT_FALSE(is_independent_numeric<Rational>(J, s012, std::vector<Rational>{5, Rational(2, 7)}));
  EXPECT_TRUE(is_independent_symbolic(J, s12));
  EXPECT_FALSE(is_independent_symbolic(J, s012));
}

TEST(Independence, ModelDimension) {
  EXPECT_EQ(model_dimension(binomial_jacobian()), 2u);
  auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  // gradient rows of (x y, x^2 y^2): rank 1
  auto J = PolyMatrix::from_rows({"x", "y"}, {{y, Polynomial::constant(2, Rational(2)) * x * y * y},
                                              {x, Polynomial::constant(2, Rational(2)) * x * x * y}});
  EXPECT_EQ(model_dimension(J), 1u);
}
