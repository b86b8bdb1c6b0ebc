#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matroid_id/core/poly_matrix.hpp"
#include "matroid_id/phylo/group.hpp"
#include "matroid_id/phylo/network.hpp"
#include "matroid_id/phylo/tree.hpp"

namespace matroid_id::phylo {

enum class Combination { Custom, Tree, Mixture, Network };

// Polynomial map from parameters to coordinates. Phylogenetic maps also keep
// their per-tree monomials (term_monomials[t][j] is tree term t of coordinate
// j) and the index of the mixing parameter.
struct Parameterization {
  std::optional<ModelKind> kind;
  Combination combination = Combination::Custom;
  std::vector<std::string> variables;
  std::vector<CoordinateLabel> coordinates;
  std::vector<Polynomial> components;
  std::vector<std::vector<Monomial>> term_monomials;
  std::optional<std::size_t> lambda;

  std::size_t num_variables() const { return variables.size(); }
  std::size_t num_coordinates() const { return coordinates.size(); }

  std::optional<std::size_t> coordinate_index(const CoordinateLabel& g) const {
    for (std::size_t j = 0; j < coordinates.size(); ++j)
      if (coordinates[j] == g) return j;
    return std::nullopt;
  }
};

namespace detail {

inline std::string split_symbol(const Split& s) {
  if (s.is_trivial()) return std::to_string(s.trivial_leaf());
  return leaves_string(s.block());
}

// Fourier monomial of one tree term: for each (parameter owner, split) the
// class of the group sum over the split block, identity classes dropped.
// owners[i] is the first variable index of owner i's parameter classes.
inline Monomial fourier_monomial(ModelKind kind, const CoordinateLabel& g,
                                 const std::vector<std::pair<std::size_t, Split>>& owners) {
  Monomial m;
  for (const auto& [first_var, split] : owners) {
    unsigned sum = 0;
    for (unsigned leaf = 1; leaf <= split.leaves(); ++leaf)
      if (split.contains(leaf)) sum ^= g[leaf - 1];
    if (auto cls = parameter_class(kind, sum)) {
      std::size_t var = first_var + *cls;
      m.set(var, m.get(var) + 1);
    }
  }
  return m;
}

// Registers one symbol per parameter class for `stem` and returns the index of
// the first one.
inline std::size_t add_edge_symbols(ModelKind kind, const std::string& stem, std::vector<std::string>& vars) {
  std::size_t first = vars.size();
  for (unsigned c = 0; c < parameter_classes(kind); ++c) vars.push_back(stem + "_" + class_label(kind, c));
  return first;
}

inline void check_variable_count(std::size_t n) {
  if (n > kMaxVariables)
    throw std::invalid_argument("parameterization needs " + std::to_string(n) + " variables; at most " +
                                std::to_string(kMaxVariables) + " are supported");
}

// lambda * m1 + (1 - lambda) * m2.
inline Polynomial mix(std::size_t nv, std::size_t lambda, const Monomial& m1, const Monomial& m2) {
  Polynomial l = Polynomial::variable(nv, lambda);
  Polynomial one = Polynomial::constant(nv, Rational(1));
  return l * Polynomial::monomial(nv, m1) + (one - l) * Polynomial::monomial(nv, m2);
}

}  // namespace detail

// Single-tree map q_g = prod over splits A|B of a^{A|B}_{sum_{i in A} g_i}
// for zero-sum g, with identity parameters fixed to 1. Symbols are
// "<prefix><split>_<class>", leaf splits named by their leaf.
inline Parameterization fourier_map(const Tree& t, ModelKind kind, const std::string& prefix = "a") {
  if (t.leaves() == 0) throw std::invalid_argument("empty tree");
  Parameterization p;
  p.kind = kind;
  p.combination = Combination::Tree;
  std::vector<std::pair<std::size_t, Split>> owners;
  for (const auto& s : t.splits())
    owners.emplace_back(detail::add_edge_symbols(kind, prefix + detail::split_symbol(s), p.variables), s);
  detail::check_variable_count(p.variables.size());
  p.coordinates = zero_sum_coordinates(group_of(kind), t.leaves());
  const std::size_t nv = p.variables.size();
  p.term_monomials.resize(1);
  for (const auto& g : p.coordinates) {
    Monomial m = detail::fourier_monomial(kind, g, owners);
    p.term_monomials[0].push_back(m);
    p.components.push_back(Polynomial::monomial(nv, m));
  }
  return p;
}

// lambda * psi_{T1}(theta1) + (1 - lambda) * psi_{T2}(theta2) with disjoint
// parameter sets (prefixes "a" and "b") and mixing symbol "l" last.
inline Parameterization mixture_map(const Tree& t1, const Tree& t2, ModelKind kind) {
  if (t1.leaves() != t2.leaves()) throw std::invalid_argument("mixture of trees with different leaf counts");
  Parameterization p;
  p.kind = kind;
  p.combination = Combination::Mixture;
  std::vector<std::pair<std::size_t, Split>> owners1, owners2;
  for (const auto& s : t1.splits())
    owners1.emplace_back(detail::add_edge_symbols(kind, "a" + detail::split_symbol(s), p.variables), s);
  for (const auto& s : t2.splits())
    owners2.emplace_back(detail::add_edge_symbols(kind, "b" + detail::split_symbol(s), p.variables), s);
  p.lambda = p.variables.size();
  p.variables.push_back("l");
  detail::check_variable_count(p.variables.size());
  const std::size_t nv = p.variables.size();
  p.coordinates = zero_sum_coordinates(group_of(kind), t1.leaves());
  p.term_monomials.resize(2);
  for (const auto& g : p.coordinates) {
    Monomial m1 = detail::fourier_monomial(kind, g, owners1);
    Monomial m2 = detail::fourier_monomial(kind, g, owners2);
    p.term_monomials[0].push_back(m1);
    p.term_monomials[1].push_back(m2);
    p.components.push_back(detail::mix(nv, *p.lambda, m1, m2));
  }
  return p;
}

// lambda * psi_{T1} + (1 - lambda) * psi_{T2} where T1, T2 are the trees left
// by deleting each reticulation edge and both draw on the same per-edge
// symbols "a<edge>_<class>". Every edge of a suppressed path contributes its
// own factor.
inline Parameterization network_map(const CycleNetwork& net, ModelKind kind) {
  Parameterization p;
  p.kind = kind;
  p.combination = Combination::Network;
  std::map<unsigned, std::size_t> first_var;
  for (const auto& e : net.edges())
    first_var[e.label] = detail::add_edge_symbols(kind, "a" + std::to_string(e.label), p.variables);
  p.lambda = p.variables.size();
  p.variables.push_back("l");
  detail::check_variable_count(p.variables.size());
  const std::size_t nv = p.variables.size();
  std::array<std::vector<std::pair<std::size_t, Split>>, 2> owners;
  for (int which = 0; which < 2; ++which)
    for (const auto& [label, split] : net.deletion_tree_edges(which))
      owners[which].emplace_back(first_var.at(label), split);
  p.coordinates = zero_sum_coordinates(group_of(kind), net.leaves());
  p.term_monomials.resize(2);
  for (const auto& g : p.coordinates) {
    Monomial m1 = detail::fourier_monomial(kind, g, owners[0]);
    Monomial m2 = detail::fourier_monomial(kind, g, owners[1]);
    p.term_monomials[0].push_back(m1);
    p.term_monomials[1].push_back(m2);
    p.components.push_back(detail::mix(nv, *p.lambda, m1, m2));
  }
  return p;
}

// Transposed Jacobian: rows are parameters, columns coordinates, entry (i, j)
// is d(phi_j)/d(theta_i).
inline PolyMatrix jacobian(const Parameterization& p) {
  PolyMatrix J(p.variables, p.num_variables(), p.num_coordinates());
  for (std::size_t j = 0; j < p.num_coordinates(); ++j) {
    if (p.components[j].num_variables() != p.num_variables())
      throw std::invalid_argument("component uses a different variable list");
    for (std::size_t i = 0; i < p.num_variables(); ++i) J.set(i, j, p.components[j].derivative(i));
  }
  return J;
}

// Polynomial matrix with the same column matroid as jacobian(p) but smaller
// entries, for exact rank work. Rows are the Euler derivations
// theta_i d/d(theta_i) (lambda d/d(lambda) for the mixing row), the rows of
// the second tree in a mixture are divided by (1 - lambda), and column j is
// multiplied by L / m2_j, where m2_j is the last tree term of coordinate j
// and L the lcm of all of them. Each step scales a row or column by a
// nonzero rational function. A single tree gives its exponent matrix.
inline PolyMatrix normalized_jacobian(const Parameterization& p) {
  if (p.combination == Combination::Custom || p.term_monomials.empty()) return jacobian(p);
  const std::size_t nv = p.num_variables(), nc = p.num_coordinates();
  const auto& last = p.term_monomials.back();
  Monomial L;
  for (const auto& m : last)
    for (std::size_t i = 0; i < nv; ++i) L.set(i, std::max(L.get(i), m.get(i)));
  auto over_last = [&](const Monomial& m, std::size_t j) {
    Monomial r = m * L;
    for (std::size_t i = 0; i < nv; ++i) r.set(i, r.get(i) - last[j].get(i));
    return r;
  };
  PolyMatrix R(p.variables, nv, nc);
  for (std::size_t j = 0; j < nc; ++j) {
    if (p.combination == Combination::Tree) {
      for (std::size_t i = 0; i < nv; ++i)
        if (unsigned e = last[j].get(i)) R.set(i, j, Polynomial::constant(nv, Rational(e)));
      continue;
    }
    const Monomial& m1 = p.term_monomials[0][j];
    const std::size_t lam = *p.lambda;
    const Polynomial l = Polynomial::variable(nv, lam);
    const Polynomial one = Polynomial::constant(nv, Rational(1));
    const Polynomial t1 = Polynomial::monomial(nv, over_last(m1, j));
    const Polynomial t2 = Polynomial::monomial(nv, L);
    R.set(lam, j, t1 - t2);
    for (std::size_t i = 0; i < nv; ++i) {
      if (i == lam) continue;
      const unsigned e1 = m1.get(i), e2 = last[j].get(i);
      if (!e1 && !e2) continue;
      if (p.combination == Combination::Mixture) {
        // Disjoint parameters: each row belongs to exactly one tree.
        if (e1) R.set(i, j, t1.scaled(Rational(e1)));
        else R.set(i, j, Polynomial::constant(nv, Rational(e2)));
      } else {
        Polynomial entry(nv);
        if (e1) entry += (l * t1).scaled(Rational(e1));
        if (e2) entry += ((one - l) * t2).scaled(Rational(e2));
        R.set(i, j, entry);
      }
    }
  }
  return R;
}

// Upper bound on the rank of the C-columns of jacobian(p). Column j of the
// Euler-scaled Jacobian of sum_t c_t(lambda) m_tj is sum_t m_tj D_t (e_tj, 1)
// with D_t diagonal, so its rank is at most sum_t rank (E_t; 1) on C. For a
// single tree the bound is rank E_C, which is exact.
inline std::size_t structural_rank_bound(const Parameterization& p, std::span<const std::size_t> C) {
  const std::size_t nv = p.num_variables();
  if (p.combination == Combination::Custom || p.term_monomials.empty()) return std::min(nv, C.size());
  // Not capped by |C|: the greedy construction in cert/ watches it grow.
  const bool tree = p.combination == Combination::Tree;
  std::size_t bound = 0;
  for (const auto& terms : p.term_monomials) {
    Matrix<Rational> E(nv + (tree ? 0 : 1), C.size(), Rational(1));
    for (std::size_t k = 0; k < C.size(); ++k)
      for (std::size_t i = 0; i < nv; ++i) E(i, k) = terms.at(C[k]).get(i);
    bound += scalar_rank(std::move(E));
  }
  return bound;
}

// Restriction of a K3P map to the coordinates indexed by the subgroup
// <(1,0)> = {0, 1}, with (1,0) renamed to 1 in Z2. Parameters that no longer
// occur are dropped and "_10" suffixes become "_1", which reproduces the CFN
// map on the same trees symbol for symbol.
inline Parameterization project_to_cfn(const Parameterization& p) {
  if (p.kind != ModelKind::K3P) throw std::invalid_argument("projection to CFN expects a K3P parameterization");
  std::vector<std::size_t> keep_coords;
  for (std::size_t j = 0; j < p.num_coordinates(); ++j) {
    bool inside = true;
    for (auto v : p.coordinates[j]) inside = inside && v <= 1;
    if (inside) keep_coords.push_back(j);
  }
  std::vector<bool> used(p.num_variables(), false);
  for (std::size_t j : keep_coords)
    for (const auto& t : p.components[j].terms())
      for (std::size_t i = 0; i < p.num_variables(); ++i)
        if (t.mono.get(i)) used[i] = true;
  if (p.lambda) used[*p.lambda] = true;

  Parameterization out;
  out.kind = ModelKind::CFN;
  out.combination = p.combination;
  std::vector<std::size_t> new_index(p.num_variables(), 0);
  for (std::size_t i = 0; i < p.num_variables(); ++i) {
    if (!used[i]) continue;
    new_index[i] = out.variables.size();
    std::string name = p.variables[i];
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "_10") == 0) name = name.substr(0, name.size() - 3) + "_1";
    out.variables.push_back(name);
  }
  if (p.lambda) out.lambda = new_index[*p.lambda];
  const std::size_t nv = out.variables.size();
  auto remap_monomial = [&](const Monomial& m) {
    Monomial r;
    for (std::size_t i = 0; i < p.num_variables(); ++i)
      if (unsigned e = m.get(i)) r.set(new_index[i], e);
    return r;
  };
  out.term_monomials.resize(p.term_monomials.size());
  for (std::size_t j : keep_coords) {
    out.coordinates.push_back(p.coordinates[j]);
    out.components.push_back(p.components[j].remap(nv, new_index));
    for (std::size_t t = 0; t < p.term_monomials.size(); ++t)
      out.term_monomials[t].push_back(remap_monomial(p.term_monomials[t][j]));
  }
  return out;
}

}  // namespace matroid_id::phylo
