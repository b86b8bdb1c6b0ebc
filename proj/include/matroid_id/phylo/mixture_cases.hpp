#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "matroid_id/phylo/tree.hpp"

namespace matroid_id::phylo {

// A 2-multiset {T1, T2} of trees, stored with T1 <= T2 in canonical order.
struct TreePair {
  Tree first;
  Tree second;
  friend bool operator==(const TreePair&, const TreePair&) = default;
};

// One separation problem: two distinct 2-multisets of trees.
struct MixtureCase {
  TreePair left;
  TreePair right;
  std::size_t orbit_size = 1;  // number of leaf relabellings of this case
};

// "T1;T2 vs S1;S2" using the split-list notation for each tree.
inline std::string to_string(const TreePair& p) { return to_string(p.first) + ";" + to_string(p.second); }
inline std::string to_string(const MixtureCase& c) { return to_string(c.left) + " vs " + to_string(c.right); }

inline TreePair make_tree_pair(Tree a, Tree b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

inline TreePair parse_tree_pair(std::string_view text, unsigned n = 0) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("tree pair needs 'T1;T2'");
  Tree a = parse_tree(text.substr(0, semi), n);
  Tree b = parse_tree(text.substr(semi + 1), n ? n : a.leaves());
  if (a.leaves() != b.leaves()) throw std::invalid_argument("trees in a pair have different leaf counts");
  return make_tree_pair(std::move(a), std::move(b));
}

inline MixtureCase parse_mixture_case(std::string_view text, unsigned n = 0) {
  auto vs = text.find(" vs ");
  if (vs == std::string_view::npos) throw std::invalid_argument("case needs 'T1;T2 vs S1;S2'");
  TreePair l = parse_tree_pair(text.substr(0, vs), n);
  TreePair r = parse_tree_pair(text.substr(vs + 4), n ? n : l.first.leaves());
  if (l.first.leaves() != r.first.leaves()) throw std::invalid_argument("case mixes leaf counts");
  return {std::move(l), std::move(r), 1};
}

// Number of unordered pairs of distinct 2-multisets of n-leaf trees.
inline std::uint64_t count_mixture_pairs(unsigned n) {
  std::uint64_t trees = enumerate_trees(n).size();
  std::uint64_t multisets = trees * (trees + 1) / 2;
  return multisets * (multisets - 1) / 2;
}

// One representative per orbit of the simultaneous S_n action on unordered
// pairs of distinct 2-multisets of n-leaf trees. The representative is the
// lexicographically smallest encoding in its orbit, where trees, multisets
// and pairs are ordered by their sorted split lists. Output is sorted by that
// encoding; orbit sizes sum to count_mixture_pairs(n).
inline std::vector<MixtureCase> enumerate_mixture_cases(unsigned n) {
  if (n < 4 || n > 6) throw std::invalid_argument("enumerate_mixture_cases supports 4 <= n <= 6");
  const std::vector<Tree> trees = enumerate_trees(n);
  const std::size_t t = trees.size();
  const auto perms = all_permutations(n);

  // Image of every tree under every permutation, as tree indices.
  std::vector<std::vector<std::uint32_t>> image(perms.size(), std::vector<std::uint32_t>(t));
  for (std::size_t p = 0; p < perms.size(); ++p)
    for (std::size_t i = 0; i < t; ++i) {
      Tree moved = apply_permutation(trees[i], perms[p]);
      auto it = std::lower_bound(trees.begin(), trees.end(), moved);
      image[p][i] = static_cast<std::uint32_t>(it - trees.begin());
    }

  // Multisets {a <= b} indexed in lexicographic order of (a, b).
  std::vector<std::uint32_t> offset(t + 1, 0);
  for (std::size_t a = 0; a < t; ++a) offset[a + 1] = offset[a] + static_cast<std::uint32_t>(t - a);
  const std::size_t m = offset[t];
  auto multiset_index = [&](std::uint32_t a, std::uint32_t b) {
    if (b < a) std::swap(a, b);
    return offset[a] + (b - a);
  };
  std::vector<std::array<std::uint32_t, 2>> members(m);
  for (std::uint32_t a = 0; a < t; ++a)
    for (std::uint32_t b = a; b < t; ++b) members[multiset_index(a, b)] = {a, b};

  std::vector<bool> seen(m * m, false);
  std::vector<MixtureCase> out;
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = x + 1; y < m; ++y) {
      if (seen[std::size_t{x} * m + y]) continue;
      std::size_t orbit = 0;
      for (std::size_t p = 0; p < perms.size(); ++p) {
        std::uint32_t px = multiset_index(image[p][members[x][0]], image[p][members[x][1]]);
        std::uint32_t py = multiset_index(image[p][members[y][0]], image[p][members[y][1]]);
        if (py < px) std::swap(px, py);
        auto cell = seen[std::size_t{px} * m + py];
        if (!cell) {
          cell = true;
          ++orbit;
        }
      }
      out.push_back({{trees[members[x][0]], trees[members[x][1]]},
                     {trees[members[y][0]], trees[members[y][1]]},
                     orbit});
    }
  }
  return out;
}

// Smallest relabelling of a case under S_n, using the same encoding as
// enumerate_mixture_cases, so any member of an orbit maps to its listed
// representative.
inline MixtureCase canonical_case(const MixtureCase& c) {
  const unsigned n = c.left.first.leaves();
  std::optional<std::array<Tree, 4>> best;
  for (const auto& p : all_permutations(n)) {
    TreePair l = make_tree_pair(apply_permutation(c.left.first, p), apply_permutation(c.left.second, p));
    TreePair r = make_tree_pair(apply_permutation(c.right.first, p), apply_permutation(c.right.second, p));
    std::array<Tree, 4> enc{l.first, l.second, r.first, r.second};
    if (std::tie(r.first, r.second) < std::tie(l.first, l.second)) enc = {r.first, r.second, l.first, l.second};
    if (!best || std::lexicographical_compare(enc.begin(), enc.end(), best->begin(), best->end())) best = enc;
  }
  return {{(*best)[0], (*best)[1]}, {(*best)[2], (*best)[3]}, 1};
}

}  // namespace matroid_id::phylo
