#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matroid_id::phylo {

using LeafMask = std::uint32_t;
inline constexpr unsigned kMaxLeaves = 9;  // single-digit leaf labels in the text format

inline LeafMask full_mask(unsigned n) { return (LeafMask{1} << n) - 1; }
inline LeafMask leaf_bit(unsigned leaf) { return LeafMask{1} << (leaf - 1); }

// Bipartition A|B of [n], stored as the block that does not contain leaf n.
class Split {
 public:
  Split() = default;
  // Either side may be given; the canonical orientation is restored.
  Split(unsigned n, LeafMask side) : n_(n) {
    if (n < 2 || n > 31) throw std::invalid_argument("split leaf count out of range");
    side &= full_mask(n);
    block_ = (side & leaf_bit(n)) ? (full_mask(n) ^ side) : side;
    if (block_ == 0) throw std::invalid_argument("split with an empty block");
  }

  unsigned leaves() const { return n_; }
  LeafMask block() const { return block_; }
  LeafMask complement() const { return full_mask(n_) ^ block_; }
  bool contains(unsigned leaf) const { return block_ & leaf_bit(leaf); }
  unsigned block_size() const { return static_cast<unsigned>(std::popcount(block_)); }
  bool is_trivial() const { return block_size() == 1 || block_size() == n_ - 1; }

  // The single leaf cut off by a trivial split.
  unsigned trivial_leaf() const {
    LeafMask side = block_size() == 1 ? block_ : complement();
    return static_cast<unsigned>(std::countr_zero(side)) + 1;
  }

  bool compatible_with(const Split& o) const {
    LeafMask a = block_, b = complement(), c = o.block_, d = o.complement();
    return !(a & c) || !(a & d) || !(b & c) || !(b & d);
  }

  friend bool operator==(const Split&, const Split&) = default;
  friend auto operator<=>(const Split& a, const Split& b) { return a.block_ <=> b.block_; }

 private:
  unsigned n_ = 0;
  LeafMask block_ = 0;
};

inline std::string leaves_string(LeafMask mask) {
  std::string s;
  for (unsigned i = 0; i < 32; ++i)
    if (mask & (LeafMask{1} << i)) s += static_cast<char>('1' + i);
  return s;
}

inline std::string to_string(const Split& s) {
  return leaves_string(s.block()) + "|" + leaves_string(s.complement());
}

// Unrooted binary leaf-labelled tree, identified with its set of splits
// (including the n trivial ones). Splits are kept sorted by block.
class Tree {
 public:
  Tree() = default;

  // From any collection of splits; trivial splits are added if missing.
  Tree(unsigned n, std::span<const Split> splits) : n_(n) {
    if (n < 3 || n > kMaxLeaves) throw std::invalid_argument("tree leaf count out of range");
    std::set<Split> all;
    for (unsigned leaf = 1; leaf <= n; ++leaf) all.insert(Split(n, leaf_bit(leaf)));
    for (const auto& s : splits) {
      if (s.leaves() != n) throw std::invalid_argument("split over a different leaf set");
      all.insert(s);
    }
    splits_.assign(all.begin(), all.end());
    if (splits_.size() != 2 * n - 3)
      throw std::invalid_argument("a binary tree on " + std::to_string(n) + " leaves has " +
                                  std::to_string(2 * n - 3) + " splits, got " +
                                  std::to_string(splits_.size()));
    for (std::size_t i = 0; i < splits_.size(); ++i)
      for (std::size_t j = i + 1; j < splits_.size(); ++j)
        if (!splits_[i].compatible_with(splits_[j]))
          throw std::invalid_argument("incompatible splits " + to_string(splits_[i]) + " and " +
                                      to_string(splits_[j]));
  }

  unsigned leaves() const { return n_; }
  const std::vector<Split>& splits() const { return splits_; }

  std::vector<Split> nontrivial_splits() const {
    std::vector<Split> out;
    for (const auto& s : splits_)
      if (!s.is_trivial()) out.push_back(s);
    return out;
  }

  friend bool operator==(const Tree&, const Tree&) = default;
  // Canonical order: lexicographic on the sorted split lists.
  friend bool operator<(const Tree& a, const Tree& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.splits_ < b.splits_;
  }

 private:
  unsigned n_ = 0;
  std::vector<Split> splits_;
};

// "12|3456,123|456,1234|56": the nontrivial splits, canonical block first.
inline std::string to_string(const Tree& t) {
  std::string out;
  for (const auto& s : t.nontrivial_splits()) {
    if (!out.empty()) out += ",";
    out += to_string(s);
  }
  return out;
}

// Parses the split-list notation. Either side of each split may come first
// and the complement may be omitted ("12" means 12|rest). If n is 0 it is the
// largest leaf label mentioned.
inline Tree parse_tree(std::string_view text, unsigned n = 0) {
  std::vector<LeafMask> sides;
  unsigned max_leaf = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      LeafMask left = 0, right = 0;
      bool after_bar = false;
      for (char c : item) {
        if (c == '|') {
          if (after_bar) throw std::invalid_argument("split with two bars: " + std::string(item));
          after_bar = true;
          continue;
        }
        if (c < '1' || c > '9') throw std::invalid_argument("bad leaf label in split: " + std::string(item));
        unsigned leaf = static_cast<unsigned>(c - '0');
        max_leaf = std::max(max_leaf, leaf);
        LeafMask& side = after_bar ? right : left;
        if ((left | right) & leaf_bit(leaf))
          throw std::invalid_argument("leaf repeated in split: " + std::string(item));
        side |= leaf_bit(leaf);
      }
      if (left == 0) throw std::invalid_argument("empty split block: " + std::string(item));
      sides.push_back(left);
      if (after_bar && right == 0) throw std::invalid_argument("empty split block: " + std::string(item));
      sides.push_back(after_bar ? (left | right) : 0);
    }
    pos = end + 1;
  }
  if (n == 0) n = std::max(max_leaf, 4u);
  if (max_leaf > n) throw std::invalid_argument("leaf label exceeds leaf count");
  std::vector<Split> splits;
  for (std::size_t i = 0; i < sides.size(); i += 2) {
    if (sides[i + 1] != 0 && sides[i + 1] != full_mask(n))
      throw std::invalid_argument("split does not cover all " + std::to_string(n) + " leaves");
    splits.emplace_back(n, sides[i]);
  }
  return Tree(n, splits);
}

// Leaf relabelling: perm[i - 1] is the image of leaf i (1-based labels).
inline LeafMask permute_mask(LeafMask mask, std::span<const unsigned> perm) {
  LeafMask out = 0;
  for (unsigned i = 0; i < perm.size(); ++i)
    if (mask & (LeafMask{1} << i)) out |= leaf_bit(perm[i]);
  return out;
}

inline void check_permutation(std::span<const unsigned> perm, unsigned n) {
  if (perm.size() != n) throw std::invalid_argument("permutation has wrong length");
  LeafMask seen = 0;
  for (unsigned v : perm) {
    if (v < 1 || v > n || (seen & leaf_bit(v))) throw std::invalid_argument("not a permutation of [n]");
    seen |= leaf_bit(v);
  }
}

inline Tree apply_permutation(const Tree& t, std::span<const unsigned> perm) {
  check_permutation(perm, t.leaves());
  std::vector<Split> out;
  out.reserve(t.splits().size());
  for (const auto& s : t.splits()) out.emplace_back(t.leaves(), permute_mask(s.block(), perm));
  return Tree(t.leaves(), out);
}

inline std::vector<unsigned> inverse_permutation(std::span<const unsigned> perm) {
  std::vector<unsigned> inv(perm.size());
  for (unsigned i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = i + 1;
  return inv;
}

// All n! permutations of [n] in lexicographic order.
inline std::vector<std::vector<unsigned>> all_permutations(unsigned n) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 1u);
  std::vector<std::vector<unsigned>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// All unrooted binary trees on [n], 4 <= n <= 8, in canonical order. Built by
// stepwise leaf insertion: leaf k is attached to every edge of every tree on
// [k-1].
inline std::vector<Tree> enumerate_trees(unsigned n) {
  if (n < 4 || n > 8) throw std::invalid_argument("enumerate_trees supports 4 <= n <= 8");
  // Splits as one side's mask, orientation irrelevant while growing.
  std::vector<std::vector<LeafMask>> current{{leaf_bit(1), leaf_bit(2), leaf_bit(3)}};
  for (unsigned k = 4; k <= n; ++k) {
    std::vector<std::vector<LeafMask>> next;
    const LeafMask universe = full_mask(k - 1);
    for (const auto& tree : current) {
      for (LeafMask edge : tree) {
        LeafMask edge_other = universe ^ edge;
        std::vector<LeafMask> grown;
        grown.reserve(tree.size() + 2);
        for (LeafMask f : tree) {
          if (f == edge) continue;
          // The new leaf joins the side of f that contains the edge.
          bool edge_on_f_side = ((edge & f) == edge) || ((edge_other & f) == edge_other);
          grown.push_back(edge_on_f_side ? (f | leaf_bit(k)) : f);
        }
        grown.push_back(edge | leaf_bit(k));
        grown.push_back(edge);
        grown.push_back(leaf_bit(k));
        next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  std::vector<Tree> trees;
  trees.reserve(current.size());
  for (const auto& sides : current) {
    std::vector<Split> splits;
    for (LeafMask m : sides) splits.emplace_back(n, m);
    trees.emplace_back(n, splits);
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

}  // namespace matroid_id::phylo
