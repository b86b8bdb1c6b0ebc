#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroid_id/phylo/tree.hpp"

namespace matroid_id::phylo {

// Rooted binary tree hanging off a cycle vertex: a single leaf (leaf > 0) or
// an internal node with exactly two children.
struct Subtree {
  unsigned leaf = 0;
  std::vector<Subtree> children;

  bool is_leaf() const { return leaf != 0; }
  unsigned min_leaf() const {
    if (is_leaf()) return leaf;
    return std::min(children[0].min_leaf(), children[1].min_leaf());
  }
  LeafMask mask() const {
    if (is_leaf()) return leaf_bit(leaf);
    return children[0].mask() | children[1].mask();
  }
  friend bool operator==(const Subtree&, const Subtree&) = default;
};

inline Subtree leaf_subtree(unsigned leaf) { return Subtree{leaf, {}}; }
inline Subtree cherry(Subtree a, Subtree b) { return Subtree{0, {std::move(a), std::move(b)}}; }

inline std::string to_string(const Subtree& s) {
  if (s.is_leaf()) return std::to_string(s.leaf);
  return "(" + to_string(s.children[0]) + "," + to_string(s.children[1]) + ")";
}

struct NetworkEdge {
  unsigned label;  // e_label; leaf edges carry their leaf's number
  unsigned u;
  unsigned v;
};

// Semi-directed network with a single reticulation vertex on a cycle of size
// k >= 2. attached[0] hangs off the reticulation vertex c0 and attached[i]
// off cycle vertex c_i in cyclic order. Edge labels: leaf edges e_1..e_n by
// leaf; cycle edges e_{n+1} = c0c1, ..., e_{n+k} = c_{k-1}c0 (the first and
// last are the reticulation edges); then subtree edges, by cycle position and
// preorder. Construction normalises the cycle direction and child order, so
// equal networks get equal labels.
class CycleNetwork {
 public:
  explicit CycleNetwork(std::vector<Subtree> attached) : attached_(std::move(attached)) {
    if (attached_.size() < 2) throw std::invalid_argument("cycle needs at least 2 vertices");
    for (auto& s : attached_) normalize(s);
    // Reversing the cycle through c0 gives the same semi-directed network.
    std::vector<unsigned> fwd, rev;
    for (std::size_t i = 1; i < attached_.size(); ++i) fwd.push_back(attached_[i].min_leaf());
    rev.assign(fwd.rbegin(), fwd.rend());
    if (rev < fwd) std::reverse(attached_.begin() + 1, attached_.end());

    LeafMask seen = 0;
    unsigned count = 0;
    for (const auto& s : attached_) collect_leaves(s, seen, count);
    n_ = count;
    if (n_ < 3 || n_ > kMaxLeaves) throw std::invalid_argument("network leaf count out of range");
    if (seen != full_mask(n_)) throw std::invalid_argument("network leaves must be exactly 1..n");
    build_edges();
    // Both deletion trees must be binary trees on [n].
    (void)deletion_tree(0);
    (void)deletion_tree(1);
  }

  unsigned leaves() const { return n_; }
  unsigned cycle_size() const { return static_cast<unsigned>(attached_.size()); }
  const std::vector<Subtree>& attached() const { return attached_; }
  const std::vector<NetworkEdge>& edges() const { return edges_; }

  // Labels of the reticulation edges c0c1 and c_{k-1}c0.
  std::array<unsigned, 2> reticulation_edges() const { return {n_ + 1, n_ + cycle_size()}; }

  // Every edge of N except reticulation edge `which`, paired with the split
  // it induces in the tree left after deleting that edge. Edges on a path
  // through a suppressed degree-2 vertex share a split.
  std::vector<std::pair<unsigned, Split>> deletion_tree_edges(int which) const {
    const unsigned removed = reticulation_edges()[which == 0 ? 0 : 1];
    std::vector<std::pair<unsigned, Split>> out;
    for (const auto& e : edges_) {
      if (e.label == removed) continue;
      LeafMask side = reachable_leaves(e.u, e.label, removed);
      out.emplace_back(e.label, Split(n_, side));
    }
    return out;
  }

  Tree deletion_tree(int which) const {
    std::vector<Split> splits;
    for (const auto& [label, s] : deletion_tree_edges(which)) splits.push_back(s);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    return Tree(n_, splits);
  }

  friend bool operator==(const CycleNetwork& a, const CycleNetwork& b) { return a.attached_ == b.attached_; }

 private:
  static void normalize(Subtree& s) {
    if (s.is_leaf()) {
      if (!s.children.empty()) throw std::invalid_argument("leaf with children");
      return;
    }
    if (s.children.size() != 2) throw std::invalid_argument("subtree nodes must be binary");
    normalize(s.children[0]);
    normalize(s.children[1]);
    if (s.children[1].min_leaf() < s.children[0].min_leaf()) std::swap(s.children[0], s.children[1]);
  }

  static void collect_leaves(const Subtree& s, LeafMask& seen, unsigned& count) {
    if (s.is_leaf()) {
      if (s.leaf < 1 || s.leaf > kMaxLeaves) throw std::invalid_argument("leaf label out of range");
      if (seen & leaf_bit(s.leaf)) throw std::invalid_argument("leaf used twice in network");
      seen |= leaf_bit(s.leaf);
      ++count;
      return;
    }
    for (const auto& c : s.children) collect_leaves(c, seen, count);
  }

  unsigned leaf_vertex(unsigned leaf) const { return cycle_size() + leaf - 1; }

  void build_edges() {
    const unsigned k = cycle_size();
    next_vertex_ = k + n_;
    std::vector<NetworkEdge> leaf_edges, internal;
    for (unsigned i = 0; i < k; ++i) attach(attached_[i], i, leaf_edges, internal);
    std::sort(leaf_edges.begin(), leaf_edges.end(),
              [](const NetworkEdge& a, const NetworkEdge& b) { return a.label < b.label; });
    edges_ = leaf_edges;
    for (unsigned i = 0; i < k; ++i) edges_.push_back({n_ + 1 + i, i, (i + 1) % k});
    unsigned label = n_ + k + 1;
    for (auto& e : internal) {
      e.label = label++;
      edges_.push_back(e);
    }
  }

  void attach(const Subtree& s, unsigned parent, std::vector<NetworkEdge>& leaf_edges,
              std::vector<NetworkEdge>& internal) {
    if (s.is_leaf()) {
      leaf_edges.push_back({s.leaf, parent, leaf_vertex(s.leaf)});
      return;
    }
    unsigned node = next_vertex_++;
    internal.push_back({0, parent, node});
    for (const auto& c : s.children) attach(c, node, leaf_edges, internal);
  }

  LeafMask reachable_leaves(unsigned start, unsigned skip_a, unsigned skip_b) const {
    std::vector<bool> visited(next_vertex_, false);
    std::vector<unsigned> stack{start};
    visited[start] = true;
    LeafMask leaves = 0;
    const unsigned k = cycle_size();
    while (!stack.empty()) {
      unsigned x = stack.back();
      stack.pop_back();
      if (x >= k && x < k + n_) leaves |= leaf_bit(x - k + 1);
      for (const auto& e : edges_) {
        if (e.label == skip_a || e.label == skip_b) continue;
        unsigned y;
        if (e.u == x) {
          y = e.v;
        } else if (e.v == x) {
          y = e.u;
        } else {
          continue;
        }
        if (!visited[y]) {
          visited[y] = true;
          stack.push_back(y);
        }
      }
    }
    return leaves;
  }

  std::vector<Subtree> attached_;
  unsigned n_ = 0;
  unsigned next_vertex_ = 0;
  std::vector<NetworkEdge> edges_;
};

// "cycle[1,(4,5),3,2]": subtrees in cyclic order, the first at the
// reticulation vertex.
inline std::string to_string(const CycleNetwork& net) {
  std::string s = "cycle[";
  for (std::size_t i = 0; i < net.attached().size(); ++i) {
    if (i) s += ",";
    s += to_string(net.attached()[i]);
  }
  return s + "]";
}

namespace detail {

inline Subtree parse_subtree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw std::invalid_argument("unexpected end of network text");
  char c = text[pos];
  if (c >= '1' && c <= '9') {
    ++pos;
    return leaf_subtree(static_cast<unsigned>(c - '0'));
  }
  if (c != '(') throw std::invalid_argument(std::string("unexpected character in network: ") + c);
  ++pos;
  Subtree a = parse_subtree(text, pos);
  if (pos >= text.size() || text[pos] != ',') throw std::invalid_argument("expected ',' in subtree");
  ++pos;
  Subtree b = parse_subtree(text, pos);
  if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("expected ')' in subtree");
  ++pos;
  return cherry(std::move(a), std::move(b));
}

}  // namespace detail

// Named networks used by the separation checks.
inline const std::map<std::string, std::string>& builtin_networks() {
  static const std::map<std::string, std::string> names{
      {"fig4-left", "cycle[1,2,3,4]"},     // 4-cycle, leaves 1,2,3,4 around the cycle
      {"fig4-right", "cycle[1,2,4,3]"},    // same with 3 and 4 exchanged
      {"fig5", "cycle[1,2,3,4]"},          // the labelled network e1..e8
      {"fig7-a", "cycle[1,(4,5),3,2]"},    // 5-leaf 4-cycle, cherry {4,5}
      {"fig7-b", "cycle[1,(2,3),4,5]"},    // 5-leaf 4-cycle, cherry {2,3}
      {"sunlet5", "cycle[1,2,3,4,5]"},     // 5-leaf 5-cycle, reticulation at leaf 1
  };
  return names;
}

inline CycleNetwork parse_network(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (auto it = builtin_networks().find(t); it != builtin_networks().end()) t = it->second;
  const std::string_view prefix = "cycle[";
  if (t.rfind(prefix, 0) != 0 || t.back() != ']')
    throw std::invalid_argument("network must be a built-in name or cycle[...]: " + std::string(text));
  std::string_view body(t);
  body = body.substr(prefix.size(), body.size() - prefix.size() - 1);
  std::vector<Subtree> attached;
  std::size_t pos = 0;
  while (true) {
    attached.push_back(detail::parse_subtree(body, pos));
    if (pos == body.size()) break;
    if (body[pos] != ',') throw std::invalid_argument("expected ',' between cycle entries");
    ++pos;
  }
  return CycleNetwork(std::move(attached));
}

namespace detail {

inline std::vector<Subtree> rooted_binary_trees(LeafMask leaves) {
  std::vector<Subtree> out;
  if (std::popcount(leaves) == 1) {
    out.push_back(leaf_subtree(static_cast<unsigned>(std::countr_zero(leaves)) + 1));
    return out;
  }
  const LeafMask lowest = leaves & (~leaves + 1);
  // Enumerate the side containing the lowest leaf; the other side is nonempty.
  for (LeafMask sub = (leaves - 1) & leaves; sub; sub = (sub - 1) & leaves) {
    if (!(sub & lowest)) continue;
    for (const auto& a : rooted_binary_trees(sub))
      for (const auto& b : rooted_binary_trees(leaves ^ sub)) out.push_back(cherry(a, b));
  }
  return out;
}

}  // namespace detail

// All n-leaf k-cycle networks (leaf-labelled, up to the semi-directed
// equivalences), in order of their text form.
inline std::vector<CycleNetwork> enumerate_cycle_networks(unsigned n, unsigned k) {
  if (k < 2 || n < k || n > kMaxLeaves) throw std::invalid_argument("need 2 <= k <= n <= 9");
  std::map<std::string, CycleNetwork> found;
  std::vector<unsigned> position(n, 0);
  while (true) {
    std::vector<LeafMask> blocks(k, 0);
    for (unsigned leaf = 1; leaf <= n; ++leaf) blocks[position[leaf - 1]] |= leaf_bit(leaf);
    if (std::all_of(blocks.begin(), blocks.end(), [](LeafMask b) { return b != 0; })) {
      std::vector<std::vector<Subtree>> options;
      for (auto b : blocks) options.push_back(detail::rooted_binary_trees(b));
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        std::vector<Subtree> attached;
        for (unsigned i = 0; i < k; ++i) attached.push_back(options[i][pick[i]]);
        CycleNetwork net(std::move(attached));
        found.emplace(to_string(net), net);
        unsigned i = 0;
        while (i < k && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == k) break;
      }
    }
    unsigned i = 0;
    while (i < n && ++position[i] == k) position[i++] = 0;
    if (i == n) break;
  }
  std::vector<CycleNetwork> out;
  for (auto& [text, net] : found) out.push_back(net);
  return out;
}

}  // namespace matroid_id::phylo
