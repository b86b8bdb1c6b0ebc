#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matroid_id::phylo {

enum class Group { Z2, Z2xZ2 };

enum class ModelKind { CFN, JC, K2P, K3P };

inline Group group_of(ModelKind kind) { return kind == ModelKind::CFN ? Group::Z2 : Group::Z2xZ2; }
inline unsigned group_order(Group g) { return g == Group::Z2 ? 2u : 4u; }

inline std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::CFN: return "cfn";
    case ModelKind::JC: return "jc";
    case ModelKind::K2P: return "k2p";
    case ModelKind::K3P: return "k3p";
  }
  return "?";
}

inline ModelKind parse_model_kind(std::string_view s) {
  std::string lower(s);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "cfn") return ModelKind::CFN;
  if (lower == "jc") return ModelKind::JC;
  if (lower == "k2p") return ModelKind::K2P;
  if (lower == "k3p") return ModelKind::K3P;
  throw std::invalid_argument("unknown model kind: " + std::string(s));
}

// Group element of Z2 (value 0/1) or Z2xZ2 (value v encodes the pair
// (v & 1, v >> 1), so (1,0) = 1, (0,1) = 2, (1,1) = 3). Addition is XOR in
// both groups and the identity is 0; the subgroup <(1,0)> = {0, 1} is Z2.
struct GroupElement {
  Group group = Group::Z2;
  std::uint8_t value = 0;

  GroupElement() = default;
  GroupElement(Group g, unsigned v) : group(g), value(static_cast<std::uint8_t>(v)) {
    if (v >= group_order(g)) throw std::invalid_argument("group element out of range");
  }
  bool is_identity() const { return value == 0; }
  friend GroupElement operator+(GroupElement a, GroupElement b) {
    if (a.group != b.group) throw std::invalid_argument("adding elements of different groups");
    return {a.group, static_cast<unsigned>(a.value ^ b.value)};
  }
  friend bool operator==(GroupElement a, GroupElement b) = default;

  std::string label() const {
    if (group == Group::Z2) return std::to_string(value);
    return std::string{static_cast<char>('0' + (value & 1)), static_cast<char>('0' + (value >> 1))};
  }
};

// Number of distinct Fourier parameters per edge once the identity parameter
// is fixed to 1 and the model's identifications are applied.
inline unsigned parameter_classes(ModelKind kind) {
  switch (kind) {
    case ModelKind::CFN: return 1;
    case ModelKind::JC: return 1;
    case ModelKind::K2P: return 2;
    case ModelKind::K3P: return 3;
  }
  return 0;
}

// Parameter class of a group element: nullopt for the identity (its parameter
// is identically 1), otherwise 0-based class index. K2P identifies
// a_(0,1) = a_(1,1); JC identifies all three nonzero elements.
inline std::optional<unsigned> parameter_class(ModelKind kind, unsigned g) {
  if (g == 0) return std::nullopt;
  switch (kind) {
    case ModelKind::CFN:
    case ModelKind::K3P: return g - 1;
    case ModelKind::JC: return 0;
    case ModelKind::K2P: return g == 1 ? 0u : 1u;
  }
  return std::nullopt;
}

// Suffix used in parameter symbols for a class (label of its representative).
inline std::string class_label(ModelKind kind, unsigned cls) {
  GroupElement rep(group_of(kind), cls + 1);
  return rep.label();
}

using CoordinateLabel = std::vector<std::uint8_t>;

// All tuples (g_1..g_n) in G^n with zero sum, lexicographic with g_1 most
// significant. There are |G|^(n-1) of them.
inline std::vector<CoordinateLabel> zero_sum_coordinates(Group group, unsigned n) {
  const unsigned order = group_order(group);
  std::vector<CoordinateLabel> out;
  CoordinateLabel g(n, 0);
  while (true) {
    unsigned sum = 0;
    for (auto v : g) sum ^= v;
    if (sum == 0) out.push_back(g);
    std::size_t i = n;
    while (i > 0 && ++g[i - 1] == order) g[--i] = 0;
    if (i == 0) return out;
  }
}

inline std::string coordinate_string(const CoordinateLabel& g, Group group) {
  std::string s;
  for (auto v : g) {
    if (group == Group::Z2) {
      s += static_cast<char>('0' + v);
    } else {
      s += GroupElement(group, v).label();
      s += ' ';
    }
  }
  if (group != Group::Z2 && !s.empty()) s.pop_back();
  return s;
}

}  // namespace matroid_id::phylo
