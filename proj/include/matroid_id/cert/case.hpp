#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "matroid_id/core/errors.hpp"
#include "matroid_id/phylo/mixture_cases.hpp"
#include "matroid_id/phylo/network.hpp"
#include "matroid_id/phylo/parameterization.hpp"

namespace matroid_id {

enum class Structure { Tree, Mixture, Network };

// One side of a case, held as canonical text: a single tree, the two trees of
// a mixture (sorted), or one network.
struct ModelSpec {
  Structure structure = Structure::Tree;
  std::vector<std::string> parts;
  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

struct CaseDescriptor {
  phylo::ModelKind kind = phylo::ModelKind::CFN;
  ModelSpec left;
  ModelSpec right;
  friend bool operator==(const CaseDescriptor&, const CaseDescriptor&) = default;
};

inline std::string to_string(const ModelSpec& m) {
  std::string s;
  for (std::size_t i = 0; i < m.parts.size(); ++i) s += (i ? ";" : "") + m.parts[i];
  return s;
}

inline std::string to_string(const CaseDescriptor& c) {
  return phylo::to_string(c.kind) + " " + to_string(c.left) + " vs " + to_string(c.right);
}

inline ModelSpec tree_spec(const phylo::Tree& t) { return {Structure::Tree, {phylo::to_string(t)}}; }

inline ModelSpec mixture_spec(const phylo::TreePair& p) {
  return {Structure::Mixture, {phylo::to_string(p.first), phylo::to_string(p.second)}};
}

inline ModelSpec network_spec(const phylo::CycleNetwork& n) { return {Structure::Network, {phylo::to_string(n)}}; }

// Parses canonical text parts. Networks are recognised by "cycle[" or a
// built-in name; two parts make a mixture, one part a tree.
inline ModelSpec parse_model_spec(const std::vector<std::string>& parts) {
  try {
    if (parts.size() == 1 && (parts[0].starts_with("cycle[") || phylo::builtin_networks().count(parts[0])))
      return network_spec(phylo::parse_network(parts[0]));
    if (parts.size() == 1) return tree_spec(phylo::parse_tree(parts[0]));
    if (parts.size() == 2) return mixture_spec(phylo::parse_tree_pair(parts[0] + ";" + parts[1]));
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("unresolvable model: ") + e.what());
  }
  throw DataError("a model is one tree, two trees or one network");
}

inline ModelSpec parse_model_spec(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    parts.emplace_back(text.substr(start, semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return parse_model_spec(parts);
}

// "<model> <left> vs <right>", or just "<left> vs <right>" with the model
// supplied separately.
inline CaseDescriptor parse_case(std::string_view text, std::optional<phylo::ModelKind> kind = std::nullopt) {
  CaseDescriptor c;
  auto space = text.find(' ');
  auto vs = text.find(" vs ");
  if (vs == std::string_view::npos) throw DataError("case needs '<left> vs <right>'");
  if (space < vs && !kind) {
    c.kind = phylo::parse_model_kind(text.substr(0, space));
    text.remove_prefix(space + 1);
    vs = text.find(" vs ");
  } else if (kind) {
    c.kind = *kind;
  } else {
    throw DataError("case text lacks a model");
  }
  c.left = parse_model_spec(text.substr(0, vs));
  c.right = parse_model_spec(text.substr(vs + 4));
  return c;
}

inline CaseDescriptor mixture_case(phylo::ModelKind kind, const phylo::MixtureCase& m) {
  return {kind, mixture_spec(m.left), mixture_spec(m.right)};
}

inline phylo::Parameterization build_parameterization(phylo::ModelKind kind, const ModelSpec& m) {
  try {
    switch (m.structure) {
      case Structure::Tree: return phylo::fourier_map(phylo::parse_tree(m.parts.at(0)), kind);
      case Structure::Mixture:
        return phylo::mixture_map(phylo::parse_tree(m.parts.at(0)), phylo::parse_tree(m.parts.at(1)), kind);
      case Structure::Network: return phylo::network_map(phylo::parse_network(m.parts.at(0)), kind);
    }
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("cannot build model: ") + e.what());
  } catch (const std::out_of_range&) {
    throw DataError("model is missing a part");
  }
  throw DataError("unknown model structure");
}

}  // namespace matroid_id
