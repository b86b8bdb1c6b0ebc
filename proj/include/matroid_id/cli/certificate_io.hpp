#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "matroid_id/cert/certify.hpp"

namespace matroid_id::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kFormatName = "matroid-id certificates";

#ifdef MATROID_ID_VERSION
inline constexpr const char* kToolVersion = MATROID_ID_VERSION;
#else
inline constexpr const char* kToolVersion = "unknown";
#endif

// Coordinate labels are written element by element with the same text as
// phylo::GroupElement::label: "0"/"1" for Z2, "00", "10", "01", "11" for Z2xZ2.
inline json label_to_json(const phylo::CoordinateLabel& g, phylo::Group group) {
  json out = json::array();
  for (auto v : g) out.push_back(phylo::GroupElement(group, v).label());
  return out;
}

inline phylo::CoordinateLabel label_from_json(const json& j, phylo::Group group) {
  if (!j.is_array()) throw DataError("coordinate must be an array of group elements");
  phylo::CoordinateLabel g;
  for (const auto& e : j) {
    if (!e.is_string()) throw DataError("group element must be a string");
    const std::string s = e.get<std::string>();
    unsigned v = 0;
    if (group == phylo::Group::Z2 && (s == "0" || s == "1")) {
      v = static_cast<unsigned>(s[0] - '0');
    } else if (group == phylo::Group::Z2xZ2 && s.size() == 2 && (s[0] == '0' || s[0] == '1') &&
               (s[1] == '0' || s[1] == '1')) {
      v = static_cast<unsigned>(s[0] - '0') | static_cast<unsigned>(s[1] - '0') << 1;
    } else {
      throw DataError("bad group element \"" + s + "\"");
    }
    g.push_back(static_cast<std::uint8_t>(v));
  }
  return g;
}

inline json header() { return {{"format", kFormatName}, {"version", kFormatVersion}, {"tool_version", kToolVersion}}; }

inline json to_json(const Certificate& c) {
  if (!c.case_id) throw DataError("certificate has no case id");
  const phylo::Group group = phylo::group_of(c.case_id->kind);
  json v = {{"kind", c.verification.kind == Verification::Kind::Symbolic ? "symbolic" : "schwartz-zippel"}};
  if (c.verification.kind == Verification::Kind::SchwartzZippel) {
    v["epsilon"] = c.verification.epsilon.get_str();
    v["l"] = c.verification.amplification;
    v["E"] = c.verification.sample_size.get_str();
    v["alpha"] = c.verification.alpha;
  }
  json subset = json::array();
  for (const auto& g : c.labels) subset.push_back(label_to_json(g, group));
  json out = {{"version", kFormatVersion},
                {"model", phylo::to_string(c.case_id->kind)},
                {"case", {{"left", c.case_id->left.parts}, {"right", c.case_id->right.parts}}},
                {"subset", subset},
                {"direction", to_string(c.direction)},
                {"verification", v},
                {"seed", c.seed},
                {"timestamp", c.timestamp}};
  // Parameter identifications behind the symbols of the reduced models.
  if (c.case_id->kind == phylo::ModelKind::K2P) out["identifications"] = "a_01 = a_11";
  if (c.case_id->kind == phylo::ModelKind::JC) out["identifications"] = "a_10 = a_01 = a_11";
  return out;
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw DataError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw DataError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw DataError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace detail

// Parses one record. Labels are kept; column indices are resolved by
// verify_certificate against the rebuilt models.
inline Certificate from_json(const json& j) {
  using detail::field;
  if (!j.is_object()) throw DataError("record must be a JSON object");
  try {
    if (field(j, "version").get<int>() != kFormatVersion) throw DataError("unsupported record version");
    Certificate c;
    CaseDescriptor id;
    id.kind = phylo::parse_model_kind(field(j, "model").get<std::string>());
    const json& cs = field(j, "case");
    id.left = parse_model_spec(detail::string_list(field(cs, "left"), "case.left"));
    id.right = parse_model_spec(detail::string_list(field(cs, "right"), "case.right"));
    c.case_id = id;
    const phylo::Group group = phylo::group_of(id.kind);
    const json& subset = field(j, "subset");
    if (!subset.is_array()) throw DataError("subset must be an array");
    for (const auto& g : subset) c.labels.push_back(label_from_json(g, group));
    c.direction = parse_direction(field(j, "direction").get<std::string>());
    const json& v = field(j, "verification");
    const std::string kind = field(v, "kind").get<std::string>();
    if (kind == "symbolic") {
      c.verification.kind = Verification::Kind::Symbolic;
    } else if (kind == "schwartz-zippel") {
      c.verification.kind = Verification::Kind::SchwartzZippel;
      c.verification.epsilon = parse_rational(field(v, "epsilon").get<std::string>());
      c.verification.amplification = field(v, "l").get<unsigned>();
      c.verification.sample_size = Integer(field(v, "E").get<std::string>(), 10);
      c.verification.alpha = field(v, "alpha").get<unsigned>();
    } else {
      throw DataError("unknown verification kind \"" + kind + "\"");
    }
    c.seed = field(j, "seed").get<std::uint64_t>();
    if (auto it = j.find("timestamp"); it != j.end()) c.timestamp = it->get<std::string>();
    return c;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("malformed record: ") + e.what());
  }
}

// A certificate file is JSON Lines: one header object, then one record per
// line, so a running campaign can append as cases finish.
struct FileLine {
  std::size_t line = 0;
  std::variant<Certificate, std::string> content;  // record or parse error
};

struct CertificateFile {
  std::vector<FileLine> records;
  bool ok() const {
    for (const auto& r : records)
      if (std::holds_alternative<std::string>(r.content)) return false;
    return true;
  }
};

// Reads a file; a bad header throws DataError, bad records are reported per
// line. Blank lines are skipped.
inline CertificateFile read_certificates(std::istream& in) {
  CertificateFile file;
  std::string text;
  std::size_t line = 0;
  bool have_header = false;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_header) {
      json h = json::parse(text, nullptr, false);
      if (h.is_discarded() || !h.is_object() || h.value("format", "") != kFormatName)
        throw DataError("line " + std::to_string(line) + ": not a certificate file header");
      if (h.value("version", 0) != kFormatVersion)
        throw DataError("line " + std::to_string(line) + ": unsupported format version");
      have_header = true;
      continue;
    }
    FileLine r{line, std::string()};
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
      r.content = std::string("invalid JSON");
    } else {
      try {
        r.content = from_json(j);
      } catch (const DataError& e) {
        r.content = std::string(e.what());
      }
    }
    file.records.push_back(std::move(r));
  }
  if (!have_header) throw DataError("empty certificate file");
  return file;
}

inline void write_record(std::ostream& out, const Certificate& c) { out << to_json(c).dump() << '\n'; }

}  // namespace matroid_id::io
