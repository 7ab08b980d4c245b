// JSON files for character tables, fusion maps and verification records.
//
//   table:  {"name", "order", "exponent", "classes": [{"size", "order", "label"}],
//            "irreducibles": [[cyclotomic, ...], ...], "characterLabels"?: [str]}
//   fusion: {"source", "target", "map": [int, ...]}
#pragma once

#include "charfield/chartab.hpp"
#include "charfield/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace charfield {

namespace detail {

inline const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* key, const std::string& where) {
  try {
    return require(j, key, where).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(where + ": bad \"" + key + "\": " + e.what());
  }
}

}  // namespace detail

inline Json table_to_json(const CharacterTable& t) {
  Json classes = Json::array();
  for (const auto& c : t.classes) classes.push_back(Json{{"size", c.size}, {"order", c.order}, {"label", c.label}});
  Json rows = Json::array();
  for (const auto& r : t.irreducibles) {
    Json row = Json::array();
    for (const auto& z : r) row.push_back(cyclotomic_to_json(z));
    rows.push_back(std::move(row));
  }
  Json j{{"name", t.name}, {"order", t.order}, {"exponent", t.exponent}, {"classes", classes}, {"irreducibles", rows}};
  if (!t.character_labels.empty()) j["characterLabels"] = t.character_labels;
  return j;
}

/// Parses and validates every table invariant.
inline CharacterTable table_from_json(const Json& j) {
  CharacterTable t;
  t.name = detail::get_as<std::string>(j, "name", "table");
  const std::string where = "table " + t.name;
  t.order = detail::get_as<std::int64_t>(j, "order", where);
  t.exponent = detail::get_as<std::int64_t>(j, "exponent", where);
  const Json& classes = detail::require(j, "classes", where);
  if (!classes.is_array()) throw SchemaError(where + ": \"classes\" must be an array");
  for (const auto& c : classes)
    t.classes.push_back({detail::get_as<std::int64_t>(c, "size", where), detail::get_as<std::int64_t>(c, "order", where),
                         detail::get_as<std::string>(c, "label", where)});
  const Json& rows = detail::require(j, "irreducibles", where);
  if (!rows.is_array()) throw SchemaError(where + ": \"irreducibles\" must be an array");
  for (const auto& r : rows) {
    if (!r.is_array()) throw SchemaError(where + ": each character must be an array of values");
    auto& row = t.irreducibles.emplace_back();
    for (const auto& v : r) {
      try {
        row.push_back(cyclotomic_from_json(v));
      } catch (const ParseError& e) {
        throw SchemaError(where + ": " + e.what());
      }
    }
  }
  if (j.contains("characterLabels")) t.character_labels = detail::get_as<std::vector<std::string>>(j, "characterLabels", where);
  validate_table(t);
  return t;
}

inline Json fusion_to_json(const FusionMap& f) { return Json{{"source", f.source}, {"target", f.target}, {"map", f.map}}; }

inline FusionMap fusion_from_json(const Json& j) {
  FusionMap f;
  f.source = detail::get_as<std::string>(j, "source", "fusion");
  f.target = detail::get_as<std::string>(j, "target", "fusion");
  f.map = detail::get_as<std::vector<std::size_t>>(j, "map", "fusion " + f.source + "->" + f.target);
  return f;
}

inline Json record_to_json(const VerificationRecord& r) {
  Json j{{"group", r.group},         {"charIndex", r.char_index}, {"prime", r.prime},
         {"a", r.a},                 {"conductor", r.conductor},  {"index", r.index},
         {"degree", detail::integer_to_json(r.degree)}, {"check", r.check}, {"verdict", r.verdict()}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

/// One top-level key per line and one class or character per line.
inline std::string dump_table(const CharacterTable& t) {
  const Json j = table_to_json(t);
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << Json(t.name).dump() << ",\n";
  os << "  \"order\": " << t.order << ",\n";
  os << "  \"exponent\": " << t.exponent << ",\n";
  os << "  \"classes\": [\n";
  for (std::size_t i = 0; i < j["classes"].size(); ++i)
    os << "    " << j["classes"][i].dump() << (i + 1 < j["classes"].size() ? ",\n" : "\n");
  os << "  ],\n";
  if (j.contains("characterLabels")) os << "  \"characterLabels\": " << j["characterLabels"].dump() << ",\n";
  os << "  \"irreducibles\": [\n";
  for (std::size_t i = 0; i < j["irreducibles"].size(); ++i)
    os << "    " << j["irreducibles"][i].dump() << (i + 1 < j["irreducibles"].size() ? ",\n" : "\n");
  os << "  ]\n}\n";
  return os.str();
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

inline CharacterTable load_table(const std::filesystem::path& path) { return table_from_json(read_json_file(path)); }

inline void save_table(const CharacterTable& t, const std::filesystem::path& path) { write_text_file(path, dump_table(t)); }

}  // namespace charfield
