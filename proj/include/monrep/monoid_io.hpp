// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0
#ifndef MONREP_MONOID_IO_HPP
#define MONREP_MONOID_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "matrix_monoid.hpp"
#include "monoid.hpp"
#include "report.hpp"

namespace monrep {

inline constexpr char tool_version[] = "monrep 0.1.0";

// A self-describing monoid input document.  Three kinds are understood:
//   "table"           full multiplication table, 0-based indices
//   "transformations" generating transformations as 1-indexed image strings
//   "matrix_monoid"   all n-by-n matrices over F_q
struct MonoidFile {
  std::string kind;
  std::vector<std::vector<std::uint32_t>> table;  // kind == "table"
  std::vector<std::string> labels;                // optional with "table"
  std::size_t degree = 0;                         // kind == "transformations"
  std::vector<std::string> generators;            // image strings, e.g. "231"
  std::size_t n = 0;                              // kind == "matrix_monoid"
  std::uint32_t q = 0;
};

namespace detail {

inline nlohmann::json const& field(nlohmann::json const& j, char const* name) {
  if (!j.contains(name))
    throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

inline std::uint64_t uint_field(nlohmann::json const& j, char const* name) {
  auto const& v = field(j, name);
  if (!v.is_number_unsigned())
    throw ParseError(std::string("field '") + name
                     + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace detail

inline MonoidFile parse_monoid_file(std::string const& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document root must be an object");

  MonoidFile mf;
  auto const& kind = detail::field(j, "kind");
  if (!kind.is_string()) throw ParseError("field 'kind' must be a string");
  mf.kind = kind.get<std::string>();

  if (mf.kind == "table") {
    auto const& t = detail::field(j, "table");
    if (!t.is_array()) throw ParseError("field 'table' must be an array");
    for (auto const& row : t) {
      if (!row.is_array())
        throw ParseError("field 'table' rows must be arrays");
      std::vector<std::uint32_t> r;
      for (auto const& v : row) {
        if (!v.is_number_unsigned())
          throw ParseError("field 'table' entries must be non-negative integers");
        r.push_back(v.get<std::uint32_t>());
      }
      mf.table.push_back(std::move(r));
    }
    if (j.contains("labels")) {
      auto const& ls = j.at("labels");
      if (!ls.is_array()) throw ParseError("field 'labels' must be an array");
      for (auto const& l : ls) {
        if (!l.is_string())
          throw ParseError("field 'labels' entries must be strings");
        mf.labels.push_back(l.get<std::string>());
      }
    }
  } else if (mf.kind == "transformations") {
    mf.degree = static_cast<std::size_t>(detail::uint_field(j, "degree"));
    auto const& gs = detail::field(j, "generators");
    if (!gs.is_array()) throw ParseError("field 'generators' must be an array");
    for (auto const& g : gs) {
      if (!g.is_string())
        throw ParseError("field 'generators' entries must be strings");
      mf.generators.push_back(g.get<std::string>());
    }
  } else if (mf.kind == "matrix_monoid") {
    mf.n = static_cast<std::size_t>(detail::uint_field(j, "n"));
    mf.q = static_cast<std::uint32_t>(detail::uint_field(j, "q"));
  } else {
    throw ParseError("field 'kind': unknown kind \"" + mf.kind + "\"");
  }
  return mf;
}

// Image strings use the digits 1..degree, one character per point.
inline std::vector<std::vector<std::uint32_t>>
parse_image_strings(std::vector<std::string> const& gens, std::size_t degree) {
  if (degree == 0 || degree > 9)
    throw ParseError("field 'degree': image strings support degrees 1 through 9");
  std::vector<std::vector<std::uint32_t>> out;
  for (auto const& g : gens) {
    if (g.size() != degree)
      throw ParseError("field 'generators': image string \"" + g
                       + "\" does not have " + std::to_string(degree)
                       + " characters");
    std::vector<std::uint32_t> images;
    for (char c : g) {
      if (c < '1' || c > static_cast<char>('0' + degree))
        throw ParseError("field 'generators': image character '"
                         + std::string(1, c) + "' out of range for degree "
                         + std::to_string(degree));
      images.push_back(static_cast<std::uint32_t>(c - '1'));
    }
    out.push_back(std::move(images));
  }
  return out;
}

inline Monoid build_monoid(MonoidFile const& mf) {
  if (mf.kind == "table") return monoid_from_table(mf.table, mf.labels);
  if (mf.kind == "transformations")
    return monoid_from_transformations(
        mf.degree, parse_image_strings(mf.generators, mf.degree));
  if (mf.kind == "matrix_monoid") return matrix_monoid(mf.n, mf.q);
  throw ParseError("field 'kind': unknown kind \"" + mf.kind + "\"");
}

// Canonical form: sorted keys, two-space indent, trailing newline.  Reruns
// with identical content produce byte-identical text.
inline std::string canonical_json(nlohmann::json const& j) {
  return j.dump(2) + "\n";
}

inline std::string write_monoid_file(MonoidFile const& mf) {
  nlohmann::json j;
  j["kind"] = mf.kind;
  if (mf.kind == "table") {
    j["table"] = mf.table;
    if (!mf.labels.empty()) j["labels"] = mf.labels;
  } else if (mf.kind == "transformations") {
    j["degree"] = mf.degree;
    j["generators"] = mf.generators;
  } else if (mf.kind == "matrix_monoid") {
    j["n"] = mf.n;
    j["q"] = mf.q;
  } else {
    throw ParseError("field 'kind': unknown kind \"" + mf.kind + "\"");
  }
  return canonical_json(j);
}

inline std::string read_text_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << text;
  if (!out) throw ParseError("write failed: " + path);
}

inline MonoidFile load_monoid_file(std::string const& path) {
  return parse_monoid_file(read_text_file(path));
}

// Comma-separated element indices, e.g. "0,3,5".
inline std::vector<std::uint32_t> parse_element_list(std::string const& spec) {
  std::vector<std::uint32_t> out;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    std::size_t a = token.find_first_not_of(" \t");
    std::size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw ParseError("element list \"" + spec + "\" has an empty entry");
    token = token.substr(a, b - a + 1);
    if (token.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("element list entry \"" + token + "\" is not an index");
    out.push_back(static_cast<std::uint32_t>(std::stoul(token)));
  }
  if (out.empty() && spec.find_first_not_of(" \t") != std::string::npos)
    throw ParseError("element list \"" + spec + "\" has no entries");
  return out;
}

// Subgroup spec: the literal "units" resolves to the unit group; anything
// else is read as an element list and closed into a subgroup.
inline Subgroup resolve_subgroup(Monoid const& m, std::string const& spec) {
  if (spec == "units") return unit_group(m);
  return subgroup_closure(m, parse_element_list(spec));
}

inline nlohmann::json checks_json(std::vector<CheckRecord> const& checks) {
  auto arr = nlohmann::json::array();
  for (auto const& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = c.passed ? "pass" : "fail";
    e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  return arr;
}

// Common report envelope.  Timing is written to standard output only; the
// file carries a null placeholder so reruns stay byte-identical.
inline nlohmann::json report_envelope(std::string const& command,
                                      std::string const& instance,
                                      std::uint64_t seed,
                                      std::vector<CheckRecord> const& checks) {
  nlohmann::json j;
  j["command"] = command;
  j["instance"] = instance;
  j["seed"] = seed;
  j["tool_version"] = tool_version;
  j["timing_ms"] = nullptr;
  j["checks"] = checks_json(checks);
  bool all = true;
  for (auto const& c : checks) all = all && c.passed;
  j["overall_pass"] = all;
  return j;
}

inline void write_report_file(nlohmann::json const& j, std::string const& path) {
  write_text_file(path, canonical_json(j));
}

}  // namespace monrep

#endif  // MONREP_MONOID_IO_HPP
