#pragma once

/// @file io.hpp
/// Serialization: a small JSON document format for automata and a Graphviz
/// export.  Both directions are deterministic, so serializing twice gives
/// byte-identical output and a load/save round trip is stable.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mealy/automaton.hpp"

namespace mealy {

/// Serialize as a JSON object with exactly the keys alphabet_size, states,
/// rho and tau, two-space indented, ending in a newline.
inline std::string to_json(const Automaton& a) {
  nlohmann::ordered_json j;
  j["alphabet_size"] = a.num_letters();
  j["states"] = a.state_names();
  nlohmann::ordered_json rho = nlohmann::ordered_json::array();
  nlohmann::ordered_json tau = nlohmann::ordered_json::array();
  for (int q = 0; q < a.num_states(); ++q) {
    rho.push_back(a.rho_row(q));
    tau.push_back(a.tau_row(q));
  }
  j["rho"] = std::move(rho);
  j["tau"] = std::move(tau);
  return j.dump(2) + "\n";
}

/// Parse the document format written by to_json.  Unknown keys, wrong types,
/// and ragged rows are rejected with parse_error; entry ranges are then
/// checked by the Automaton constructor.
inline Automaton from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(errc::parse_error, "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "alphabet_size" && key != "states" && key != "rho" && key != "tau")
      fail(errc::parse_error, "unknown key '" + key + "'");
  }
  for (const char* key : {"alphabet_size", "states", "rho", "tau"})
    if (!j.contains(key)) fail(errc::parse_error, std::string("missing key '") + key + "'");
  if (!j["alphabet_size"].is_number_integer()) fail(errc::parse_error, "alphabet_size must be an integer");
  const int n = j["alphabet_size"].get<int>();
  if (!j["states"].is_array()) fail(errc::parse_error, "states must be an array of names");
  std::vector<std::string> names;
  for (const auto& s : j["states"]) {
    if (!s.is_string()) fail(errc::parse_error, "states must be an array of names");
    names.push_back(s.get<std::string>());
  }
  auto read_table = [&](const char* key) {
    const auto& t = j[key];
    if (!t.is_array() || t.size() != names.size())
      fail(errc::parse_error, std::string(key) + " must have one row per state");
    std::vector<int> flat;
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
        fail(errc::parse_error, std::string(key) + " rows must have one entry per letter");
      for (const auto& entry : row) {
        if (!entry.is_number_integer()) fail(errc::parse_error, std::string(key) + " entries must be integers");
        flat.push_back(entry.get<int>());
      }
    }
    return flat;
  };
  std::vector<int> rho = read_table("rho");
  std::vector<int> tau = read_table("tau");
  return Automaton(std::move(names), n, std::move(rho), std::move(tau));
}

/// Load an automaton from a JSON file.
inline Automaton read_automaton(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(errc::bad_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

/// Write an automaton to a JSON file (overwriting).
inline void write_automaton(const Automaton& a, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(errc::bad_argument, "cannot open '" + path + "' for writing");
  f << to_json(a);
  if (!f) fail(errc::bad_argument, "write to '" + path + "' failed");
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Graphviz digraph: one node per state, one edge per table cell labelled
/// "input|output", states in index order and letters ascending, so the text
/// is deterministic.
inline std::string export_dot(const Automaton& a, const std::string& graph_name = "automaton") {
  std::string out = "digraph \"" + detail::dot_escape(graph_name) + "\" {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=circle];\n";
  for (int q = 0; q < a.num_states(); ++q)
    out += "  \"" + detail::dot_escape(a.state_name(q)) + "\";\n";
  for (int q = 0; q < a.num_states(); ++q)
    for (int x = 0; x < a.num_letters(); ++x)
      out += "  \"" + detail::dot_escape(a.state_name(q)) + "\" -> \"" +
             detail::dot_escape(a.state_name(a.tau(q, x))) + "\" [label=\"" + std::to_string(x) + "|" +
             std::to_string(a.rho(q, x)) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace mealy
