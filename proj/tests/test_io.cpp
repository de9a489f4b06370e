#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mealy/families.hpp"
#include "mealy/io.hpp"
#include "test_util.hpp"

using namespace mealy;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("JSON round trip is byte stable") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Automaton a = testing::random_automaton(rng, 1 + trial % 5, 2 + trial % 4, trial % 2 == 0);
    const std::string text = to_json(a);
    Automaton b = from_json(text);
    REQUIRE(same_tables(a, b));
    REQUIRE(b.state_names() == a.state_names());
    REQUIRE(to_json(b) == text);
  }
}

TEST_CASE("JSON fixture matches the divide-by-4 base-3 automaton") {
  const std::string text = slurp(std::string(TEST_DATA_DIR) + "/d43.json");
  Automaton fixture = from_json(text);
  Automaton built = dual_multiplication_automaton(4, 3);
  REQUIRE(same_tables(fixture, built));
  REQUIRE(fixture.state_names() == built.state_names());
  REQUIRE(to_json(built) == text);
}

TEST_CASE("JSON field order and shape") {
  const std::string text = to_json(identity_automaton(2));
  // Keys are emitted in a fixed order so output is diffable.
  REQUIRE(text.find("\"alphabet_size\"") < text.find("\"states\""));
  REQUIRE(text.find("\"states\"") < text.find("\"rho\""));
  REQUIRE(text.find("\"rho\"") < text.find("\"tau\""));
  REQUIRE(text.back() == '\n');
}

TEST_CASE("JSON parse errors") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      from_json(text);
      FAIL("expected parse_error for: " << text);
    } catch (const automaton_error& e) {
      REQUIRE(e.code() == errc::parse_error);
    }
  };

  SECTION("not JSON at all") { expect_parse_error("zzz"); }
  SECTION("not an object") { expect_parse_error("[1,2,3]"); }
  SECTION("missing keys") {
    expect_parse_error(R"({"alphabet_size": 2, "states": ["a"], "rho": [[0,1]]})");
    expect_parse_error(R"({"states": ["a"], "rho": [[0,1]], "tau": [[0,0]]})");
  }
  SECTION("unknown key") {
    expect_parse_error(
        R"({"alphabet_size": 2, "states": ["a"], "rho": [[0,1]], "tau": [[0,0]], "extra": 1})");
  }
  SECTION("wrong types") {
    expect_parse_error(R"({"alphabet_size": "2", "states": ["a"], "rho": [[0,1]], "tau": [[0,0]]})");
    expect_parse_error(R"({"alphabet_size": 2, "states": [7], "rho": [[0,1]], "tau": [[0,0]]})");
    expect_parse_error(R"({"alphabet_size": 2, "states": ["a"], "rho": [[0,1.5]], "tau": [[0,0]]})");
    expect_parse_error(R"({"alphabet_size": 2, "states": ["a"], "rho": 3, "tau": [[0,0]]})");
  }
  SECTION("ragged rows") {
    expect_parse_error(R"({"alphabet_size": 2, "states": ["a"], "rho": [[0]], "tau": [[0,0]]})");
    expect_parse_error(R"({"alphabet_size": 2, "states": ["a","b"], "rho": [[0,1]], "tau": [[0,0]]})");
  }
  SECTION("out-of-range entries are table validation errors") {
    try {
      from_json(R"({"alphabet_size": 2, "states": ["a"], "rho": [[0,2]], "tau": [[0,0]]})");
      FAIL("expected out_of_range_entry");
    } catch (const automaton_error& e) {
      REQUIRE(e.code() == errc::out_of_range_entry);
    }
  }
}

TEST_CASE("DOT export") {
  Automaton a = multiplication_automaton(3, 2);
  const std::string dot = export_dot(a, "s32");
  const std::string expected =
      "digraph \"s32\" {\n"
      "  rankdir=LR;\n"
      "  node [shape=circle];\n"
      "  \"s0\";\n"
      "  \"s1\";\n"
      "  \"s2\";\n"
      "  \"s0\" -> \"s0\" [label=\"0|0\"];\n"
      "  \"s0\" -> \"s1\" [label=\"1|1\"];\n"
      "  \"s1\" -> \"s0\" [label=\"0|1\"];\n"
      "  \"s1\" -> \"s2\" [label=\"1|0\"];\n"
      "  \"s2\" -> \"s1\" [label=\"0|0\"];\n"
      "  \"s2\" -> \"s2\" [label=\"1|1\"];\n"
      "}\n";
  REQUIRE(dot == expected);
}

TEST_CASE("file round trip through read_automaton and write_automaton") {
  const auto dir = std::filesystem::temp_directory_path() / "mealy_io_tests";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "roundtrip.json").string();

  Automaton a = polynomial_automaton(PolyZn{3, {2, 1}});
  write_automaton(a, path);
  Automaton b = read_automaton(path);
  REQUIRE(same_tables(a, b));
  REQUIRE(b.state_names() == a.state_names());

  try {
    read_automaton((dir / "missing.json").string());
    FAIL("expected bad_argument for a missing file");
  } catch (const automaton_error& e) {
    REQUIRE(e.code() == errc::bad_argument);
  }
}

TEST_CASE("DOT export of the two-state register") {
  // The register of 1 + t over Z/2: both states shift the read digit into the
  // window, and the lit state flips its output.
  Automaton a = polynomial_automaton(PolyZn{2, {1, 1}});
  REQUIRE(export_dot(a, "register") ==
          "digraph \"register\" {\n"
          "  rankdir=LR;\n"
          "  node [shape=circle];\n"
          "  \"q0\";\n"
          "  \"q1\";\n"
          "  \"q0\" -> \"q0\" [label=\"0|0\"];\n"
          "  \"q0\" -> \"q1\" [label=\"1|1\"];\n"
          "  \"q1\" -> \"q0\" [label=\"0|1\"];\n"
          "  \"q1\" -> \"q1\" [label=\"1|0\"];\n"
          "}\n");
}

TEST_CASE("DOT export escapes quotes and backslashes in names") {
  Automaton a = from_wreath_recursion(
      2, {WreathState{"q\"\\", {0, 1}, {"q\"\\", "q\"\\"}}});
  const std::string dot = export_dot(a);
  REQUIRE(dot.find("\"q\\\"\\\\\"") != std::string::npos);
}
