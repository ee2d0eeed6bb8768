#include <doctest.h>

#include <regex>

#include "oracles.hpp"
#include "scops/constructions.hpp"
#include "scops/document.hpp"
#include "scops/error.hpp"
#include "scops/minimize.hpp"
#include "scops/witnesses.hpp"

using namespace scops;

namespace {

std::string path_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.path();
  }
  return "<accepted>";
}

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

const char* kValid = R"({"kind": "dfa", "alphabet": ["a", "b"], "states": 2, "initial": 0,
  "finals": [1], "transitions": {"a": [1, 0], "b": [0, 0]}})";

}  // namespace

TEST_CASE("canonical document round trip") {
  const std::string text = oracle::read_file(SCOPS_FIXTURE_DIR "/revcat-M-2.json");
  const Dfa d = parse_dfa_document(text);
  CHECK(d == revcat_witness_M(2));
  CHECK(emit_document(d) == text);
  CHECK(emit_document(Automaton{d}) == text);
}

TEST_CASE("emitted layout") {
  const Dfa d = parse_dfa_document(kValid);
  CHECK(emit_document(d) ==
        "{\n"
        "  \"kind\": \"dfa\",\n"
        "  \"alphabet\": [\"a\", \"b\"],\n"
        "  \"states\": 2,\n"
        "  \"initial\": 0,\n"
        "  \"finals\": [1],\n"
        "  \"transitions\": {\n"
        "    \"a\": [1, 0],\n"
        "    \"b\": [0, 0]\n"
        "  }\n"
        "}\n");
}

TEST_CASE("property: witnesses survive a round trip") {
  for (const WitnessFamily family : all_witness_families()) {
    for (int size = minimum_size(family); size <= 6; ++size) {
      const Dfa d = make_witness(family, size, 3);
      const std::string text = emit_document(d);
      const Dfa back = parse_dfa_document(text);
      CHECK(back == d);
      CHECK(emit_document(back) == text);
      if (minimum_size(family) == 1) break;
    }
  }
}

TEST_CASE("NFA documents") {
  const Nfa n = catenation_nfa(reverse_nfa(revcat_witness_M(2)), revcat_witness_N(2));
  const std::string text = emit_document(n);
  CHECK(text.find("\"kind\": \"nfa\"") != std::string::npos);
  CHECK(text.find("\"epsilon\": [[0, 2]]") != std::string::npos);
  const Automaton back = parse_document(text);
  REQUIRE(std::holds_alternative<Nfa>(back));
  CHECK(emit_document(back) == text);
  const Nfa& copy = std::get<Nfa>(back);
  CHECK(copy.epsilon_successors(0) == std::vector<State>{2});
  CHECK(copy.initials() == n.initials());

  const std::string plain = emit_document(reverse_nfa(revcat_witness_M(2)));
  CHECK(plain.find("epsilon") == std::string::npos);
  CHECK_THROWS_AS(parse_dfa_document(text), DocumentError);
}

TEST_CASE("schema violations name the field") {
  CHECK(path_of(kValid) == "<accepted>");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["a", "b"], "states": 2, "initial": 0,
      "finals": [1], "transitions": {"a": [1, 0]}})") == "transitions.b");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["a", "b"], "states": 2, "initial": 0,
      "finals": [1], "transitions": {"a": [1, 0], "b": [0]}})") == "transitions.b");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["a", "b"], "states": 2, "initial": 0,
      "finals": [1], "transitions": {"a": [1, 2], "b": [0, 0]}})") == "transitions.a[1]");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["a", "b"], "states": 2, "initial": 0,
      "finals": [7], "transitions": {"a": [1, 0], "b": [0, 0]}})") == "finals[0]");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["a", "b"], "states": 2,
      "finals": [1], "transitions": {"a": [1, 0], "b": [0, 0]}})") == "initial");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["a", "b"], "states": 2, "initial": 0,
      "finals": [1], "transitions": {"a": [1, 0], "b": [0, 0], "c": [0, 0]}})") ==
        "transitions.c");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["ab"], "states": 1, "initial": 0,
      "finals": [], "transitions": {}})") == "alphabet[0]");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["a", "a"], "states": 1, "initial": 0,
      "finals": [], "transitions": {"a": [0]}})") == "alphabet");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["a"], "states": 0, "initial": 0,
      "finals": [], "transitions": {"a": []}})") == "states");
  CHECK(path_of(R"({"kind": "dfa", "alphabet": ["a"], "states": 1, "initial": 0,
      "finals": [], "transitions": {"a": [0]}, "extra": 1})") == "extra");
  CHECK(path_of(R"({"kind": "pda"})") == "kind");
  CHECK(path_of("[1, 2]") == "$");
  CHECK(path_of("{not json") == "$");
  CHECK(path_of(R"({"kind": "nfa", "alphabet": ["a"], "states": 2, "initials": [0],
      "finals": [1], "transitions": {"a": [[1], []]}, "epsilon": [[0, 5]]})") == "epsilon[0][1]");
  CHECK(path_of(R"({"kind": "nfa", "alphabet": ["a"], "states": 2, "initials": [0],
      "finals": [1], "transitions": {"a": [[1], [3]]}})") == "transitions.a[1][0]");
}

TEST_CASE("DOT output") {
  const std::string dot = emit_dot(revcat_witness_M(2));
  CHECK(count(dot, std::regex(R"(\d+ -> \d+ \[label="[a-d]"\];)")) == 8);
  CHECK(count(dot, std::regex("doublecircle")) == 1);
  CHECK(dot.find("1 [shape=doublecircle];") != std::string::npos);
  CHECK(dot.find("start -> 0;") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot == emit_dot(revcat_witness_M(2)));

  const Nfa n = catenation_nfa(reverse_nfa(revcat_witness_M(2)), revcat_witness_N(2));
  const std::string ndot = emit_dot(n);
  CHECK(ndot.find("[label=\"&epsilon;\"]") != std::string::npos);
  CHECK(count(ndot, std::regex(R"(start\d+ -> \d+;)")) == n.initials().size());
}
