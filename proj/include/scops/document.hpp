#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "scops/dfa.hpp"
#include "scops/nfa.hpp"

namespace scops {

using Automaton = std::variant<Dfa, Nfa>;

/// Reads a JSON automaton document:
///
///   {"kind": "dfa", "alphabet": ["a","b"], "states": 2, "initial": 0,
///    "finals": [1], "transitions": {"a": [1,0], "b": [0,0]}}
///
/// NFAs use "initials" (list), per-state target lists in "transitions",
/// and an optional "epsilon" list of [from, to] pairs. Violations throw
/// DocumentError naming the offending field.
Automaton parse_document(std::string_view text);
Dfa parse_dfa_document(std::string_view text);

/// Canonical JSON with fixed key order; `parse_document` inverts it.
std::string emit_document(const Dfa& d);
std::string emit_document(const Nfa& n);
std::string emit_document(const Automaton& a);

/// Graphviz digraph: one labeled edge per transition, double circles for
/// final states, an unlabeled arrow from a point node into each initial state.
std::string emit_dot(const Dfa& d);
std::string emit_dot(const Nfa& n);
std::string emit_dot(const Automaton& a);

}  // namespace scops
