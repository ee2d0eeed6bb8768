#include "scops/document.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "scops/error.hpp"

namespace scops {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw DocumentError(path, what);
}

const json& field(const json& root, const char* key) {
  auto it = root.find(key);
  if (it == root.end()) fail(key, "missing field");
  return *it;
}

std::size_t read_count(const json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  const auto v = value.get<long long>();
  if (v < 1) fail(path, "expected a positive integer");
  return static_cast<std::size_t>(v);
}

State read_state(const json& value, const std::string& path, std::size_t states) {
  if (!value.is_number_integer()) fail(path, "expected a state id");
  const auto v = value.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= states) {
    fail(path, "state id " + std::to_string(v) + " out of range 0.." + std::to_string(states - 1));
  }
  return static_cast<State>(v);
}

std::vector<State> read_state_list(const json& value, const std::string& path,
                                   std::size_t states) {
  if (!value.is_array()) fail(path, "expected a list of state ids");
  std::vector<State> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(read_state(value[i], path + "[" + std::to_string(i) + "]", states));
  }
  return out;
}

Alphabet read_alphabet(const json& value) {
  if (!value.is_array() || value.empty()) fail("alphabet", "expected a nonempty list");
  std::string letters;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string path = "alphabet[" + std::to_string(i) + "]";
    if (!value[i].is_string()) fail(path, "expected a string");
    const auto s = value[i].get<std::string>();
    if (s.size() != 1) fail(path, "symbols must be single characters");
    letters += s;
  }
  try {
    return Alphabet(letters);
  } catch (const InputError& e) {
    fail("alphabet", e.what());
  }
}

void check_keys(const json& root, std::initializer_list<const char*> allowed) {
  const std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& item : root.items()) {
    if (!names.count(item.key())) fail(item.key(), "unknown field");
  }
}

const json& transition_row(const json& transitions, char symbol) {
  const std::string key(1, symbol);
  auto it = transitions.find(key);
  if (it == transitions.end()) fail("transitions." + key, "missing transition row");
  if (!it->is_array()) fail("transitions." + key, "expected a list");
  return *it;
}

void check_row_keys(const json& transitions, const Alphabet& alphabet) {
  if (!transitions.is_object()) fail("transitions", "expected an object keyed by symbol");
  for (const auto& item : transitions.items()) {
    if (item.key().size() != 1 || !alphabet.contains(item.key()[0])) {
      fail("transitions." + item.key(), "symbol not in alphabet");
    }
  }
}

Dfa read_dfa(const json& root) {
  check_keys(root, {"kind", "alphabet", "states", "initial", "finals", "transitions"});
  Alphabet alphabet = read_alphabet(field(root, "alphabet"));
  const std::size_t states = read_count(field(root, "states"), "states");
  const State initial = read_state(field(root, "initial"), "initial", states);
  const auto finals = read_state_list(field(root, "finals"), "finals", states);
  const json& transitions = field(root, "transitions");
  check_row_keys(transitions, alphabet);
  std::vector<State> table(states * alphabet.size());
  for (Symbol a = 0; a < alphabet.size(); ++a) {
    const std::string path = std::string("transitions.") + alphabet.display(a);
    const json& row = transition_row(transitions, alphabet.display(a));
    if (row.size() != states) {
      fail(path, "expected " + std::to_string(states) + " entries, got " +
                     std::to_string(row.size()));
    }
    for (std::size_t q = 0; q < states; ++q) {
      table[q * alphabet.size() + a] =
          read_state(row[q], path + "[" + std::to_string(q) + "]", states);
    }
  }
  return Dfa(std::move(alphabet), states, std::move(table), initial, finals);
}

Nfa read_nfa(const json& root) {
  check_keys(root, {"kind", "alphabet", "states", "initials", "finals", "transitions", "epsilon"});
  Alphabet alphabet = read_alphabet(field(root, "alphabet"));
  const std::size_t states = read_count(field(root, "states"), "states");
  Nfa n(alphabet, states);
  for (State q : read_state_list(field(root, "initials"), "initials", states)) n.add_initial(q);
  for (State q : read_state_list(field(root, "finals"), "finals", states)) n.add_final(q);
  const json& transitions = field(root, "transitions");
  check_row_keys(transitions, alphabet);
  for (Symbol a = 0; a < alphabet.size(); ++a) {
    const std::string path = std::string("transitions.") + alphabet.display(a);
    const json& row = transition_row(transitions, alphabet.display(a));
    if (row.size() != states) {
      fail(path, "expected " + std::to_string(states) + " entries, got " +
                     std::to_string(row.size()));
    }
    for (State q = 0; q < states; ++q) {
      const std::string cell = path + "[" + std::to_string(q) + "]";
      for (State t : read_state_list(row[q], cell, states)) n.add_transition(q, a, t);
    }
  }
  if (auto it = root.find("epsilon"); it != root.end()) {
    if (!it->is_array()) fail("epsilon", "expected a list of [from, to] pairs");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "epsilon[" + std::to_string(i) + "]";
      const json& edge = (*it)[i];
      if (!edge.is_array() || edge.size() != 2) fail(path, "expected a [from, to] pair");
      n.add_epsilon(read_state(edge[0], path + "[0]", states),
                    read_state(edge[1], path + "[1]", states));
    }
  }
  return n;
}

std::string quoted(char c) { return json(std::string(1, c)).dump(); }

template <class Range>
void write_list(std::ostream& out, const Range& values) {
  out << '[';
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ", ";
    out << v;
    first = false;
  }
  out << ']';
}

void write_alphabet(std::ostream& out, const Alphabet& alphabet) {
  out << "  \"alphabet\": [";
  for (Symbol a = 0; a < alphabet.size(); ++a) {
    if (a) out << ", ";
    out << quoted(alphabet.display(a));
  }
  out << "],\n";
}

std::string dot_label(char c) {
  if (c == '"' || c == '\\') return std::string("\\") + c;
  return std::string(1, c);
}

}  // namespace

Automaton parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("$", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "expected a JSON object");
  const json& kind = field(root, "kind");
  if (!kind.is_string()) fail("kind", "expected \"dfa\" or \"nfa\"");
  const auto k = kind.get<std::string>();
  try {
    if (k == "dfa") return read_dfa(root);
    if (k == "nfa") return read_nfa(root);
  } catch (const InputError& e) {
    fail("$", e.what());
  }
  fail("kind", "expected \"dfa\" or \"nfa\", got \"" + k + "\"");
}

Dfa parse_dfa_document(std::string_view text) {
  Automaton a = parse_document(text);
  if (auto* d = std::get_if<Dfa>(&a)) return std::move(*d);
  fail("kind", "expected a dfa document");
}

std::string emit_document(const Dfa& d) {
  std::ostringstream out;
  out << "{\n  \"kind\": \"dfa\",\n";
  write_alphabet(out, d.alphabet());
  out << "  \"states\": " << d.state_count() << ",\n";
  out << "  \"initial\": " << d.initial() << ",\n";
  out << "  \"finals\": ";
  write_list(out, d.finals());
  out << ",\n  \"transitions\": {\n";
  for (Symbol a = 0; a < d.symbol_count(); ++a) {
    std::vector<State> row;
    for (State q = 0; q < d.state_count(); ++q) row.push_back(d.next(q, a));
    out << "    " << quoted(d.alphabet().display(a)) << ": ";
    write_list(out, row);
    out << (a + 1 < d.symbol_count() ? ",\n" : "\n");
  }
  out << "  }\n}\n";
  return out.str();
}

std::string emit_document(const Nfa& n) {
  std::ostringstream out;
  out << "{\n  \"kind\": \"nfa\",\n";
  write_alphabet(out, n.alphabet());
  out << "  \"states\": " << n.state_count() << ",\n";
  out << "  \"initials\": ";
  write_list(out, n.initials());
  out << ",\n  \"finals\": ";
  write_list(out, n.finals());
  out << ",\n  \"transitions\": {\n";
  for (Symbol a = 0; a < n.symbol_count(); ++a) {
    out << "    " << quoted(n.alphabet().display(a)) << ": [";
    for (State q = 0; q < n.state_count(); ++q) {
      if (q) out << ", ";
      write_list(out, n.successors(q, a));
    }
    out << (a + 1 < n.symbol_count() ? "],\n" : "]\n");
  }
  out << "  }";
  if (n.has_epsilon()) {
    out << ",\n  \"epsilon\": [";
    bool first = true;
    for (const auto& [from, to] : n.epsilon_edges()) {
      if (!first) out << ", ";
      out << '[' << from << ", " << to << ']';
      first = false;
    }
    out << ']';
  }
  out << "\n}\n";
  return out.str();
}

std::string emit_document(const Automaton& a) {
  return std::visit([](const auto& x) { return emit_document(x); }, a);
}

std::string emit_dot(const Dfa& d) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
  out << "  start -> " << d.initial() << ";\n";
  for (State q = 0; q < d.state_count(); ++q) {
    out << "  " << q << " [shape=" << (d.is_final(q) ? "doublecircle" : "circle") << "];\n";
  }
  for (State q = 0; q < d.state_count(); ++q) {
    for (Symbol a = 0; a < d.symbol_count(); ++a) {
      out << "  " << q << " -> " << d.next(q, a) << " [label=\""
          << dot_label(d.alphabet().display(a)) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string emit_dot(const Nfa& n) {
  std::ostringstream out;
  out << "digraph nfa {\n  rankdir=LR;\n";
  for (State q : n.initials()) {
    out << "  start" << q << " [shape=point];\n  start" << q << " -> " << q << ";\n";
  }
  for (State q = 0; q < n.state_count(); ++q) {
    out << "  " << q << " [shape=" << (n.is_final(q) ? "doublecircle" : "circle") << "];\n";
  }
  for (State q = 0; q < n.state_count(); ++q) {
    for (Symbol a = 0; a < n.symbol_count(); ++a) {
      for (State t : n.successors(q, a)) {
        out << "  " << q << " -> " << t << " [label=\"" << dot_label(n.alphabet().display(a))
            << "\"];\n";
      }
    }
    for (State t : n.epsilon_successors(q)) {
      out << "  " << q << " -> " << t << " [label=\"&epsilon;\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string emit_dot(const Automaton& a) {
  return std::visit([](const auto& x) { return emit_dot(x); }, a);
}

}  // namespace scops
