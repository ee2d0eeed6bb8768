#include "scops/analysis.hpp"

#include <algorithm>

#include "scops/error.hpp"

namespace scops {

bool accepts(const Dfa& d, const Word& word) { return d.is_final(d.run(d.initial(), word)); }

bool accepts(const Dfa& d, std::string_view word) {
  return accepts(d, d.alphabet().parse_word(word));
}

namespace {

struct PairSearch {
  // Parent links over the pair graph, indexed by p * n2 + q.
  std::vector<std::size_t> parent;
  std::vector<Symbol> via;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// BFS over pairs (x in a, y in b) from (start_a, start_b). Returns the first
// pair where acceptance differs, or kNone.
std::size_t find_disagreement(const Dfa& a, State start_a, const Dfa& b, State start_b,
                              PairSearch* trace) {
  const std::size_t n2 = b.state_count();
  const std::size_t k = a.symbol_count();
  std::vector<char> seen(a.state_count() * n2, 0);
  std::vector<std::size_t> queue{start_a * n2 + start_b};
  seen[queue.front()] = 1;
  if (trace != nullptr) {
    trace->parent.assign(seen.size(), kNone);
    trace->via.assign(seen.size(), 0);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cell = queue[head];
    const auto x = static_cast<State>(cell / n2);
    const auto y = static_cast<State>(cell % n2);
    if (a.is_final(x) != b.is_final(y)) return cell;
    for (Symbol s = 0; s < k; ++s) {
      const std::size_t next = a.next(x, s) * n2 + b.next(y, s);
      if (!seen[next]) {
        seen[next] = 1;
        if (trace != nullptr) {
          trace->parent[next] = cell;
          trace->via[next] = s;
        }
        queue.push_back(next);
      }
    }
  }
  return kNone;
}

}  // namespace

bool equivalent(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw InputError("equivalence check needs identical alphabets");
  }
  return find_disagreement(a, a.initial(), b, b.initial(), nullptr) == kNone;
}

std::optional<Word> distinguishing_word(const Dfa& d, State p, State q) {
  if (p >= d.state_count() || q >= d.state_count()) throw InputError("state id out of range");
  PairSearch trace;
  std::size_t cell = find_disagreement(d, p, d, q, &trace);
  if (cell == kNone) return std::nullopt;
  Word word;
  const std::size_t root = p * d.state_count() + q;
  while (cell != root) {
    word.push_back(trace.via[cell]);
    cell = trace.parent[cell];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Word> enumerate_accepted(const Dfa& d, std::size_t max_len) {
  const std::size_t k = d.symbol_count();
  // live[q]: some final state is reachable from q.
  std::vector<char> live(d.state_count(), 0);
  for (State q = 0; q < d.state_count(); ++q) live[q] = d.is_final(q) ? 1 : 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (State q = 0; q < d.state_count(); ++q) {
      if (live[q]) continue;
      for (Symbol a = 0; a < k; ++a) {
        if (live[d.next(q, a)]) {
          live[q] = 1;
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<Word> out;
  std::vector<std::pair<Word, State>> layer;
  if (live[d.initial()]) layer.emplace_back(Word{}, d.initial());
  for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::pair<Word, State>> next_layer;
    for (auto& [word, state] : layer) {
      if (d.is_final(state)) out.push_back(word);
      if (len == max_len) continue;
      for (Symbol a = 0; a < k; ++a) {
        const State t = d.next(state, a);
        if (!live[t]) continue;
        Word longer = word;
        longer.push_back(a);
        next_layer.emplace_back(std::move(longer), t);
      }
    }
    layer = std::move(next_layer);
  }
  return out;
}

}  // namespace scops
