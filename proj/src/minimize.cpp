#include "scops/minimize.hpp"

#include <algorithm>
#include <utility>

#include "scops/determinize.hpp"
#include "scops/nfa.hpp"

namespace scops {

namespace {

constexpr State kUnseen = static_cast<State>(-1);

// Refinable partition over states 0..n-1. Elements of a block occupy
// elems[first, end); the marked ones are kept in elems[first, mid).
class Partition {
 public:
  explicit Partition(std::size_t n) : elems_(n), loc_(n), block_of_(n, 0) {
    for (State q = 0; q < n; ++q) elems_[q] = loc_[q] = q;
  }

  std::size_t block_count() const { return first_.size(); }
  std::size_t size(std::size_t b) const { return end_[b] - first_[b]; }
  std::size_t block_of(State q) const { return block_of_[q]; }
  const State* begin(std::size_t b) const { return elems_.data() + first_[b]; }
  const State* end(std::size_t b) const { return elems_.data() + end_[b]; }

  // Groups states by a key; one block per distinct key, in key order.
  template <class Key>
  void init(Key&& key) {
    std::stable_sort(elems_.begin(), elems_.end(),
                     [&](State x, State y) { return key(x) < key(y); });
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i == 0 || key(elems_[i]) != key(elems_[i - 1])) {
        if (i != 0) end_.back() = i;
        first_.push_back(i);
        mid_.push_back(i);
        end_.push_back(elems_.size());
      }
      loc_[elems_[i]] = i;
      block_of_[elems_[i]] = first_.size() - 1;
    }
  }

  // Returns true when this is the first mark in the state's block.
  bool mark(State q) {
    const std::size_t b = block_of_[q];
    const std::size_t i = loc_[q];
    if (i < mid_[b]) return false;
    const bool first_mark = mid_[b] == first_[b];
    const std::size_t j = mid_[b]++;
    std::swap(elems_[i], elems_[j]);
    loc_[elems_[i]] = i;
    loc_[elems_[j]] = j;
    return first_mark;
  }

  // Splits the marked part off into a new block. Returns the new block id,
  // or -1 when every element was marked (no split).
  long split(std::size_t b) {
    if (mid_[b] == end_[b]) {
      mid_[b] = first_[b];
      return -1;
    }
    const std::size_t nb = first_.size();
    first_.push_back(first_[b]);
    end_.push_back(mid_[b]);
    mid_.push_back(first_[b]);
    first_[b] = mid_[b];
    for (std::size_t i = first_[nb]; i < end_[nb]; ++i) block_of_[elems_[i]] = nb;
    return static_cast<long>(nb);
  }

 private:
  std::vector<State> elems_;
  std::vector<std::size_t> loc_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> first_, mid_, end_;
};

}  // namespace

Dfa canonical_form(const Dfa& d) {
  const std::size_t k = d.symbol_count();
  std::vector<State> order{d.initial()};
  std::vector<State> id(d.state_count(), kUnseen);
  id[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      const State t = d.next(order[i], a);
      if (id[t] == kUnseen) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<State> table;
  table.reserve(order.size() * k);
  std::vector<State> finals;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) table.push_back(id[d.next(order[i], a)]);
    if (d.is_final(order[i])) finals.push_back(static_cast<State>(i));
  }
  return Dfa(d.alphabet(), order.size(), std::move(table), 0, finals);
}

Dfa minimize_hopcroft(const Dfa& input) {
  const Dfa d = canonical_form(input);
  const std::size_t n = d.state_count();
  const std::size_t k = d.symbol_count();

  // Inverse transitions in CSR form, indexed by target * k + symbol.
  std::vector<std::size_t> inv_start(n * k + 1, 0);
  for (State q = 0; q < n; ++q) {
    for (Symbol a = 0; a < k; ++a) ++inv_start[d.next(q, a) * k + a + 1];
  }
  for (std::size_t i = 1; i < inv_start.size(); ++i) inv_start[i] += inv_start[i - 1];
  std::vector<State> inv(n * k);
  {
    auto fill = inv_start;
    for (State q = 0; q < n; ++q) {
      for (Symbol a = 0; a < k; ++a) inv[fill[d.next(q, a) * k + a]++] = q;
    }
  }

  Partition part(n);
  part.init([&](State q) { return d.is_final(q) ? 0 : 1; });

  std::vector<std::pair<std::size_t, Symbol>> work;
  std::vector<std::vector<char>> in_work;
  auto push = [&](std::size_t b, Symbol a) {
    if (in_work.size() <= b) in_work.resize(b + 1, std::vector<char>(k, 0));
    if (!in_work[b][a]) {
      in_work[b][a] = 1;
      work.emplace_back(b, a);
    }
  };
  in_work.resize(part.block_count(), std::vector<char>(k, 0));
  if (part.block_count() == 2) {
    const std::size_t smaller = part.size(0) <= part.size(1) ? 0 : 1;
    for (Symbol a = 0; a < k; ++a) push(smaller, a);
  }

  std::vector<State> splitter;
  std::vector<std::size_t> touched;
  while (!work.empty()) {
    const auto [b, a] = work.back();
    work.pop_back();
    in_work[b][a] = 0;

    splitter.assign(part.begin(b), part.end(b));
    touched.clear();
    for (State t : splitter) {
      for (std::size_t i = inv_start[t * k + a]; i < inv_start[t * k + a + 1]; ++i) {
        const State p = inv[i];
        const std::size_t y = part.block_of(p);
        if (part.mark(p)) touched.push_back(y);
      }
    }
    for (std::size_t y : touched) {
      const long z = part.split(y);
      if (z < 0) continue;
      const auto nz = static_cast<std::size_t>(z);
      in_work.resize(part.block_count(), std::vector<char>(k, 0));
      for (Symbol c = 0; c < k; ++c) {
        if (in_work[y][c]) {
          push(nz, c);
        } else {
          push(part.size(nz) <= part.size(y) ? nz : y, c);
        }
      }
    }
  }

  const std::size_t blocks = part.block_count();
  std::vector<State> table(blocks * k);
  std::vector<State> finals;
  for (std::size_t b = 0; b < blocks; ++b) {
    const State rep = *part.begin(b);
    for (Symbol a = 0; a < k; ++a) {
      table[b * k + a] = static_cast<State>(part.block_of(d.next(rep, a)));
    }
    if (d.is_final(rep)) finals.push_back(static_cast<State>(b));
  }
  const auto initial = static_cast<State>(part.block_of(d.initial()));
  return canonical_form(Dfa(d.alphabet(), blocks, std::move(table), initial, finals));
}

Dfa minimize_brzozowski(const Dfa& d) {
  const Dfa once = subset_construction(reverse_nfa(d));
  return subset_construction(reverse_nfa(once));
}

}  // namespace scops
