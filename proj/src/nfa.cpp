#include "pclyap/nfa.hpp"

#include <unordered_map>
#include <unordered_set>

#include "pclyap/detail/subsets.hpp"
#include "pclyap/errors.hpp"

namespace pclyap {

void validate_nfa(const Nfa& a) {
  if (a.alphabet_size < 1) throw DomainError("nfa needs alphabet_size >= 1");
  if (a.states.empty()) throw DomainError("nfa needs at least one state");
  std::unordered_set<std::string> seen;
  for (const auto& name : a.states) {
    if (name.empty()) throw DomainError("empty state name");
    if (!seen.insert(name).second)
      throw DomainError("duplicate state name '" + name + "'");
  }
  const int n = a.state_count();
  for (int q : a.initial)
    if (q < 0 || q >= n) throw DomainError("initial state out of range");
  for (int q : a.accepting)
    if (q < 0 || q >= n) throw DomainError("accepting state out of range");
  for (const auto& t : a.transitions) {
    if (t.from < 0 || t.from >= n || t.to < 0 || t.to >= n)
      throw DomainError("transition endpoint out of range");
    if (t.symbol < 1 || t.symbol > a.alphabet_size)
      throw DomainError("transition symbol outside alphabet");
  }
}

bool nfa_universal(const Nfa& a, const Limits& limits) {
  validate_nfa(a);
  const int n = a.state_count();
  const std::size_t blocks = detail::bits_blocks(n);
  using detail::Bits;

  std::vector<std::vector<Bits>> step(
      a.alphabet_size, std::vector<Bits>(n, Bits(blocks, 0)));
  for (const auto& t : a.transitions)
    detail::bits_set(step[t.symbol - 1][t.from], t.to);

  Bits accepting(blocks, 0);
  for (int q : a.accepting) detail::bits_set(accepting, q);
  auto meets_accepting = [&](const Bits& b) {
    for (std::size_t i = 0; i < blocks; ++i)
      if (b[i] & accepting[i]) return true;
    return false;
  };

  Bits start(blocks, 0);
  for (int q : a.initial) detail::bits_set(start, q);
  // The start subset stands for the empty word; it must accept too.
  if (!meets_accepting(start)) return false;

  std::unordered_set<Bits, detail::BitsHash> seen{start};
  std::vector<Bits> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Bits current = queue[head];
    for (int letter = 1; letter <= a.alphabet_size; ++letter) {
      Bits next(blocks, 0);
      for (int q = 0; q < n; ++q)
        if (detail::bits_test(current, q))
          detail::bits_or(next, step[letter - 1][q]);
      if (!seen.insert(next).second) continue;
      if (!meets_accepting(next)) return false;
      if (seen.size() > limits.max_subsets)
        throw ResourceLimitError("subset construction exceeded max_subsets = " +
                                 std::to_string(limits.max_subsets));
      queue.push_back(std::move(next));
    }
  }
  return true;
}

LabeledGraph reduce_universality(const Nfa& a) {
  validate_nfa(a);
  LabeledGraph g;
  g.alphabet_size = a.alphabet_size + 1;  // one fresh letter
  g.nodes = a.states;
  for (const auto& t : a.transitions)
    g.edges.push_back({t.from, t.to, {t.symbol}});
  for (int acc : a.accepting)
    for (int ini : a.initial)
      g.edges.push_back({acc, ini, {a.alphabet_size + 1}});
  return g;
}

}  // namespace pclyap
