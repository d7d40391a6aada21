#pragma once

#include <string>
#include <vector>

#include "pclyap/labeled_graph.hpp"
#include "pclyap/limits.hpp"

namespace pclyap {

/// Nondeterministic finite automaton over {1..alphabet_size}. States are
/// indices into `states`; `initial` and `accepting` are state-id lists.
struct Nfa {
  int alphabet_size = 0;
  std::vector<std::string> states;
  std::vector<int> initial;
  std::vector<int> accepting;
  struct Transition {
    int from = 0;
    int symbol = 0;
    int to = 0;
  };
  std::vector<Transition> transitions;

  int state_count() const { return static_cast<int>(states.size()); }
};

void validate_nfa(const Nfa& a);

/// Does the automaton accept every word, the empty one included? Decided by
/// the subset construction from the initial set: universal iff each
/// reachable subset meets the accepting set. Subject to limits.max_subsets.
bool nfa_universal(const Nfa& a, const Limits& limits = {});

/// Reduce universality to path-completeness: copy the transition diagram as
/// a labeled graph and add one fresh-letter edge (symbol alphabet_size + 1)
/// from every accepting state to every initial state. The result is
/// path-complete over the enlarged alphabet iff the automaton is universal.
LabeledGraph reduce_universality(const Nfa& a);

}  // namespace pclyap
