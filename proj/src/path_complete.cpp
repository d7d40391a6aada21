#include "pclyap/path_complete.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pclyap/detail/subsets.hpp"
#include "pclyap/errors.hpp"

namespace pclyap {

namespace {

using detail::Bits;
using detail::BitsHash;

/// Per-letter successor masks: step[l-1][v] = bitset of nodes reachable from
/// v by one edge labeled l.
std::vector<std::vector<Bits>> successor_masks(const LabeledGraph& g) {
  const int n = g.node_count();
  const std::size_t blocks = detail::bits_blocks(n);
  std::vector<std::vector<Bits>> step(
      g.alphabet_size, std::vector<Bits>(n, Bits(blocks, 0)));
  for (const auto& e : g.edges) detail::bits_set(step[e.label[0] - 1][e.from], e.to);
  return step;
}

/// Shared determinization walk. Returns the word leading to the first empty
/// subset (BFS in letter order = shortlex), or nullopt if none; the number
/// of distinct nonempty subsets reached lands in *count.
std::optional<Word> determinize(const LabeledGraph& expanded,
                                const Limits& limits, std::uint64_t* count) {
  const int n = expanded.node_count();
  const int m = expanded.alphabet_size;
  const std::size_t blocks = detail::bits_blocks(n);
  const auto step = successor_masks(expanded);

  Bits start(blocks, 0);
  for (int v = 0; v < n; ++v) detail::bits_set(start, v);

  std::unordered_map<Bits, int, BitsHash> id;
  std::vector<Bits> subsets;
  std::vector<std::pair<int, int>> trail;  // (parent subset, letter)
  id.emplace(start, 0);
  subsets.push_back(start);
  trail.emplace_back(-1, 0);

  for (std::size_t head = 0; head < subsets.size(); ++head) {
    const Bits current = subsets[head];
    for (int letter = 1; letter <= m; ++letter) {
      Bits next(blocks, 0);
      for (int v = 0; v < n; ++v)
        if (detail::bits_test(current, v))
          detail::bits_or(next, step[letter - 1][v]);
      if (detail::bits_empty(next)) {
        // Walk the trail back to spell the missing word.
        Word w = {letter};
        for (int at = static_cast<int>(head); trail[at].first >= 0;
             at = trail[at].first)
          w.push_back(trail[at].second);
        std::reverse(w.begin(), w.end());
        if (count) *count = subsets.size();
        return w;
      }
      if (id.emplace(next, static_cast<int>(subsets.size())).second) {
        if (subsets.size() + 1 > limits.max_subsets)
          throw ResourceLimitError(
              "subset construction exceeded max_subsets = " +
              std::to_string(limits.max_subsets));
        subsets.push_back(std::move(next));
        trail.emplace_back(static_cast<int>(head), letter);
      }
    }
  }
  if (count) *count = subsets.size();
  return std::nullopt;
}

/// Can some path read w? Memoized search over (node, position).
bool word_readable(const std::vector<std::vector<std::pair<int, int>>>& out,
                   const Word& w) {
  const int n = static_cast<int>(out.size());
  const int len = static_cast<int>(w.size());
  // 0 unknown, 1 yes, 2 no
  std::vector<std::vector<char>> memo(n, std::vector<char>(len + 1, 0));
  auto rec = [&](auto&& self, int v, int pos) -> bool {
    if (pos == len) return true;
    char& slot = memo[v][pos];
    if (slot) return slot == 1;
    slot = 2;
    for (const auto& [letter, to] : out[v])
      if (letter == w[pos] && self(self, to, pos + 1)) {
        slot = 1;
        break;
      }
    return slot == 1;
  };
  for (int v = 0; v < n; ++v)
    if (rec(rec, v, 0)) return true;
  return false;
}

}  // namespace

PathCompletenessVerdict check_path_complete(const LabeledGraph& g,
                                            const Limits& limits) {
  const Expansion ex = expand_labels(g);
  auto missing = determinize(ex.graph, limits, nullptr);
  if (missing) return {false, std::move(missing)};
  return {true, std::nullopt};
}

std::uint64_t determinization_subset_count(const LabeledGraph& g,
                                           const Limits& limits) {
  const Expansion ex = expand_labels(g);
  std::uint64_t count = 0;
  determinize(ex.graph, limits, &count);
  return count;
}

PathCompletenessVerdict brute_force_path_complete(const LabeledGraph& g,
                                                  int max_len,
                                                  const Limits& limits) {
  if (max_len < 1) throw DomainError("brute force needs max_len >= 1");
  const Expansion ex = expand_labels(g);
  const int m = ex.graph.alphabet_size;

  // Adjacency as (letter, target) pairs once, not per word.
  std::vector<std::vector<std::pair<int, int>>> out(ex.graph.node_count());
  for (const auto& e : ex.graph.edges)
    out[e.from].emplace_back(e.label[0], e.to);

  std::uint64_t budget = limits.max_words;
  for (int len = 1; len <= max_len; ++len) {
    Word w(len, 1);
    for (;;) {
      if (budget-- == 0)
        throw ResourceLimitError("brute force exceeded max_words = " +
                                 std::to_string(limits.max_words));
      if (!word_readable(out, w)) return {false, w};
      // Next word of this length in lexicographic order.
      int pos = len - 1;
      while (pos >= 0 && w[pos] == m) w[pos--] = 1;
      if (pos < 0) break;
      ++w[pos];
    }
  }
  return {true, std::nullopt};
}

}  // namespace pclyap
