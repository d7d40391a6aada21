#pragma once

#include <cstdint>
#include <optional>

#include "pclyap/labeled_graph.hpp"
#include "pclyap/limits.hpp"
#include "pclyap/word.hpp"

namespace pclyap {

struct PathCompletenessVerdict {
  bool complete = false;
  /// Present iff not complete: the shortest word (ties broken
  /// lexicographically) that no path in the graph reads.
  std::optional<Word> missing_word;
};

/// Decide whether every finite word over {1..alphabet_size} can be read as a
/// factor of concatenated edge labels along some path. Runs the subset
/// construction on the label-expanded graph, seeded with the full node set;
/// a word is unreadable exactly when its subset run empties out, and BFS in
/// letter order makes the first empty subset the shortlex-least missing
/// word. Subset count is capped by limits.max_subsets.
PathCompletenessVerdict check_path_complete(const LabeledGraph& g,
                                            const Limits& limits = {});

/// Independent oracle: enumerate all words up to max_len in shortlex order
/// and test readability of each by explicit path search. Verdicts agree with
/// check_path_complete whenever max_len reaches the determinization subset
/// count. Word count is capped by limits.max_words.
PathCompletenessVerdict brute_force_path_complete(const LabeledGraph& g,
                                                  int max_len,
                                                  const Limits& limits = {});

/// Number of distinct nonempty node subsets reachable in the determinization
/// of the label-expanded graph (start subset included). Any missing word, if
/// one exists, is at most this long.
std::uint64_t determinization_subset_count(const LabeledGraph& g,
                                           const Limits& limits = {});

}  // namespace pclyap
