#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pclyap/errors.hpp"

namespace pclyap {

/// A word over the alphabet {1, ..., m}. Symbols are 1-based throughout the
/// public API; the empty vector is the empty word.
using Word = std::vector<int>;

/// Throws DomainError unless every symbol lies in 1..alphabet_size.
inline void validate_word(const Word& w, int alphabet_size) {
  for (int c : w)
    if (c < 1 || c > alphabet_size)
      throw DomainError("word symbol " + std::to_string(c) +
                        " outside alphabet 1.." + std::to_string(alphabet_size));
}

/// Reversal. Products and edge labels are read in opposite orders, so this
/// shows up whenever a word crosses between the two conventions.
inline Word mirror(const Word& w) { return Word(w.rbegin(), w.rend()); }

/// Shortlex order: shorter first, then lexicographic.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// "[2,1,1]" — used in messages and reports.
inline std::string format_word(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

}  // namespace pclyap
