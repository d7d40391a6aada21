#pragma once

#include <cstdint>

namespace pclyap {

/// Caps for the exhaustive procedures. Every cap violation surfaces as a
/// ResourceLimitError naming the cap, never as silent truncation.
struct Limits {
  /// Subset-construction cap: maximum distinct node subsets materialized.
  std::uint64_t max_subsets = std::uint64_t(1) << 20;
  /// Word-enumeration cap: maximum words visited by brute-force searches.
  std::uint64_t max_words = std::uint64_t(1) << 22;
};

}  // namespace pclyap
