#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pclyap::detail {

/// Node subsets as packed bitsets; shared by the determinization walks.
using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t word : b) {
      h ^= static_cast<std::size_t>(word);
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline std::size_t bits_blocks(int n) {
  return (static_cast<std::size_t>(n) + 63) / 64;
}

inline void bits_set(Bits& b, int i) {
  b[static_cast<std::size_t>(i) / 64] |= std::uint64_t(1) << (i % 64);
}

inline bool bits_test(const Bits& b, int i) {
  return b[static_cast<std::size_t>(i) / 64] >> (i % 64) & 1;
}

inline bool bits_empty(const Bits& b) {
  for (std::uint64_t word : b)
    if (word) return false;
  return true;
}

inline void bits_or(Bits& dst, const Bits& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

}  // namespace pclyap::detail
