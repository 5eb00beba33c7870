#pragma once

#include <cstdint>
#include <random>

namespace lroc {

using Engine = std::mt19937_64;

// Independent, reproducible generator for block `block` of a seeded run.
// Results of a blocked computation depend only on (seed, block layout),
// never on which thread executes which block.
inline Engine block_engine(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
                    0x6c726f63u};
  return Engine(seq);
}

inline constexpr std::size_t kBlockSize = 8192;

}  // namespace lroc
