#pragma once

#include <cstdint>
#include <span>

#include "lyra2re/bytes.hpp"

namespace lyra2re {

// Per-call instrumentation; counters accumulate across calls.
struct CoreStats {
  unsigned long long rounds = 0;        // permutation / cipher rounds
  unsigned long long compressions = 0;  // compression-function or UBI calls
};

// The five auxiliary cores at the chain's fixed widths. Each throws
// std::invalid_argument when the input length is wrong.
Digest256 blake256_header(std::span<const std::uint8_t> header80, CoreStats* stats = nullptr);
Digest256 keccak256(std::span<const std::uint8_t> in32, CoreStats* stats = nullptr);
Digest256 cubehash256(std::span<const std::uint8_t> in32, CoreStats* stats = nullptr);
Digest256 skein256(std::span<const std::uint8_t> in32, CoreStats* stats = nullptr);
Digest256 bmw256(std::span<const std::uint8_t> in32, CoreStats* stats = nullptr);

// Skein-512 chaining value after the config UBI for a 256-bit output,
// computed from scratch rather than taken from a table.
std::array<std::uint64_t, 8> skein512_256_config_chain();

// CubeHash16/32-256 state after the 160 initialization rounds.
std::array<std::uint32_t, 32> cubehash256_initial_state();

}  // namespace lyra2re
