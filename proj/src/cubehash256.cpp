#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

#include "lyra2re/primitives.hpp"

namespace lyra2re {

namespace {

using CubeState = std::array<std::uint32_t, 32>;

constexpr unsigned kRoundsPerBlock = 16;
constexpr unsigned kFinalRounds = 160;

void rounds(CubeState& x, unsigned n) {
  for (unsigned r = 0; r < n; ++r) {
    for (int i = 0; i < 16; ++i) x[i + 16] += x[i];
    for (int i = 0; i < 16; ++i) x[i] = std::rotl(x[i], 7);
    for (int i = 0; i < 8; ++i) std::swap(x[i], x[i + 8]);
    for (int i = 0; i < 16; ++i) x[i] ^= x[i + 16];
    for (int i = 16; i < 32; ++i)
      if (!(i & 2)) std::swap(x[i], x[i + 2]);
    for (int i = 0; i < 16; ++i) x[i + 16] += x[i];
    for (int i = 0; i < 16; ++i) x[i] = std::rotl(x[i], 11);
    for (int i = 0; i < 16; ++i)
      if (!(i & 4)) std::swap(x[i], x[i + 4]);
    for (int i = 0; i < 16; ++i) x[i] ^= x[i + 16];
    for (int i = 16; i < 32; ++i)
      if (!(i & 1)) std::swap(x[i], x[i + 1]);
  }
}

const CubeState& iv() {
  static const CubeState s = [] {
    CubeState x{};
    x[0] = 32;  // output bytes
    x[1] = 32;  // block bytes
    x[2] = kRoundsPerBlock;
    rounds(x, 10 * kRoundsPerBlock);
    return x;
  }();
  return s;
}

}  // namespace

std::array<std::uint32_t, 32> cubehash256_initial_state() { return iv(); }

Digest256 cubehash256(std::span<const std::uint8_t> in, CoreStats* stats) {
  if (in.size() != 32)
    throw std::invalid_argument("cubehash256: input must be 32 bytes, got " + std::to_string(in.size()));
  CubeState x = iv();
  for (int i = 0; i < 8; ++i) x[i] ^= load_le32(in.data() + 4 * i);
  rounds(x, kRoundsPerBlock);
  x[0] ^= 0x80;  // padding block: a single 1 bit then zeros
  rounds(x, kRoundsPerBlock);
  x[31] ^= 1;
  rounds(x, kFinalRounds);
  if (stats) {
    stats->rounds += 2 * kRoundsPerBlock + kFinalRounds;
    stats->compressions += 2;
  }
  Digest256 out;
  for (int i = 0; i < 8; ++i) store_le32(out.data() + 4 * i, x[i]);
  return out;
}

}  // namespace lyra2re
