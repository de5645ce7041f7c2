#include <bit>
#include <stdexcept>
#include <string>

#include "lyra2re/primitives.hpp"

namespace lyra2re {

namespace {

constexpr std::uint64_t kRC[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

// Rotation offset for lane x + 5y.
constexpr int kRho[25] = {0,  1,  62, 28, 27, 36, 44, 6,  55, 20, 3,  10, 43,
                          25, 39, 41, 45, 15, 21, 8,  18, 2,  61, 56, 14};

constexpr unsigned kRounds = 24;
constexpr std::size_t kRateBytes = 136;

void keccak_f1600(std::uint64_t a[25]) {
  for (unsigned r = 0; r < kRounds; ++r) {
    std::uint64_t c[5], d[5], b[25];
    for (int x = 0; x < 5; ++x) c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
    for (int x = 0; x < 5; ++x) d[x] = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
    for (int i = 0; i < 25; ++i) a[i] ^= d[i % 5];
    // rho and pi: lane (x, y) moves to (y, 2x + 3y).
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) b[y + 5 * ((2 * x + 3 * y) % 5)] = std::rotl(a[x + 5 * y], kRho[x + 5 * y]);
    for (int y = 0; y < 5; ++y)
      for (int x = 0; x < 5; ++x)
        a[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
    a[0] ^= kRC[r];
  }
}

}  // namespace

Digest256 keccak256(std::span<const std::uint8_t> in, CoreStats* stats) {
  if (in.size() != 32) throw std::invalid_argument("keccak256: input must be 32 bytes, got " + std::to_string(in.size()));
  std::uint8_t block[kRateBytes] = {};
  for (int i = 0; i < 32; ++i) block[i] = in[i];
  block[32] = 0x01;  // original Keccak padding, not the SHA-3 domain byte
  block[kRateBytes - 1] |= 0x80;

  std::uint64_t a[25] = {};
  for (std::size_t i = 0; i < kRateBytes / 8; ++i) a[i] ^= load_le64(block + 8 * i);
  keccak_f1600(a);
  if (stats) {
    stats->rounds += kRounds;
    stats->compressions += 1;
  }

  Digest256 out;
  for (int i = 0; i < 4; ++i) store_le64(out.data() + 8 * i, a[i]);
  return out;
}

}  // namespace lyra2re
