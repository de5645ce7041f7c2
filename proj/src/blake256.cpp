#include <bit>
#include <stdexcept>
#include <string>

#include "lyra2re/primitives.hpp"

namespace lyra2re {

namespace {

constexpr std::uint32_t kIV[8] = {0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
                                  0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19};

constexpr std::uint32_t kC[16] = {0x243F6A88, 0x85A308D3, 0x13198A2E, 0x03707344, 0xA4093822, 0x299F31D0,
                                  0x082EFA98, 0xEC4E6C89, 0x452821E6, 0x38D01377, 0xBE5466CF, 0x34E90C6C,
                                  0xC0AC29B7, 0xC97C50DD, 0x3F84D5B5, 0xB5470917};

constexpr std::uint8_t kSigma[10][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}, {14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3},
    {11, 8, 12, 0, 5, 2, 15, 13, 10, 14, 3, 6, 7, 1, 9, 4}, {7, 9, 3, 1, 13, 12, 11, 14, 2, 6, 5, 10, 4, 0, 15, 8},
    {9, 0, 5, 7, 2, 4, 10, 15, 14, 1, 11, 12, 6, 8, 3, 13}, {2, 12, 6, 10, 0, 11, 8, 3, 4, 13, 7, 5, 15, 14, 1, 9},
    {12, 5, 1, 15, 14, 13, 4, 10, 0, 7, 6, 3, 9, 2, 8, 11}, {13, 11, 7, 14, 12, 1, 3, 9, 5, 0, 15, 4, 8, 6, 2, 10},
    {6, 15, 14, 9, 11, 3, 0, 8, 12, 2, 13, 7, 1, 4, 10, 5}, {10, 2, 8, 4, 7, 6, 1, 5, 15, 11, 9, 14, 3, 12, 13, 0}};

constexpr unsigned kRounds = 14;

void compress(std::uint32_t h[8], const std::uint8_t* block, std::uint32_t t0, CoreStats* stats) {
  std::uint32_t m[16];
  for (int i = 0; i < 16; ++i) m[i] = load_be32(block + 4 * i);
  std::uint32_t v[16];
  for (int i = 0; i < 8; ++i) v[i] = h[i];
  for (int i = 0; i < 4; ++i) v[8 + i] = kC[i];
  v[12] = kC[4] ^ t0;
  v[13] = kC[5] ^ t0;
  v[14] = kC[6];  // high counter word is zero for 80-byte inputs
  v[15] = kC[7];

  auto g = [&](const std::uint8_t* s, int i, int a, int b, int c, int d) {
    const int x = s[2 * i], y = s[2 * i + 1];
    v[a] += v[b] + (m[x] ^ kC[y]);
    v[d] = std::rotr(v[d] ^ v[a], 16);
    v[c] += v[d];
    v[b] = std::rotr(v[b] ^ v[c], 12);
    v[a] += v[b] + (m[y] ^ kC[x]);
    v[d] = std::rotr(v[d] ^ v[a], 8);
    v[c] += v[d];
    v[b] = std::rotr(v[b] ^ v[c], 7);
  };

  for (unsigned r = 0; r < kRounds; ++r) {
    const std::uint8_t* s = kSigma[r % 10];
    g(s, 0, 0, 4, 8, 12);
    g(s, 1, 1, 5, 9, 13);
    g(s, 2, 2, 6, 10, 14);
    g(s, 3, 3, 7, 11, 15);
    g(s, 4, 0, 5, 10, 15);
    g(s, 5, 1, 6, 11, 12);
    g(s, 6, 2, 7, 8, 13);
    g(s, 7, 3, 4, 9, 14);
  }
  for (int i = 0; i < 8; ++i) h[i] ^= v[i] ^ v[i + 8];
  if (stats) {
    stats->rounds += kRounds;
    stats->compressions += 1;
  }
}

}  // namespace

Digest256 blake256_header(std::span<const std::uint8_t> in, CoreStats* stats) {
  if (in.size() != 80)
    throw std::invalid_argument("blake256: header must be 80 bytes, got " + std::to_string(in.size()));
  std::uint32_t h[8];
  for (int i = 0; i < 8; ++i) h[i] = kIV[i];

  compress(h, in.data(), 512, stats);

  // 16 trailing bytes, the 0x80 marker, the 0x01 closing bit for the 256-bit
  // variant and the 640-bit length.
  std::uint8_t last[64] = {};
  for (int i = 0; i < 16; ++i) last[i] = in[64 + i];
  last[16] = 0x80;
  last[55] |= 0x01;
  store_be32(last + 56, 0);
  store_be32(last + 60, 640);
  compress(h, last, 640, stats);

  Digest256 out;
  for (int i = 0; i < 8; ++i) store_be32(out.data() + 4 * i, h[i]);
  return out;
}

}  // namespace lyra2re
