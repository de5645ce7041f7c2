#include <bit>
#include <stdexcept>
#include <string>

#include "lyra2re/primitives.hpp"

namespace lyra2re {

namespace {

using Words = std::array<std::uint32_t, 16>;

constexpr Words kIV = {0x40414243, 0x44454647, 0x48494A4B, 0x4C4D4E4F, 0x50515253, 0x54555657,
                       0x58595A5B, 0x5C5D5E5F, 0x60616263, 0x64656667, 0x68696A6B, 0x6C6D6E6F,
                       0x70717273, 0x74757677, 0x78797A7B, 0x7C7D7E7F};

inline std::uint32_t s0(std::uint32_t x) { return (x >> 1) ^ (x << 3) ^ std::rotl(x, 4) ^ std::rotl(x, 19); }
inline std::uint32_t s1(std::uint32_t x) { return (x >> 1) ^ (x << 2) ^ std::rotl(x, 8) ^ std::rotl(x, 23); }
inline std::uint32_t s2(std::uint32_t x) { return (x >> 2) ^ (x << 1) ^ std::rotl(x, 12) ^ std::rotl(x, 25); }
inline std::uint32_t s3(std::uint32_t x) { return (x >> 2) ^ (x << 2) ^ std::rotl(x, 15) ^ std::rotl(x, 29); }
inline std::uint32_t s4(std::uint32_t x) { return (x >> 1) ^ x; }
inline std::uint32_t s5(std::uint32_t x) { return (x >> 2) ^ x; }

// W_j = sum of +/-(M[i] ^ H[i]) over five indices; sign 0 means add.
struct WTerm {
  int idx[5];
  int neg[5];
};
constexpr WTerm kW[16] = {
    {{5, 7, 10, 13, 14}, {0, 1, 0, 0, 0}},  {{6, 8, 11, 14, 15}, {0, 1, 0, 0, 1}},
    {{0, 7, 9, 12, 15}, {0, 0, 0, 1, 0}},   {{0, 1, 8, 10, 13}, {0, 1, 0, 1, 0}},
    {{1, 2, 9, 11, 14}, {0, 0, 0, 1, 1}},   {{3, 2, 10, 12, 15}, {0, 1, 0, 1, 0}},
    {{4, 0, 3, 11, 13}, {0, 1, 1, 1, 0}},   {{1, 4, 5, 12, 14}, {0, 1, 1, 1, 1}},
    {{2, 5, 6, 13, 15}, {0, 1, 1, 0, 1}},   {{0, 3, 6, 7, 14}, {0, 1, 0, 1, 0}},
    {{8, 1, 4, 7, 15}, {0, 1, 1, 1, 0}},    {{8, 0, 2, 5, 9}, {0, 1, 1, 1, 0}},
    {{1, 3, 6, 9, 10}, {0, 0, 1, 1, 0}},    {{2, 4, 7, 10, 11}, {0, 0, 0, 0, 0}},
    {{3, 5, 8, 11, 12}, {0, 1, 0, 1, 1}},   {{12, 4, 6, 9, 13}, {0, 1, 1, 1, 0}}};

Words compress(const Words& m, const Words& h) {
  std::uint32_t q[32];
  for (int j = 0; j < 16; ++j) {
    std::uint32_t w = 0;
    for (int t = 0; t < 5; ++t) {
      const std::uint32_t v = m[kW[j].idx[t]] ^ h[kW[j].idx[t]];
      w = kW[j].neg[t] ? w - v : w + v;
    }
    std::uint32_t sw = 0;
    switch (j % 5) {
      case 0: sw = s0(w); break;
      case 1: sw = s1(w); break;
      case 2: sw = s2(w); break;
      case 3: sw = s3(w); break;
      default: sw = s4(w); break;
    }
    q[j] = sw + h[(j + 1) % 16];
  }

  auto add_elt = [&](int j) {
    auto rm = [&](int k) { return std::rotl(m[k % 16], k % 16 + 1); };
    return (rm(j) + rm(j + 3) - rm(j + 10) + static_cast<std::uint32_t>((j + 16) * 0x05555555u)) ^ h[(j + 7) % 16];
  };
  for (int i = 16; i < 18; ++i) {
    std::uint32_t sum = add_elt(i - 16);
    for (int k = 0; k < 16; k += 4)
      sum += s1(q[i - 16 + k]) + s2(q[i - 15 + k]) + s3(q[i - 14 + k]) + s0(q[i - 13 + k]);
    q[i] = sum;
  }
  for (int i = 18; i < 32; ++i) {
    const std::uint32_t* p = q + i - 16;
    q[i] = p[0] + std::rotl(p[1], 3) + p[2] + std::rotl(p[3], 7) + p[4] + std::rotl(p[5], 13) + p[6] +
           std::rotl(p[7], 16) + p[8] + std::rotl(p[9], 19) + p[10] + std::rotl(p[11], 23) + p[12] +
           std::rotl(p[13], 27) + s4(p[14]) + s5(p[15]) + add_elt(i - 16);
  }

  std::uint32_t xl = 0, xh;
  for (int i = 16; i < 24; ++i) xl ^= q[i];
  xh = xl;
  for (int i = 24; i < 32; ++i) xh ^= q[i];

  Words d;
  d[0] = ((xh << 5) ^ (q[16] >> 5) ^ m[0]) + (xl ^ q[24] ^ q[0]);
  d[1] = ((xh >> 7) ^ (q[17] << 8) ^ m[1]) + (xl ^ q[25] ^ q[1]);
  d[2] = ((xh >> 5) ^ (q[18] << 5) ^ m[2]) + (xl ^ q[26] ^ q[2]);
  d[3] = ((xh >> 1) ^ (q[19] << 5) ^ m[3]) + (xl ^ q[27] ^ q[3]);
  d[4] = ((xh >> 3) ^ q[20] ^ m[4]) + (xl ^ q[28] ^ q[4]);
  d[5] = ((xh << 6) ^ (q[21] >> 6) ^ m[5]) + (xl ^ q[29] ^ q[5]);
  d[6] = ((xh >> 4) ^ (q[22] << 6) ^ m[6]) + (xl ^ q[30] ^ q[6]);
  d[7] = ((xh >> 11) ^ (q[23] << 2) ^ m[7]) + (xl ^ q[31] ^ q[7]);
  d[8] = std::rotl(d[4], 9) + (xh ^ q[24] ^ m[8]) + ((xl << 8) ^ q[23] ^ q[8]);
  d[9] = std::rotl(d[5], 10) + (xh ^ q[25] ^ m[9]) + ((xl >> 6) ^ q[16] ^ q[9]);
  d[10] = std::rotl(d[6], 11) + (xh ^ q[26] ^ m[10]) + ((xl << 6) ^ q[17] ^ q[10]);
  d[11] = std::rotl(d[7], 12) + (xh ^ q[27] ^ m[11]) + ((xl << 4) ^ q[18] ^ q[11]);
  d[12] = std::rotl(d[0], 13) + (xh ^ q[28] ^ m[12]) + ((xl >> 3) ^ q[19] ^ q[12]);
  d[13] = std::rotl(d[1], 14) + (xh ^ q[29] ^ m[13]) + ((xl >> 4) ^ q[20] ^ q[13]);
  d[14] = std::rotl(d[2], 15) + (xh ^ q[30] ^ m[14]) + ((xl >> 7) ^ q[21] ^ q[14]);
  d[15] = std::rotl(d[3], 16) + (xh ^ q[31] ^ m[15]) + ((xl >> 2) ^ q[22] ^ q[15]);
  return d;
}

}  // namespace

Digest256 bmw256(std::span<const std::uint8_t> in, CoreStats* stats) {
  if (in.size() != 32) throw std::invalid_argument("bmw256: input must be 32 bytes, got " + std::to_string(in.size()));
  // One padded block: data, 0x80, zeros, 64-bit little-endian bit count.
  Words m{};
  for (int i = 0; i < 8; ++i) m[i] = load_le32(in.data() + 4 * i);
  m[8] = 0x80;
  m[14] = 256;
  Words h = compress(m, kIV);

  Words fin;
  for (int i = 0; i < 16; ++i) fin[i] = 0xaaaaaaa0u + static_cast<std::uint32_t>(i);
  h = compress(h, fin);
  if (stats) stats->compressions += 2;

  Digest256 out;
  for (int i = 0; i < 8; ++i) store_le32(out.data() + 4 * i, h[8 + i]);
  return out;
}

}  // namespace lyra2re
