#include <bit>
#include <stdexcept>
#include <string>

#include "lyra2re/primitives.hpp"

namespace lyra2re {

namespace {

using Block = std::array<std::uint64_t, 8>;

constexpr std::uint64_t kParity = 0x1BD11BDAA9FC1A22ULL;
constexpr unsigned kRounds = 72;

// Rotation constants for Threefish-512, by round mod 8 and mix index.
constexpr int kRot[8][4] = {{46, 36, 19, 37}, {33, 27, 14, 42}, {17, 49, 36, 39}, {44, 9, 54, 56},
                            {39, 30, 34, 24}, {13, 50, 10, 17}, {25, 29, 39, 43}, {8, 35, 56, 22}};
// Word permutation applied after each round.
constexpr int kPerm[8] = {2, 1, 4, 7, 6, 5, 0, 3};

constexpr std::uint64_t kFirst = 1ULL << 62;
constexpr std::uint64_t kFinal = 1ULL << 63;
constexpr std::uint64_t kTypeCfg = 4;
constexpr std::uint64_t kTypeMsg = 48;
constexpr std::uint64_t kTypeOut = 63;

Block threefish512(const Block& key, std::uint64_t t0, std::uint64_t t1, const Block& plain) {
  std::uint64_t k[9];
  k[8] = kParity;
  for (int i = 0; i < 8; ++i) {
    k[i] = key[i];
    k[8] ^= key[i];
  }
  const std::uint64_t t[3] = {t0, t1, t0 ^ t1};

  Block v = plain;
  auto add_subkey = [&](unsigned s) {
    for (int i = 0; i < 8; ++i) v[i] += k[(s + i) % 9];
    v[5] += t[s % 3];
    v[6] += t[(s + 1) % 3];
    v[7] += s;
  };

  for (unsigned r = 0; r < kRounds; ++r) {
    if (r % 4 == 0) add_subkey(r / 4);
    for (int j = 0; j < 4; ++j) {
      v[2 * j] += v[2 * j + 1];
      v[2 * j + 1] = std::rotl(v[2 * j + 1], kRot[r % 8][j]) ^ v[2 * j];
    }
    Block p;
    for (int i = 0; i < 8; ++i) p[i] = v[kPerm[i]];
    v = p;
  }
  add_subkey(kRounds / 4);
  return v;
}

// One single-block UBI call; `bytes` is the position field of the tweak.
Block ubi(const Block& chain, const Block& msg, std::uint64_t type, std::uint64_t bytes, CoreStats* stats) {
  Block c = threefish512(chain, bytes, kFirst | kFinal | (type << 56), msg);
  for (int i = 0; i < 8; ++i) c[i] ^= msg[i];
  if (stats) {
    stats->rounds += kRounds;
    stats->compressions += 1;
  }
  return c;
}

const Block& config_chain() {
  static const Block chain = [] {
    Block cfg{};
    cfg[0] = 0x0000000133414853ULL;  // "SHA3", version 1
    cfg[1] = 256;                    // output bits
    return ubi(Block{}, cfg, kTypeCfg, 32, nullptr);
  }();
  return chain;
}

}  // namespace

std::array<std::uint64_t, 8> skein512_256_config_chain() { return config_chain(); }

Digest256 skein256(std::span<const std::uint8_t> in, CoreStats* stats) {
  if (in.size() != 32) throw std::invalid_argument("skein256: input must be 32 bytes, got " + std::to_string(in.size()));
  Block msg{};
  for (int i = 0; i < 4; ++i) msg[i] = load_le64(in.data() + 8 * i);
  Block h = ubi(config_chain(), msg, kTypeMsg, 32, stats);
  h = ubi(h, Block{}, kTypeOut, 8, stats);
  Digest256 out;
  for (int i = 0; i < 4; ++i) store_le64(out.data() + 8 * i, h[i]);
  return out;
}

}  // namespace lyra2re
