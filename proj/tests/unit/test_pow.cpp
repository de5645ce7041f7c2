#include <doctest.h>

#include <stdexcept>

#include <random>

#include "lyra2re/pow.hpp"
#include "oracles.hpp"

using namespace lyra2re;

namespace {

BlockHeader random_header(std::mt19937_64& rng) {
  BlockHeader h;
  h.version = static_cast<std::uint32_t>(rng());
  for (auto& b : h.prev_block) b = static_cast<std::uint8_t>(rng());
  for (auto& b : h.merkle_root) b = static_cast<std::uint8_t>(rng());
  h.time = static_cast<std::uint32_t>(rng());
  h.nbits = static_cast<std::uint32_t>(rng());
  h.nonce = static_cast<std::uint32_t>(rng());
  return h;
}

}  // namespace

TEST_CASE("header layout offsets") {
  BlockHeader h;
  h.version = 0x20000000;
  h.prev_block[0] = 0xaa;
  h.merkle_root[31] = 0xbb;
  h.time = 0x5f5e1000;
  h.nbits = 0x1b0404cb;
  h.nonce = 0x01020304;
  const auto b = encode_header(h);
  CHECK(b[3] == 0x20);
  CHECK(b[4] == 0xaa);
  CHECK(b[67] == 0xbb);
  CHECK(load_le32(b.data() + 68) == 0x5f5e1000u);
  CHECK(load_le32(b.data() + 72) == 0x1b0404cbu);
  CHECK(b[76] == 0x04);
  CHECK(b[79] == 0x01);
}

TEST_CASE("header codec round-trips") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto h = random_header(rng);
    const auto bytes = encode_header(h);
    CHECK(decode_header(bytes) == h);
    CHECK(encode_header(decode_header(bytes)) == bytes);
  }
  std::vector<std::uint8_t> short_hdr(79);
  CHECK_THROWS_AS(decode_header(short_hdr), std::invalid_argument);
}

TEST_CASE("expand_target examples") {
  CHECK(expand_target(0x1d00ffff).to_hex() ==
        "00000000ffff0000000000000000000000000000000000000000000000000000");
  CHECK(expand_target(0x03123456) == Uint256{0x123456});
  CHECK(expand_target(0x02123456) == Uint256{0x1234});
  CHECK(expand_target(0x01123456) == Uint256{0x12});
  CHECK(expand_target(0x00123456) == Uint256{0});
  CHECK(expand_target(0x20000000) == Uint256{});
  CHECK(expand_target(0x207fffff).to_hex().starts_with("7fffff00"));
  CHECK_THROWS_AS(expand_target(0x04923456), TargetError);
  CHECK_THROWS_AS(expand_target(0x21010000), TargetError);
  CHECK_THROWS_AS(expand_target(0xff123456), TargetError);
}

TEST_CASE("expand_target agrees with arbitrary precision at every exponent") {
  std::mt19937 rng(7);
  for (std::uint32_t exponent = 0; exponent < 256; ++exponent) {
    for (int k = 0; k < 12; ++k) {
      std::uint32_t mantissa = rng() & 0x00ffffffu;
      if (k == 0) mantissa = 0x000001;
      if (k == 1) mantissa = 0x7fffff;
      if (k == 2) mantissa = 0x800000;
      if (k == 3) mantissa = 0;
      const std::uint32_t nbits = (exponent << 24) | mantissa;
      CAPTURE(nbits);
      const auto want = oracle::expand_target(nbits);
      if (want) {
        CHECK(oracle::to_big(expand_target(nbits)) == *want);
      } else {
        CHECK_THROWS_AS(expand_target(nbits), TargetError);
      }
    }
  }
}

TEST_CASE("digests compare as little-endian integers, strictly") {
  Digest256 h{};
  h[31] = 0x01;  // most significant byte
  const auto v = Uint256::from_le_bytes(h);
  CHECK(v.limb(3) == 0x0100000000000000ULL);
  CHECK_FALSE(meets_target(h, v));
  Uint256 above = v;
  above.limb(0) = 1;
  CHECK(meets_target(h, above));
  CHECK_FALSE(meets_target(Digest256{}, Uint256{}));
  CHECK(meets_target(Digest256{}, Uint256{1}));
}

TEST_CASE("Uint256 hex round-trip is big-endian") {
  const auto v = Uint256::from_hex("00000000000000000000000000000000000000000000000000000000000000ff");
  CHECK(v == Uint256{0xff});
  CHECK(v.to_hex().size() == 64);
  CHECK(Uint256::max().to_hex() == std::string(64, 'f'));
  CHECK(Uint256::from_le_bytes(v.to_le_bytes()) == v);
}

TEST_CASE("verify_solution follows the chain hash") {
  BlockHeader h;
  h.nonce = 5;
  CHECK(verify_solution(h, Uint256::max(), ChainVariant::rev2));
  CHECK_FALSE(verify_solution(h, Uint256{}, ChainVariant::rev3));
  const auto d = chain_hash(encode_header(h), ChainVariant::rev2);
  const auto exact = Uint256::from_le_bytes(d);
  CHECK_FALSE(verify_solution(h, exact, ChainVariant::rev2));
}
