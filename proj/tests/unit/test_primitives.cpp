#include <doctest.h>

#include <bit>
#include <stdexcept>

#include "golden.hpp"
#include "lyra2re/primitives.hpp"

using namespace lyra2re;
using testdata::golden;

namespace {

const Digest256 kZero32{};
const HeaderBytes kZero80{};

std::vector<std::uint8_t> ascii(std::string_view s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("zero-input known answers") {
  CHECK(to_hex(blake256_header(kZero80)) == golden("blake.zero80"));
  CHECK(to_hex(keccak256(kZero32)) == golden("keccak.zero32"));
  CHECK(to_hex(cubehash256(kZero32)) == golden("cubehash.zero32"));
  CHECK(to_hex(skein256(kZero32)) == golden("skein.zero32"));
  CHECK(to_hex(bmw256(kZero32)) == golden("bmw.zero32"));
}

TEST_CASE("keccak of 32 zero bytes is the well-known Ethereum storage slot hash") {
  CHECK(to_hex(keccak256(kZero32)) == "290decd9548b62a8d60345a988386fc84ba6bc95484008f6362f93160ef3e563");
}

TEST_CASE("derived initial values match the published constants") {
  const auto cube = cubehash256_initial_state();
  CHECK(cube[0] == 0xea2bd4b4u);
  CHECK(cube[1] == 0xccd6f29fu);
  const auto skein = skein512_256_config_chain();
  CHECK(skein[0] == 0xccd044a12fdb3e13ULL);
}

TEST_CASE("instrumented work per hash") {
  CoreStats s;
  (void)blake256_header(kZero80, &s);
  CHECK(s.rounds == 28);
  CHECK(s.compressions == 2);
  s = {};
  (void)keccak256(kZero32, &s);
  CHECK(s.rounds == 24);
  s = {};
  (void)cubehash256(kZero32, &s);
  CHECK(s.rounds == 192);
  s = {};
  (void)bmw256(kZero32, &s);
  CHECK(s.compressions == 2);
  s = {};
  (void)skein256(kZero32, &s);
  CHECK(s.compressions == 2);
  CHECK(s.rounds == 144);
}

TEST_CASE("wrong input widths are rejected") {
  const auto abc = ascii("abc");
  CHECK_THROWS_AS(blake256_header(abc), std::invalid_argument);
  CHECK_THROWS_AS(keccak256(abc), std::invalid_argument);
  CHECK_THROWS_AS(cubehash256(abc), std::invalid_argument);
  CHECK_THROWS_AS(skein256(abc), std::invalid_argument);
  CHECK_THROWS_AS(bmw256(abc), std::invalid_argument);
  CHECK_THROWS_AS(keccak256(kZero80), std::invalid_argument);
}

TEST_CASE("single-bit input changes flip roughly half the output") {
  Digest256 a{};
  Digest256 b{};
  b[31] = 0x80;
  for (auto fn : {&keccak256, &cubehash256, &skein256, &bmw256}) {
    const auto x = fn(a, nullptr), y = fn(b, nullptr);
    int diff = 0;
    for (int i = 0; i < 32; ++i) diff += std::popcount(static_cast<unsigned>(x[i] ^ y[i]));
    CHECK(diff > 80);
    CHECK(diff < 176);
  }
}
