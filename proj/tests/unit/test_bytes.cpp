#include <doctest.h>

#include <stdexcept>

#include "lyra2re/bytes.hpp"

using namespace lyra2re;

TEST_CASE("hex encodes the byte string first byte first") {
  const std::vector<std::uint8_t> b{0x00, 0xab, 0x10, 0xff};
  CHECK(to_hex(b) == "00ab10ff");
  CHECK(from_hex("00AB10ff") == b);
  CHECK(from_hex("").empty());
}

TEST_CASE("hex rejects malformed input") {
  CHECK_THROWS_AS(from_hex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(from_hex("zz"), std::invalid_argument);
  CHECK_THROWS_AS(from_hex("0x00"), std::invalid_argument);
}

TEST_CASE("fixed-width decoding names the expected width") {
  try {
    (void)header_from_hex("deadbeef");
    FAIL("expected a width error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("160") != std::string::npos);
  }
  CHECK_THROWS_AS(digest_from_hex(std::string(62, '0')), std::invalid_argument);
  CHECK(digest_from_hex(std::string(64, '0')) == Digest256{});
}

TEST_CASE("little- and big-endian word helpers") {
  std::uint8_t b[8];
  store_le64(b, 0x0102030405060708ULL);
  CHECK(b[0] == 0x08);
  CHECK(load_le64(b) == 0x0102030405060708ULL);
  store_be32(b, 0xa1b2c3d4u);
  CHECK(b[0] == 0xa1);
  CHECK(load_be32(b) == 0xa1b2c3d4u);
  CHECK(load_le32(b) == 0xd4c3b2a1u);
}
