#include "lyra2re/bytes.hpp"

#include <algorithm>
#include <stdexcept>

namespace lyra2re {

namespace {

int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0)
      throw std::invalid_argument("invalid hex character at offset " + std::to_string(hi < 0 ? 2 * i : 2 * i + 1));
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_hex(std::string_view hex) {
  if (hex.size() != 2 * N)
    throw std::invalid_argument("expected " + std::to_string(N) + " bytes (" + std::to_string(2 * N) +
                                " hex chars), got " + std::to_string(hex.size()) + " hex chars");
  auto v = from_hex(hex);
  std::array<std::uint8_t, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

template std::array<std::uint8_t, 32> fixed_from_hex<32>(std::string_view);
template std::array<std::uint8_t, 80> fixed_from_hex<80>(std::string_view);

Digest256 digest_from_hex(std::string_view hex) { return fixed_from_hex<32>(hex); }
HeaderBytes header_from_hex(std::string_view hex) { return fixed_from_hex<80>(hex); }

}  // namespace lyra2re
