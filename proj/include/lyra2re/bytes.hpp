#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lyra2re {

using Digest256 = std::array<std::uint8_t, 32>;
using HeaderBytes = std::array<std::uint8_t, 80>;

// Lowercase hex of the raw byte string, first byte first.
std::string to_hex(std::span<const std::uint8_t> bytes);

// Accepts upper or lower case; throws std::invalid_argument on odd length or
// a non-hex character.
std::vector<std::uint8_t> from_hex(std::string_view hex);

// Decodes exactly N bytes or throws std::invalid_argument naming the width.
template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_hex(std::string_view hex);

Digest256 digest_from_hex(std::string_view hex);
HeaderBytes header_from_hex(std::string_view hex);

inline std::uint64_t load_le64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

inline void store_le64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

inline std::uint32_t load_le32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) | (std::uint32_t{p[2]} << 16) |
         (std::uint32_t{p[3]} << 24);
}

inline void store_le32(std::uint8_t* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

inline std::uint32_t load_be32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) | (std::uint32_t{p[2]} << 8) |
         std::uint32_t{p[3]};
}

inline void store_be32(std::uint8_t* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<std::uint8_t>(v >> (24 - 8 * i));
}

}  // namespace lyra2re
