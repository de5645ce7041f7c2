#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>

#include "lyra2re/bytes.hpp"
#include "lyra2re/chain.hpp"

namespace lyra2re {

// Unsigned 256-bit integer, limb 0 least significant.
class Uint256 {
 public:
  constexpr Uint256() = default;
  constexpr explicit Uint256(std::uint64_t v) : limbs_{v, 0, 0, 0} {}

  static Uint256 from_le_bytes(const Digest256& b);
  static Uint256 max();
  Digest256 to_le_bytes() const;
  // Big-endian hex, 64 chars.
  std::string to_hex() const;
  static Uint256 from_hex(std::string_view be_hex);

  std::uint64_t limb(int i) const { return limbs_[i]; }
  std::uint64_t& limb(int i) { return limbs_[i]; }

  friend bool operator==(const Uint256&, const Uint256&) = default;
  friend std::strong_ordering operator<=>(const Uint256& a, const Uint256& b) {
    for (int i = 3; i >= 0; --i)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::uint64_t, 4> limbs_{};
};

struct BlockHeader {
  std::uint32_t version = 0;
  Digest256 prev_block{};
  Digest256 merkle_root{};
  std::uint32_t time = 0;
  std::uint32_t nbits = 0;
  std::uint32_t nonce = 0;

  bool operator==(const BlockHeader&) const = default;
};

// All integer fields little-endian, hashes as raw bytes, 80 bytes total.
HeaderBytes encode_header(const BlockHeader& h);
BlockHeader decode_header(std::span<const std::uint8_t> bytes);

class TargetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Compact nBits -> threshold. Throws TargetError when the sign bit is set or
// the value does not fit in 256 bits.
Uint256 expand_target(std::uint32_t nbits);

// Digest read as a little-endian integer, strictly below target.
bool meets_target(const Digest256& hash, const Uint256& target);

bool verify_solution(const BlockHeader& h, const Uint256& target, ChainVariant v);

enum class SearchStatus { winning_nonce_found, nonce_not_found, flushed };

std::string_view status_name(SearchStatus s);

struct SearchJob {
  BlockHeader header;  // nonce field is the starting nonce
  Uint256 target;
  std::uint32_t max_nonce = 0xffffffffu;
  ChainVariant variant = ChainVariant::rev2;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::nonce_not_found;
  std::optional<std::uint32_t> winning_nonce;
  std::optional<Digest256> winning_hash;
  std::uint64_t evaluations = 0;
};

struct SearchOptions {
  unsigned workers = 0;     // 0: hardware concurrency
  std::uint32_t chunk = 256;  // nonces claimed per grab
};

// Scans nonces start..max_nonce and reports the smallest winner in range,
// independent of worker count. Returns flushed if `cancel` fires first.
SearchOutcome search(const SearchJob& job, std::stop_token cancel = {}, const SearchOptions& opt = {});

}  // namespace lyra2re
