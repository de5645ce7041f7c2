#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "lyra2re/bytes.hpp"
#include "lyra2re/primitives.hpp"

namespace lyra2re {

enum class ChainVariant { rev2, rev3 };

enum class StageKind { blake256, keccak256, cubehash256, lyra2, skein256, bmw256, lyra2mod };

std::string_view stage_name(StageKind k);
std::string_view variant_name(ChainVariant v);
// Accepts "rev2" / "rev3"; throws std::invalid_argument otherwise.
ChainVariant parse_variant(std::string_view s);

// Stage order; the first stage always consumes the 80-byte header.
std::span<const StageKind> chain_stages(ChainVariant v);

// Applies one 32-byte-input stage. Not valid for blake256.
Digest256 apply_stage(StageKind k, const Digest256& in, CoreStats* stats = nullptr);

Digest256 chain_hash(std::span<const std::uint8_t> header80, ChainVariant v);

// Digest after every stage; back() == chain_hash.
std::vector<Digest256> stage_outputs(std::span<const std::uint8_t> header80, ChainVariant v);

}  // namespace lyra2re
