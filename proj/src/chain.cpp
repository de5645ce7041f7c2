#include "lyra2re/chain.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "lyra2re/lyra2.hpp"

namespace lyra2re {

namespace {

constexpr std::array<StageKind, 7> kRev2 = {StageKind::blake256,    StageKind::keccak256, StageKind::cubehash256,
                                            StageKind::lyra2,       StageKind::skein256,  StageKind::cubehash256,
                                            StageKind::bmw256};
constexpr std::array<StageKind, 5> kRev3 = {StageKind::blake256, StageKind::lyra2mod, StageKind::cubehash256,
                                            StageKind::lyra2mod, StageKind::bmw256};

void check_header(std::span<const std::uint8_t> h) {
  if (h.size() != 80)
    throw std::invalid_argument("chain: header must be 80 bytes (160 hex chars), got " + std::to_string(h.size()) +
                                " bytes");
}

}  // namespace

std::string_view stage_name(StageKind k) {
  switch (k) {
    case StageKind::blake256: return "blake256";
    case StageKind::keccak256: return "keccak256";
    case StageKind::cubehash256: return "cubehash256";
    case StageKind::lyra2: return "lyra2";
    case StageKind::skein256: return "skein256";
    case StageKind::bmw256: return "bmw256";
    case StageKind::lyra2mod: return "lyra2mod";
  }
  return "?";
}

std::string_view variant_name(ChainVariant v) { return v == ChainVariant::rev2 ? "rev2" : "rev3"; }

ChainVariant parse_variant(std::string_view s) {
  if (s == "rev2") return ChainVariant::rev2;
  if (s == "rev3") return ChainVariant::rev3;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "', expected rev2 or rev3");
}

std::span<const StageKind> chain_stages(ChainVariant v) {
  if (v == ChainVariant::rev2) return kRev2;
  return kRev3;
}

Digest256 apply_stage(StageKind k, const Digest256& in, CoreStats* stats) {
  switch (k) {
    case StageKind::keccak256: return keccak256(in, stats);
    case StageKind::cubehash256: return cubehash256(in, stats);
    case StageKind::lyra2: return lyra2_digest(in, Lyra2Variant::rev2);
    case StageKind::skein256: return skein256(in, stats);
    case StageKind::bmw256: return bmw256(in, stats);
    case StageKind::lyra2mod: return lyra2_digest(in, Lyra2Variant::mod);
    case StageKind::blake256: break;
  }
  throw std::invalid_argument("apply_stage: blake256 takes the 80-byte header");
}

std::vector<Digest256> stage_outputs(std::span<const std::uint8_t> header, ChainVariant v) {
  check_header(header);
  auto stages = chain_stages(v);
  std::vector<Digest256> out;
  out.reserve(stages.size());
  out.push_back(blake256_header(header));
  for (std::size_t i = 1; i < stages.size(); ++i) out.push_back(apply_stage(stages[i], out.back()));
  return out;
}

Digest256 chain_hash(std::span<const std::uint8_t> header, ChainVariant v) {
  check_header(header);
  auto stages = chain_stages(v);
  Digest256 d = blake256_header(header);
  for (std::size_t i = 1; i < stages.size(); ++i) d = apply_stage(stages[i], d);
  return d;
}

}  // namespace lyra2re
