#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lyra2re/bytes.hpp"

namespace lyra2re {

inline constexpr std::uint64_t kDefaultCorpusSeed = 0x4c797261;

// One corpus line: header, the seven REV2 stage digests, the five REV3 ones.
struct VectorRecord {
  HeaderBytes header{};
  std::array<Digest256, 7> rev2{};
  std::array<Digest256, 5> rev3{};

  bool operator==(const VectorRecord&) const = default;
};

// splitmix64 stream, ten words per header, little-endian.
std::vector<HeaderBytes> corpus_headers(std::size_t count, std::uint64_t seed);

VectorRecord compute_record(const HeaderBytes& header);

// Tab-separated lowercase hex, no trailing newline.
std::string format_record(const VectorRecord& r);
// Throws std::invalid_argument naming the line and field on malformed input.
VectorRecord parse_record(std::string_view line, std::size_t lineno = 1);

void write_corpus(std::ostream& out, std::size_t count, std::uint64_t seed);

struct Divergence {
  std::size_t line = 0;
  std::string stage;  // e.g. "rev2/4 skein256"
  std::string expected;
  std::string actual;
};

struct CorpusCheck {
  std::size_t records = 0;
  std::vector<Divergence> mismatches;  // first diverging stage per failing record
};

CorpusCheck verify_corpus(std::istream& in);

}  // namespace lyra2re
