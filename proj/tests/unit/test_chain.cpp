#include <doctest.h>

#include <stdexcept>

#include <fstream>
#include <sstream>

#include "golden.hpp"
#include "lyra2re/chain.hpp"
#include "lyra2re/lyra2.hpp"

using namespace lyra2re;
using testdata::golden;

TEST_CASE("chain orders") {
  using K = StageKind;
  const auto r2 = chain_stages(ChainVariant::rev2);
  CHECK(std::vector<K>(r2.begin(), r2.end()) ==
        std::vector<K>{K::blake256, K::keccak256, K::cubehash256, K::lyra2, K::skein256, K::cubehash256, K::bmw256});
  const auto r3 = chain_stages(ChainVariant::rev3);
  CHECK(std::vector<K>(r3.begin(), r3.end()) ==
        std::vector<K>{K::blake256, K::lyra2mod, K::cubehash256, K::lyra2mod, K::bmw256});
}

TEST_CASE("zero header through both chains") {
  const HeaderBytes zero{};
  CHECK(to_hex(chain_hash(zero, ChainVariant::rev2)) == golden("chain.rev2.zero80"));
  CHECK(to_hex(chain_hash(zero, ChainVariant::rev3)) == golden("chain.rev3.zero80"));
}

TEST_CASE("stage outputs compose step by step") {
  const auto h = header_from_hex(std::string(160, 'a'));
  for (auto v : {ChainVariant::rev2, ChainVariant::rev3}) {
    const auto outs = stage_outputs(h, v);
    const auto kinds = chain_stages(v);
    REQUIRE(outs.size() == kinds.size());
    CHECK(outs[0] == blake256_header(h));
    for (std::size_t i = 1; i < outs.size(); ++i) CHECK(outs[i] == apply_stage(kinds[i], outs[i - 1]));
    CHECK(outs.back() == chain_hash(h, v));
  }
}

TEST_CASE("independent vectors from a second implementation") {
  std::ifstream in(testdata::path("independent_chain_vectors.tsv"));
  REQUIRE(in);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string hdr, rev2, rev3;
    std::getline(ls, hdr, '\t');
    std::getline(ls, rev2, '\t');
    std::getline(ls, rev3, '\t');
    const auto h = header_from_hex(hdr);
    CHECK(to_hex(chain_hash(h, ChainVariant::rev2)) == rev2);
    CHECK(to_hex(chain_hash(h, ChainVariant::rev3)) == rev3);
    ++n;
  }
  CHECK(n == 10);
}

TEST_CASE("header width and variant names are enforced") {
  std::vector<std::uint8_t> short_hdr(79);
  CHECK_THROWS_AS(chain_hash(short_hdr, ChainVariant::rev2), std::invalid_argument);
  CHECK(parse_variant("rev3") == ChainVariant::rev3);
  CHECK_THROWS_AS(parse_variant("rev4"), std::invalid_argument);
  CHECK_THROWS_AS(apply_stage(StageKind::blake256, Digest256{}), std::invalid_argument);
  CHECK(stage_name(StageKind::lyra2mod) == "lyra2mod");
}

TEST_CASE("lyra2 stage is the stand-alone function") {
  Digest256 d{};
  d[0] = 7;
  CHECK(apply_stage(StageKind::lyra2, d) == lyra2_digest(d, Lyra2Variant::rev2));
  CHECK(apply_stage(StageKind::lyra2mod, d) == lyra2_digest(d, Lyra2Variant::mod));
}
