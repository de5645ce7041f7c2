#include <doctest.h>

#include <stdexcept>

#include <random>
#include <thread>

#include "lyra2re/pow.hpp"
#include "oracles.hpp"

using namespace lyra2re;

namespace {

// Target that accepts roughly one hash in `one_in`.
Uint256 easy_target(unsigned one_in) {
  Uint256 t = Uint256::max();
  t.limb(3) = ~std::uint64_t{0} / one_in;
  return t;
}

}  // namespace

TEST_CASE("parallel search equals the sequential scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    SearchJob job;
    job.header.version = static_cast<std::uint32_t>(rng());
    job.header.time = static_cast<std::uint32_t>(rng());
    job.header.nonce = static_cast<std::uint32_t>(rng() % 100000);
    job.max_nonce = job.header.nonce + 1500;
    job.target = easy_target(trial % 2 ? 300 : 5000);
    job.variant = trial % 3 == 0 ? ChainVariant::rev3 : ChainVariant::rev2;
    const auto want = oracle::sequential_scan(job);
    for (unsigned workers : {1u, 3u, 8u}) {
      const auto got = search(job, {}, {workers, 64});
      CAPTURE(trial);
      CAPTURE(workers);
      CHECK(got.status == want.status);
      CHECK(got.winning_nonce == want.winning_nonce);
      CHECK(got.winning_hash == want.winning_hash);
    }
  }
}

TEST_CASE("all-ones target wins at the start nonce; zero target never wins") {
  SearchJob job;
  job.header.nonce = 42;
  job.max_nonce = 300;
  job.target = Uint256::max();
  auto out = search(job, {}, {4, 16});
  CHECK(out.status == SearchStatus::winning_nonce_found);
  CHECK(out.winning_nonce == 42u);

  job.target = Uint256{};
  out = search(job, {}, {4, 16});
  CHECK(out.status == SearchStatus::nonce_not_found);
  CHECK(out.evaluations == 259);
}

TEST_CASE("the last nonce of the 32-bit range is searched without wrapping") {
  SearchJob job;
  job.header.nonce = 0xfffffff0u;
  job.max_nonce = 0xffffffffu;
  job.target = Uint256{};
  const auto out = search(job, {}, {2, 4});
  CHECK(out.status == SearchStatus::nonce_not_found);
  CHECK(out.evaluations == 16);
}

TEST_CASE("a cancelled search reports FLUSHED") {
  SearchJob job;
  job.target = Uint256{};
  std::stop_source stop;
  std::jthread trigger([&] {
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
    stop.request_stop();
  });
  const auto out = search(job, stop.get_token(), {4, 64});
  CHECK(out.status == SearchStatus::flushed);
  CHECK_FALSE(out.winning_nonce.has_value());
  CHECK(out.evaluations < 0xffffffffull);
}

TEST_CASE("planted solution is recovered") {
  // Brute-force a small window once to plant a known winner, then search a wider one.
  SearchJob job;
  job.header.time = 1234567;
  job.header.nonce = 1000;
  job.max_nonce = 1199;
  std::uint32_t planted = 0;
  Digest256 best{};
  best.fill(0xff);
  auto bytes = encode_header(job.header);
  for (std::uint32_t n = 1000; n <= 1199; ++n) {
    store_le32(bytes.data() + 76, n);
    const auto d = chain_hash(bytes, ChainVariant::rev2);
    if (Uint256::from_le_bytes(d) < Uint256::from_le_bytes(best)) {
      best = d;
      planted = n;
    }
  }
  Uint256 target = Uint256::from_le_bytes(best);
  target.limb(0) += 1;  // accept exactly the planted digest value
  job.target = target;
  const auto out = search(job, {}, {4, 8});
  CHECK(out.status == SearchStatus::winning_nonce_found);
  CHECK(out.winning_nonce == planted);
  CHECK(out.winning_hash == best);
}

TEST_CASE("start beyond max is rejected") {
  SearchJob job;
  job.header.nonce = 10;
  job.max_nonce = 9;
  CHECK_THROWS_AS(search(job), std::invalid_argument);
}

TEST_CASE("status names") {
  CHECK(status_name(SearchStatus::winning_nonce_found) == "WINNING_NONCE_FOUND");
  CHECK(status_name(SearchStatus::nonce_not_found) == "NONCE_NOT_FOUND");
  CHECK(status_name(SearchStatus::flushed) == "FLUSHED");
}
