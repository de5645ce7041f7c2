#include "lyra2re/pow.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <thread>
#include <vector>

namespace lyra2re {

Uint256 Uint256::from_le_bytes(const Digest256& b) {
  Uint256 r;
  for (int i = 0; i < 4; ++i) r.limbs_[i] = load_le64(b.data() + 8 * i);
  return r;
}

Uint256 Uint256::max() {
  Uint256 r;
  r.limbs_.fill(~std::uint64_t{0});
  return r;
}

Digest256 Uint256::to_le_bytes() const {
  Digest256 out;
  for (int i = 0; i < 4; ++i) store_le64(out.data() + 8 * i, limbs_[i]);
  return out;
}

std::string Uint256::to_hex() const {
  Digest256 le = to_le_bytes();
  std::reverse(le.begin(), le.end());
  return lyra2re::to_hex(le);
}

Uint256 Uint256::from_hex(std::string_view be_hex) {
  Digest256 be = digest_from_hex(be_hex);
  std::reverse(be.begin(), be.end());
  return from_le_bytes(be);
}

HeaderBytes encode_header(const BlockHeader& h) {
  HeaderBytes out{};
  store_le32(out.data(), h.version);
  std::memcpy(out.data() + 4, h.prev_block.data(), 32);
  std::memcpy(out.data() + 36, h.merkle_root.data(), 32);
  store_le32(out.data() + 68, h.time);
  store_le32(out.data() + 72, h.nbits);
  store_le32(out.data() + 76, h.nonce);
  return out;
}

BlockHeader decode_header(std::span<const std::uint8_t> b) {
  if (b.size() != 80)
    throw std::invalid_argument("block header must be 80 bytes, got " + std::to_string(b.size()));
  BlockHeader h;
  h.version = load_le32(b.data());
  std::memcpy(h.prev_block.data(), b.data() + 4, 32);
  std::memcpy(h.merkle_root.data(), b.data() + 36, 32);
  h.time = load_le32(b.data() + 68);
  h.nbits = load_le32(b.data() + 72);
  h.nonce = load_le32(b.data() + 76);
  return h;
}

Uint256 expand_target(std::uint32_t nbits) {
  const unsigned exponent = nbits >> 24;
  const std::uint32_t mantissa = nbits & 0x007fffffu;
  if (nbits & 0x00800000u) throw TargetError("nbits " + std::to_string(nbits) + ": sign bit set, negative target");
  if (mantissa == 0) return Uint256{};
  if (exponent <= 3) return Uint256{mantissa >> (8 * (3 - exponent))};

  // mantissa * 256^(exponent - 3); reject anything past bit 255.
  const unsigned shift = 8 * (exponent - 3);
  const unsigned top_bit = static_cast<unsigned>(std::bit_width(mantissa)) + shift;
  if (top_bit > 256) throw TargetError("nbits " + std::to_string(nbits) + ": target overflows 256 bits");
  Uint256 r;
  const unsigned limb = shift / 64, bit = shift % 64;
  r.limb(static_cast<int>(limb)) = std::uint64_t{mantissa} << bit;
  if (bit != 0 && limb + 1 < 4) r.limb(static_cast<int>(limb + 1)) = std::uint64_t{mantissa} >> (64 - bit);
  return r;
}

bool meets_target(const Digest256& hash, const Uint256& target) { return Uint256::from_le_bytes(hash) < target; }

bool verify_solution(const BlockHeader& h, const Uint256& target, ChainVariant v) {
  return meets_target(chain_hash(encode_header(h), v), target);
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::winning_nonce_found: return "WINNING_NONCE_FOUND";
    case SearchStatus::nonce_not_found: return "NONCE_NOT_FOUND";
    case SearchStatus::flushed: return "FLUSHED";
  }
  return "?";
}

SearchOutcome search(const SearchJob& job, std::stop_token cancel, const SearchOptions& opt) {
  const std::uint64_t start = job.header.nonce;
  const std::uint64_t last = job.max_nonce;
  if (start > last) throw std::invalid_argument("search: starting nonce exceeds max nonce");
  const std::uint64_t chunk = std::max<std::uint32_t>(opt.chunk, 1);
  constexpr std::uint64_t kNone = ~std::uint64_t{0};

  std::atomic<std::uint64_t> next{start};
  std::atomic<std::uint64_t> best{kNone};
  std::atomic<std::uint64_t> evaluations{0};
  std::atomic<bool> aborted{false};
  const HeaderBytes base = encode_header(job.header);

  auto worker = [&] {
    HeaderBytes bytes = base;
    std::uint64_t local = 0;
    for (;;) {
      const std::uint64_t lo = next.fetch_add(chunk);
      if (lo > last || lo >= best.load()) break;
      const std::uint64_t hi = std::min(lo + chunk - 1, last);
      for (std::uint64_t n = lo; n <= hi; ++n) {
        if (cancel.stop_requested()) {
          aborted = true;
          evaluations += local;
          return;
        }
        if (n >= best.load(std::memory_order_relaxed)) break;
        store_le32(bytes.data() + 76, static_cast<std::uint32_t>(n));
        ++local;
        if (meets_target(chain_hash(bytes, job.variant), job.target)) {
          std::uint64_t cur = best.load();
          while (n < cur && !best.compare_exchange_weak(cur, n)) {
          }
          break;
        }
      }
    }
    evaluations += local;
  };

  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunks = (last - start) / chunk + 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  SearchOutcome out;
  out.evaluations = evaluations.load();
  if (aborted) {
    out.status = SearchStatus::flushed;
    return out;
  }
  if (best.load() == kNone) {
    out.status = SearchStatus::nonce_not_found;
    return out;
  }
  out.status = SearchStatus::winning_nonce_found;
  out.winning_nonce = static_cast<std::uint32_t>(best.load());
  HeaderBytes win = base;
  store_le32(win.data() + 76, *out.winning_nonce);
  out.winning_hash = chain_hash(win, job.variant);
  return out;
}

}  // namespace lyra2re
