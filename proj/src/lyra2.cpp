#include "lyra2re/lyra2.hpp"

#include <cstring>
#include <stdexcept>
#include <string>

namespace lyra2re {

namespace {

constexpr std::size_t kPwdBytes = 32;

RateBlock add_words(const RateBlock& a, const RateBlock& b) {
  RateBlock r;
  for (int i = 0; i < 12; ++i) r[i] = a[i] + b[i];
  return r;
}

void xor_into(RateBlock& dst, const RateBlock& src) {
  for (int i = 0; i < 12; ++i) dst[i] ^= src[i];
}

void emit(Lyra2Trace* t, Phase ph, unsigned row0, unsigned row1, unsigned col, const RateBlock& rand) {
  if (t && t->on_duplex) t->on_duplex(DuplexEvent{ph, row0, row1, col, rand});
}

}  // namespace

void Lyra2Params::validate() const {
  if (time_cost != 1) throw std::invalid_argument("lyra2: only time cost 1 is supported");
  if (rows < 3) throw std::invalid_argument("lyra2: rows must be >= 3, got " + std::to_string(rows));
  if (cols < 1) throw std::invalid_argument("lyra2: cols must be >= 1");
  if (out_bits == 0 || out_bits % 8 != 0 || out_bits > 768)
    throw std::invalid_argument("lyra2: output bits must be a positive multiple of 8 not above 768, got " +
                                std::to_string(out_bits));
  if (rotation_bits >= 768) throw std::invalid_argument("lyra2: rotation must be below 768 bits");
  if (reduced_rounds != 0 && reduced_rounds != 1 && reduced_rounds != kFullRounds)
    throw std::invalid_argument("lyra2: reduced rounds must be 0, 1 or 12");
}

RateBlock rotate_rate_left(const RateBlock& r, unsigned bits) {
  bits %= 768;
  const unsigned shift_words = bits / 64;
  const unsigned shift_bits = bits % 64;
  RateBlock out;
  for (unsigned i = 0; i < 12; ++i) {
    Word hi = r[(i + 12 - shift_words) % 12];
    if (shift_bits == 0) {
      out[i] = hi;
    } else {
      Word lo = r[(i + 24 - shift_words - 1) % 12];
      out[i] = (hi << shift_bits) | (lo >> (64 - shift_bits));
    }
  }
  return out;
}

std::array<std::uint8_t, 128> bootstrap_input(std::span<const std::uint8_t> pwd, const Lyra2Params& p) {
  if (pwd.size() != kPwdBytes)
    throw std::invalid_argument("lyra2: input must be 32 bytes, got " + std::to_string(pwd.size()));
  std::array<std::uint8_t, 128> buf{};
  std::memcpy(buf.data(), pwd.data(), kPwdBytes);
  std::memcpy(buf.data() + kPwdBytes, pwd.data(), kPwdBytes);  // salt = pwd
  const std::uint64_t fields[6] = {p.out_bits / 8u, kPwdBytes, kPwdBytes, p.time_cost, p.rows, p.cols};
  for (int i = 0; i < 6; ++i) store_le64(buf.data() + 64 + 8 * i, fields[i]);
  buf[112] = 0x80;
  buf[127] ^= 0x01;
  return buf;
}

Sponge bootstrap(std::span<const std::uint8_t> pwd, const Lyra2Params& p) {
  auto buf = bootstrap_input(pwd, p);
  Sponge h(p.reduced_rounds);
  for (int blk = 0; blk < 2; ++blk) {
    HalfBlock b;
    for (int i = 0; i < 8; ++i) b[i] = load_le64(buf.data() + 64 * blk + 8 * i);
    h.absorb(b);
  }
  return h;
}

RateBlock setup(Sponge& h, MemoryMatrix& m, const Lyra2Params& p, Lyra2Trace* t) {
  const unsigned C = p.cols;
  unsigned writes = 0;
  RateBlock rand{};

  for (unsigned col = 0; col < C; ++col) {
    rand = h.reduced_squeeze();
    m.at(0, C - 1 - col) = rand;
    ++writes;
    emit(t, Phase::setup, 0, 0, col, rand);
  }

  for (unsigned col = 0; col < C; ++col) {
    rand = h.reduced_duplex(m.at(0, col));
    RateBlock cell = m.at(0, col);
    xor_into(cell, rand);
    m.at(1, C - 1 - col) = cell;
    ++writes;
    emit(t, Phase::setup, 1, 0, col, rand);
  }

  for (unsigned row0 = 2; row0 < p.rows; ++row0) {
    const unsigned prev = row0 - 1;
    const unsigned row1 = row0 - 2;
    for (unsigned col = 0; col < C; ++col) {
      rand = h.reduced_duplex(add_words(m.at(prev, col), m.at(row1, col)));
      RateBlock cell = m.at(prev, col);
      xor_into(cell, rand);
      m.at(row0, C - 1 - col) = cell;
      ++writes;
      xor_into(m.at(row1, col), rotate_rate_left(rand, p.rotation_bits));
      emit(t, Phase::setup, row0, row1, col, rand);
    }
  }

  if (t) t->cell_writes = writes;
  return rand;
}

unsigned wander_select_row1(const Sponge& h, WanderState& w, Lyra2Variant v, unsigned rows) {
  if (v == Lyra2Variant::rev2) {
    w.row1 = static_cast<unsigned>(w.rand[0] % rows);
  } else {
    const StateWords& raw = h.squeeze_raw();
    w.instance = static_cast<unsigned>(raw[w.instance] % 16);
    w.row1 = static_cast<unsigned>(raw[w.instance] % rows);
  }
  return w.row1;
}

WanderState wandering(Sponge& h, MemoryMatrix& m, const RateBlock& rand, const Lyra2Params& p, Lyra2Variant v,
                      Lyra2Trace* t) {
  WanderState w;
  w.rand = rand;
  w.prev0 = p.rows - 1;
  unsigned updates = 0;
  for (unsigned row0 = 0; row0 < p.rows; ++row0) {
    w.row0 = row0;
    wander_select_row1(h, w, v, p.rows);
    if (t) t->selections.emplace_back(w.instance, w.row1);
    for (unsigned col = 0; col < p.cols; ++col) {
      w.rand = h.reduced_duplex(add_words(m.at(w.prev0, col), m.at(w.row1, col)));
      // When row1 == row0 both updates land on the same cell, in this order.
      xor_into(m.at(row0, col), w.rand);
      xor_into(m.at(w.row1, col), rotate_rate_left(w.rand, p.rotation_bits));
      updates += 2;
      emit(t, Phase::wandering, row0, w.row1, col, w.rand);
    }
    w.prev0 = row0;
  }
  if (t) t->cell_updates = updates;
  return w;
}

std::vector<std::uint8_t> wrap_up(Sponge& h, const MemoryMatrix& m, const WanderState& w, const Lyra2Params& p) {
  // The whole 768-bit cell is absorbed in one full-round call.
  h.absorb_rate(m.at(w.row1, 0));
  std::vector<std::uint8_t> k(p.out_bits / 8);
  std::uint8_t word[8];
  const StateWords& s = h.squeeze_raw();
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i % 8 == 0) store_le64(word, s[i / 8]);
    k[i] = word[i % 8];
  }
  return k;
}

std::vector<std::uint8_t> lyra2_hash(std::span<const std::uint8_t> pwd, Lyra2Variant v, const Lyra2Params& p,
                                     Lyra2Trace* t) {
  p.validate();
  if (pwd.size() != kPwdBytes)
    throw std::invalid_argument("lyra2: input must be 32 bytes, got " + std::to_string(pwd.size()));

  unsigned long long mark = 0;
  auto phase_done = [&](Phase ph, const Sponge& h) {
    if (!t) return;
    t->phase_rounds[static_cast<int>(ph)] = h.rounds() - mark;
    mark = h.rounds();
  };

  Sponge h = bootstrap(pwd, p);
  phase_done(Phase::bootstrap, h);
  if (t) t->after_bootstrap = h.squeeze_raw();

  MemoryMatrix m(p.rows, p.cols);
  RateBlock rand = setup(h, m, p, t);
  phase_done(Phase::setup, h);
  if (t) {
    t->after_setup = h.squeeze_raw();
    t->matrix_after_setup = m;
  }

  WanderState w = wandering(h, m, rand, p, v, t);
  phase_done(Phase::wandering, h);
  if (t) {
    t->after_wandering = h.squeeze_raw();
    t->matrix_after_wandering = m;
  }

  auto k = wrap_up(h, m, w, p);
  phase_done(Phase::wrap_up, h);
  if (t) t->after_wrap_up = h.squeeze_raw();
  return k;
}

Digest256 lyra2_digest(const Digest256& pwd, Lyra2Variant v) {
  static const Lyra2Params params{};
  auto k = lyra2_hash(pwd, v, params);
  Digest256 out;
  std::memcpy(out.data(), k.data(), out.size());
  return out;
}

}  // namespace lyra2re
