#include "lyra2re/sponge.hpp"

#include <cstdio>
#include <stdexcept>

namespace lyra2re {

namespace {

constexpr StateWords kInit = {0, 0, 0, 0, 0, 0, 0, 0,
                              0x6a09e667f3bcc908ULL, 0xbb67ae8584caa73bULL,
                              0x3c6ef372fe94f82bULL, 0xa54ff53a5f1d36f1ULL,
                              0x510e527fade682d1ULL, 0x9b05688c2b3e6c1fULL,
                              0x1f83d9abfb41bd6bULL, 0x5be0cd19137e2179ULL};

inline void g(StateWords& v, int a, int b, int c, int d) {
  GQuad q = g_function(v[a], v[b], v[c], v[d]);
  v[a] = q.a;
  v[b] = q.b;
  v[c] = q.c;
  v[d] = q.d;
}

}  // namespace

GQuad g_function(Word a, Word b, Word c, Word d) {
  a += b;
  d = rotr64(d ^ a, 32);
  c += d;
  b = rotr64(b ^ c, 24);
  a += b;
  d = rotr64(d ^ a, 16);
  c += d;
  b = rotr64(b ^ c, 63);
  return {a, b, c, d};
}

void round_f(StateWords& v) {
  g(v, 0, 4, 8, 12);
  g(v, 1, 5, 9, 13);
  g(v, 2, 6, 10, 14);
  g(v, 3, 7, 11, 15);
  g(v, 0, 5, 10, 15);
  g(v, 1, 6, 11, 12);
  g(v, 2, 7, 8, 13);
  g(v, 3, 4, 9, 14);
}

StateWords initial_state() { return kInit; }

Sponge::Sponge(unsigned reduced_rounds) : Sponge(kInit, reduced_rounds) {}

Sponge::Sponge(const StateWords& s, unsigned reduced_rounds) : s_(s), reduced_(reduced_rounds) {
  if (reduced_rounds != 0 && reduced_rounds != 1 && reduced_rounds != kFullRounds)
    throw std::invalid_argument("reduced rounds must be 0, 1 or 12");
}

void Sponge::permute(unsigned n) {
  for (unsigned i = 0; i < n; ++i) round_f(s_);
  rounds_ += n;
}

void Sponge::absorb(const HalfBlock& block) {
  for (int i = 0; i < 8; ++i) s_[i] ^= block[i];
  permute(kFullRounds);
}

void Sponge::absorb_rate(const RateBlock& block) {
  for (int i = 0; i < 12; ++i) s_[i] ^= block[i];
  permute(kFullRounds);
}

RateBlock Sponge::reduced_duplex(const RateBlock& in) {
  for (int i = 0; i < 12; ++i) s_[i] ^= in[i];
  permute(reduced_);
  return rate();
}

RateBlock Sponge::reduced_squeeze() {
  RateBlock out = rate();
  permute(reduced_);
  return out;
}

RateBlock Sponge::rate() const {
  RateBlock r;
  for (int i = 0; i < 12; ++i) r[i] = s_[i];
  return r;
}

std::string dump_state(const StateWords& s) {
  std::string out;
  char buf[20];
  for (Word w : s) {
    std::snprintf(buf, sizeof buf, "%016llx\n", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

}  // namespace lyra2re
