#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace lyra2re {

using Word = std::uint64_t;
using StateWords = std::array<Word, 16>;
using RateBlock = std::array<Word, 12>;  // 768-bit rate
using HalfBlock = std::array<Word, 8>;   // 512-bit bootstrap absorb

constexpr unsigned kFullRounds = 12;
constexpr unsigned kReducedRounds = 1;

constexpr Word rotr64(Word x, unsigned n) { return (x >> (n & 63)) | (x << ((64 - n) & 63)); }

struct GQuad {
  Word a, b, c, d;
  bool operator==(const GQuad&) const = default;
};

// BLAKE2b G without message injection, rotations 32/24/16/63.
GQuad g_function(Word a, Word b, Word c, Word d);

// One BLAKE2b round: four column G blocks, then four diagonal G blocks.
void round_f(StateWords& s);

// Words 0..7 zero, words 8..15 the BLAKE2b IV.
StateWords initial_state();

// Duplex sponge over the BLAKE2b round. Every permutation round is counted so
// callers can audit the round budget of a computation.
class Sponge {
 public:
  explicit Sponge(unsigned reduced_rounds = kReducedRounds);
  Sponge(const StateWords& s, unsigned reduced_rounds = kReducedRounds);

  // XOR into words 0..7, then the full 12 rounds.
  void absorb(const HalfBlock& block);
  // XOR into words 0..11, then the full 12 rounds.
  void absorb_rate(const RateBlock& block);

  // XOR the input into the rate, apply the reduced rounds, return the new rate.
  RateBlock reduced_duplex(const RateBlock& in);
  // Reads the current rate, then applies the reduced rounds. The returned block
  // is the pre-permutation rate; the resulting state equals reduced_duplex of
  // an all-zero block.
  RateBlock reduced_squeeze();

  // Full 1024-bit state, no rounds.
  const StateWords& squeeze_raw() const { return s_; }
  RateBlock rate() const;

  unsigned long long rounds() const { return rounds_; }
  unsigned reduced_rounds() const { return reduced_; }

 private:
  void permute(unsigned n);

  StateWords s_;
  unsigned reduced_;
  unsigned long long rounds_ = 0;
};

// 16 lowercase hex words, word 0 first, one per line.
std::string dump_state(const StateWords& s);

}  // namespace lyra2re
