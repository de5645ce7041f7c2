#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lyra2re/bytes.hpp"
#include "lyra2re/sponge.hpp"

namespace lyra2re {

enum class Lyra2Variant { rev2, mod };

struct Lyra2Params {
  unsigned time_cost = 1;
  unsigned rows = 4;
  unsigned cols = 4;
  unsigned rotation_bits = 64;
  unsigned out_bits = 256;
  unsigned reduced_rounds = kReducedRounds;

  // Throws std::invalid_argument. Only a time cost of 1 is modeled.
  void validate() const;
};

class MemoryMatrix {
 public:
  MemoryMatrix(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), cells_(std::size_t{rows} * cols) {}

  RateBlock& at(unsigned row, unsigned col) { return cells_[std::size_t{row} * cols_ + col]; }
  const RateBlock& at(unsigned row, unsigned col) const { return cells_[std::size_t{row} * cols_ + col]; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  std::size_t size_bytes() const { return cells_.size() * sizeof(RateBlock); }

  bool operator==(const MemoryMatrix&) const = default;

 private:
  unsigned rows_;
  unsigned cols_;
  std::vector<RateBlock> cells_;
};

struct WanderState {
  unsigned row0 = 0;
  unsigned prev0 = 0;
  unsigned row1 = 0;
  unsigned instance = 0;  // Lyra2MOD word selector, 0..15
  RateBlock rand{};
};

enum class Phase { bootstrap, setup, wandering, wrap_up };

struct DuplexEvent {
  Phase phase;
  unsigned row0;
  unsigned row1;
  unsigned col;
  const RateBlock& rand;
};

// Optional instrumentation. Filled by lyra2_hash when passed in.
struct Lyra2Trace {
  std::function<void(const DuplexEvent&)> on_duplex;

  std::array<unsigned long long, 4> phase_rounds{};  // indexed by Phase
  std::vector<std::pair<unsigned, unsigned>> selections;  // (instance, row1) per wandering row
  unsigned cell_writes = 0;   // setup-phase cell writes
  unsigned cell_updates = 0;  // wandering-phase XOR updates
  StateWords after_bootstrap{};
  StateWords after_setup{};
  StateWords after_wandering{};
  StateWords after_wrap_up{};
  std::optional<MemoryMatrix> matrix_after_setup;
  std::optional<MemoryMatrix> matrix_after_wandering;
};

// 768-bit left rotation of the whole rate vector; word i of the result comes
// from word i - bits/64 for whole-word amounts.
RateBlock rotate_rate_left(const RateBlock& r, unsigned bits);

// Two 512-bit absorbs: pwd||salt, then the padded parameter block. salt = pwd.
std::array<std::uint8_t, 128> bootstrap_input(std::span<const std::uint8_t> pwd, const Lyra2Params& p);
Sponge bootstrap(std::span<const std::uint8_t> pwd, const Lyra2Params& p);

// Fills every cell of m and returns the last duplex output.
RateBlock setup(Sponge& h, MemoryMatrix& m, const Lyra2Params& p, Lyra2Trace* trace = nullptr);

// Updates w.row1 (and w.instance for MOD) and returns the row.
unsigned wander_select_row1(const Sponge& h, WanderState& w, Lyra2Variant v, unsigned rows);

WanderState wandering(Sponge& h, MemoryMatrix& m, const RateBlock& rand, const Lyra2Params& p, Lyra2Variant v,
                      Lyra2Trace* trace = nullptr);

std::vector<std::uint8_t> wrap_up(Sponge& h, const MemoryMatrix& m, const WanderState& w, const Lyra2Params& p);

// Full computation. pwd must be 32 bytes.
std::vector<std::uint8_t> lyra2_hash(std::span<const std::uint8_t> pwd, Lyra2Variant v, const Lyra2Params& p = {},
                                     Lyra2Trace* trace = nullptr);

Digest256 lyra2_digest(const Digest256& pwd, Lyra2Variant v);

}  // namespace lyra2re
