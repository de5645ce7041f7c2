#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lyra2re {

struct StageSpec {
  std::string name;
  double freq_mhz = 0;
  unsigned cc_per_hash = 1;     // initiation interval in cycles
  unsigned pipeline_depth = 1;  // hashes in flight per core
  unsigned replicas = 1;

  void validate() const;
  bool operator==(const StageSpec&) const = default;
};

struct PipelineSpec {
  std::vector<StageSpec> stages;
  unsigned fifo_depth = 16;  // elements per inter-stage link

  void validate() const;
  bool operator==(const PipelineSpec&) const = default;
};

// freq / cc_per_hash, MHash/s, one core.
double individual_throughput(const StageSpec& s);
// individual_throughput * replicas.
double stage_throughput(const StageSpec& s);
// min over stages of stage_throughput; 0 for an empty pipeline.
double analytic_bound(const PipelineSpec& p);

struct ReplicationPlan {
  std::vector<unsigned> replicas;
  std::vector<double> individual;
  std::vector<double> combined;
  double chain_bound = 0;
};

// Minimal replica count per stage with replicas * individual >= target.
ReplicationPlan plan_replication(std::span<const StageSpec> stages, double target_mhs);

struct StageReport {
  std::string name;
  double utilization = 0;  // busy issue slots / available, measured window
  std::uint64_t accepted = 0;   // jobs taken from the upstream FIFO (or source)
  std::uint64_t delivered = 0;  // jobs written downstream (or to the sink)
  std::uint64_t in_flight = 0;  // inside cores at the horizon
  std::uint64_t fifo_level = 0; // occupancy of the output FIFO at the horizon
  std::vector<std::uint64_t> dispatch_per_replica;
};

struct SimReport {
  double steady_throughput = 0;  // MHash/s over the measured window
  double analytic_bound = 0;
  double horizon_us = 0;
  double warmup_us = 0;
  std::uint64_t measured_hashes = 0;
  std::string bottleneck;
  std::vector<StageReport> stages;

  // delivered[i] == accepted[i+1] + fifo_level[i] and accepted == delivered + in_flight.
  bool work_conserved() const;
};

class DeadlockError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// max(10% of horizon, 100 periods of the slowest core).
double warmup_window(const PipelineSpec& p, double horizon_us);

// Event-driven model: per-stage round-robin scheduler, bounded FIFOs with
// back-pressure (a core whose result cannot be written freezes), real-valued
// clock domains. A nonzero seed staggers each core's first issue slot.
SimReport simulate(const PipelineSpec& p, double horizon_us, std::uint64_t seed = 0);

// Aligned text table; `sim` adds utilization and the measured rate.
std::string report_text(const PipelineSpec& p, const std::optional<SimReport>& sim = std::nullopt);
// JSON document holding the pipeline spec (parseable by parse_pipeline_spec) plus results.
std::string report_json(const PipelineSpec& p, const std::optional<SimReport>& sim = std::nullopt);

class SpecParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Line-based text ("fifo_depth N" / "stage NAME key=value ...") or JSON
// (first non-blank character '{'). Errors name the line and field.
PipelineSpec parse_pipeline_spec(std::string_view text);
PipelineSpec load_pipeline_spec(const std::string& path);

// One entry per core type with its reference clock, II and replica count.
std::vector<StageSpec> reference_core_stages();
// The seven-step Lyra2REv2 chain built from reference_core_stages().
PipelineSpec reference_chain_spec();

}  // namespace lyra2re
