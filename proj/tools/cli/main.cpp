// lyra2re command-line front end. Every subcommand is a thin wrapper over the library.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "lyra2re/chain.hpp"
#include "lyra2re/pipeline.hpp"
#include "lyra2re/pow.hpp"
#include "lyra2re/vectors.hpp"

namespace {

using namespace lyra2re;

enum ExitCode : int { kOk = 0, kUsage = 1, kNegative = 2, kInternal = 3 };

std::uint32_t parse_u32(const std::string& s, const char* what, int base = 0) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used, base);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-' || v > 0xffffffffull)
    throw std::invalid_argument(std::string(what) + ": expected a 32-bit unsigned value, got '" + s + "'");
  return static_cast<std::uint32_t>(v);
}

int cmd_hash(const std::string& hex, const std::string& variant, bool stages) {
  const auto v = parse_variant(variant);
  const auto header = header_from_hex(hex);
  if (stages) {
    const auto kinds = chain_stages(v);
    const auto outs = stage_outputs(header, v);
    for (std::size_t i = 0; i < outs.size(); ++i) std::cout << stage_name(kinds[i]) << ' ' << to_hex(outs[i]) << '\n';
  } else {
    std::cout << to_hex(chain_hash(header, v)) << '\n';
  }
  return kOk;
}

struct MineArgs {
  std::string header_hex;
  std::string variant = "rev2";
  std::optional<std::string> nbits;
  std::optional<std::string> target_hex;
  std::optional<std::string> start;
  std::string max = "0xffffffff";
  unsigned workers = 0;
};

int cmd_mine(const MineArgs& a) {
  SearchJob job;
  job.variant = parse_variant(a.variant);
  if (a.header_hex.size() == 152) {
    auto bytes = from_hex(a.header_hex);
    bytes.resize(80, 0);
    job.header = decode_header(bytes);
  } else if (a.header_hex.size() == 160) {
    job.header = decode_header(header_from_hex(a.header_hex));
  } else {
    throw std::invalid_argument("header must be 76 bytes (152 hex chars) without the nonce or 80 bytes (160 hex chars), got " +
                                std::to_string(a.header_hex.size()) + " hex chars");
  }
  if (a.nbits) {
    if (a.nbits->size() != 8) throw std::invalid_argument("--nbits: expected 8 hex digits");
    job.header.nbits = parse_u32(*a.nbits, "--nbits", 16);
  }
  if (a.target_hex) {
    if (a.target_hex->size() != 64) throw std::invalid_argument("--target-hex: expected 64 hex digits");
    job.target = Uint256::from_hex(*a.target_hex);
  } else {
    job.target = expand_target(job.header.nbits);
  }
  if (a.start) job.header.nonce = parse_u32(*a.start, "--start");
  job.max_nonce = parse_u32(a.max, "--max");
  if (job.header.nonce > job.max_nonce) throw std::invalid_argument("--start exceeds --max");

  const auto out = search(job, {}, {a.workers, 256});
  std::cout << status_name(out.status);
  if (out.winning_nonce) {
    char nonce_hex[16];
    std::snprintf(nonce_hex, sizeof nonce_hex, "%08x", *out.winning_nonce);
    std::cout << " nonce=" << *out.winning_nonce << " (0x" << nonce_hex << ") hash=" << to_hex(*out.winning_hash);
  }
  std::cout << " evaluations=" << out.evaluations << '\n';
  return out.status == SearchStatus::winning_nonce_found ? kOk : kNegative;
}

int cmd_plan(const std::string& spec_path, double target, bool json) {
  auto spec = load_pipeline_spec(spec_path);
  const auto plan = plan_replication(spec.stages, target);
  for (std::size_t i = 0; i < spec.stages.size(); ++i) spec.stages[i].replicas = plan.replicas[i];
  if (json) {
    std::cout << report_json(spec);
  } else {
    std::cout << "target: " << target << " MHash/s\n" << report_text(spec);
  }
  return kOk;
}

int cmd_simulate(const std::string& spec_path, double horizon, std::uint64_t seed, std::optional<unsigned> fifo,
                 bool json) {
  auto spec = load_pipeline_spec(spec_path);
  if (fifo) spec.fifo_depth = *fifo;
  const auto r = simulate(spec, horizon, seed);
  std::cout << (json ? report_json(spec, r) : report_text(spec, r));
  if (!json) std::cout << "work conserved: " << (r.work_conserved() ? "yes" : "NO") << '\n';
  return kOk;
}

int cmd_bench(const std::string& variant, double seconds) {
  using clock = std::chrono::steady_clock;
  const auto v = parse_variant(variant);
  const auto budget = std::chrono::duration<double>(seconds);
  auto header = corpus_headers(1, kDefaultCorpusSeed)[0];

  std::uint64_t n = 0;
  const auto t0 = clock::now();
  auto elapsed = clock::duration::zero();
  do {
    for (int i = 0; i < 64; ++i, ++n) {
      store_le32(header.data() + 76, static_cast<std::uint32_t>(n));
      const auto d = chain_hash(header, v);
      header[0] ^= d[0];
    }
    elapsed = clock::now() - t0;
  } while (elapsed < budget);
  const double secs = std::chrono::duration<double>(elapsed).count();
  std::cout << "chain " << variant_name(v) << ": " << static_cast<double>(n) / secs << " hashes/s (" << n
            << " hashes, " << secs << " s, 1 thread)\n";

  const auto slice = budget / 10.0;
  Digest256 d{};
  for (auto kind : chain_stages(v)) {
    std::uint64_t m = 0;
    const auto s0 = clock::now();
    auto e = clock::duration::zero();
    do {
      for (int i = 0; i < 64; ++i, ++m) d = kind == StageKind::blake256 ? blake256_header(header) : apply_stage(kind, d);
      e = clock::now() - s0;
    } while (e < slice);
    std::cout << "  " << stage_name(kind) << ": " << static_cast<double>(m) / std::chrono::duration<double>(e).count()
              << " hashes/s\n";
  }
  std::cout << "informational only; software rates are not comparable to hardware cycles per hash\n";
  return kOk;
}

int cmd_vectors(std::size_t count, std::uint64_t seed, const std::string& out_path, const std::string& verify_path) {
  if (!verify_path.empty()) {
    std::ifstream in(verify_path);
    if (!in) throw std::invalid_argument("cannot open corpus '" + verify_path + "'");
    const auto check = verify_corpus(in);
    for (const auto& m : check.mismatches)
      std::cout << "line " << m.line << ": first divergence at " << m.stage << " expected " << m.expected << " got "
                << m.actual << '\n';
    std::cout << check.records - check.mismatches.size() << "/" << check.records << " records match\n";
    return check.mismatches.empty() ? kOk : kNegative;
  }
  if (out_path.empty() || out_path == "-") {
    write_corpus(std::cout, count, seed);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    write_corpus(out, count, seed);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyra2REv2/v3 hashing, mining and pipeline planning"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");

  std::string variant = "rev2";
  auto add_variant = [&](CLI::App* cmd) {
    cmd->add_option("--variant", variant, "Chain variant")->check(CLI::IsMember({"rev2", "rev3"}))->capture_default_str();
  };

  auto* hash = app.add_subcommand("hash", "Hash an 80-byte header given as 160 hex chars");
  std::string header_hex;
  bool stages = false;
  hash->add_option("header", header_hex, "Header hex")->required();
  hash->add_flag("--stages", stages, "Print every stage digest");
  add_variant(hash);

  auto* mine = app.add_subcommand("mine", "Search a nonce window for a hash below the target");
  MineArgs mine_args;
  mine->add_option("header", mine_args.header_hex, "76- or 80-byte header hex")->required();
  mine->add_option("--nbits", mine_args.nbits, "Compact target, 8 hex digits (default: header field)");
  mine->add_option("--target-hex", mine_args.target_hex, "Explicit 256-bit threshold, big-endian hex");
  mine->add_option("--start", mine_args.start, "First nonce (default: header nonce, or 0)");
  mine->add_option("--max", mine_args.max, "Last nonce, inclusive")->capture_default_str();
  mine->add_option("--workers", mine_args.workers, "Worker threads, 0 = all cores")
      ->envname("LYRA2RE_WORKERS")
      ->capture_default_str();
  add_variant(mine);

  std::string spec_path = LYRA2RE_DEFAULT_SPEC;
  bool json = false;
  auto* plan = app.add_subcommand("plan", "Replica counts needed to reach a target throughput");
  double target = 31.25;
  plan->add_option("--spec", spec_path, "Pipeline spec file")->capture_default_str();
  plan->add_option("--target", target, "Target MHash/s")->check(CLI::PositiveNumber)->capture_default_str();
  plan->add_flag("--json", json, "Machine-readable output");

  auto* sim = app.add_subcommand("simulate", "Discrete-event simulation of the pipeline");
  double horizon = 2000;
  std::uint64_t sim_seed = 0;
  std::optional<unsigned> fifo;
  sim->add_option("--spec", spec_path, "Pipeline spec file")->capture_default_str();
  sim->add_option("--horizon", horizon, "Simulated time in microseconds")->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_option("--seed", sim_seed, "Nonzero staggers the first issue slot of every core")->capture_default_str();
  sim->add_option("--fifo-depth", fifo, "Override the pipeline spec's FIFO depth");
  sim->add_flag("--json", json, "Machine-readable output");

  auto* bench = app.add_subcommand("bench", "Single-thread software hash rate (informational)");
  double seconds = 1.0;
  bench->add_option("--seconds", seconds, "Measurement time")->check(CLI::PositiveNumber)->capture_default_str();
  add_variant(bench);

  auto* vectors = app.add_subcommand("vectors", "Generate or verify the per-stage vector corpus");
  std::size_t count = 1000;
  std::uint64_t seed = kDefaultCorpusSeed;
  std::string out_path, verify_path;
  vectors->add_option("--count", count, "Records to generate")->capture_default_str();
  vectors->add_option("--seed", seed, "Header generator seed")->capture_default_str();
  vectors->add_option("--out", out_path, "Output file (default stdout)");
  vectors->add_option("--verify", verify_path, "Verify an existing corpus instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*hash) return cmd_hash(header_hex, variant, stages);
    if (*mine) {
      mine_args.variant = variant;
      return cmd_mine(mine_args);
    }
    if (*plan) return cmd_plan(spec_path, target, json);
    if (*sim) return cmd_simulate(spec_path, horizon, sim_seed, fifo, json);
    if (*bench) return cmd_bench(variant, seconds);
    if (*vectors) return cmd_vectors(count, seed, out_path, verify_path);
  } catch (const DeadlockError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
