#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "lyra2re/pipeline.hpp"

using namespace lyra2re;
using doctest::Approx;

TEST_CASE("individual throughput is clock over cycles per hash") {
  CHECK(individual_throughput({"keccak", 375, 24}) == Approx(15.625));
  CHECK(stage_throughput({"lyra2", 225, 68}) == Approx(3.3088).epsilon(1e-4));
  CHECK(stage_throughput({"x", 123.5, 1}) == Approx(123.5));
  CHECK(stage_throughput({"x", 100, 4, 1, 3}) == Approx(75));
}

TEST_CASE("stage validation") {
  CHECK_THROWS_AS(StageSpec({"a", 0, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(StageSpec({"a", 10, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(StageSpec({"a", 10, 1, 1, 0}).validate(), std::invalid_argument);
}

TEST_CASE("replication plan for the reference cores") {
  const auto cores = reference_core_stages();
  const auto plan = plan_replication(cores, 31.25);
  CHECK(plan.replicas == std::vector<unsigned>{1, 2, 24, 10, 1, 1});
  CHECK(plan.chain_bound == Approx(31.25));
  for (std::size_t i = 0; i < cores.size(); ++i) {
    CAPTURE(i);
    CHECK(plan.individual[i] * plan.replicas[i] >= 31.25 - 1e-9);
    if (plan.replicas[i] > 1) CHECK(plan.individual[i] * (plan.replicas[i] - 1) < 31.25);
  }
}

TEST_CASE("planner: low targets need one core everywhere; bad targets throw") {
  const auto cores = reference_core_stages();
  const auto plan = plan_replication(cores, 1.0);
  for (auto n : plan.replicas) CHECK(n == 1);
  CHECK_THROWS_AS(plan_replication(cores, 0), std::invalid_argument);
  CHECK(plan_replication({}, 5).replicas.empty());
}

TEST_CASE("reference chain simulates at the analytic bound") {
  const auto spec = reference_chain_spec();
  CHECK(analytic_bound(spec) == Approx(31.25));
  const auto r = simulate(spec, 2000);
  CHECK(r.steady_throughput == Approx(31.25).epsilon(0.01));
  CHECK(r.steady_throughput <= r.analytic_bound * (1 + 1e-9) + 1.0 / (r.horizon_us - r.warmup_us));
  CHECK(r.work_conserved());
  CHECK(r.bottleneck == "keccak256");
  for (const auto& s : r.stages) {
    CHECK(s.utilization >= 0);
    CHECK(s.utilization <= 1);
  }
}

TEST_CASE("single stage runs at its own throughput") {
  for (const StageSpec& s : {StageSpec{"a", 100, 3, 5, 2}, StageSpec{"b", 225, 68, 8, 10}, StageSpec{"c", 50, 1, 1, 1}}) {
    PipelineSpec p{{s}, 4};
    const auto r = simulate(p, 5000);
    CHECK(r.steady_throughput == Approx(stage_throughput(s)).epsilon(0.01));
    CHECK(r.bottleneck == s.name);
  }
}

TEST_CASE("two stages, downstream half as fast") {
  PipelineSpec p{{{"up", 200, 2, 4, 1}, {"down", 100, 2, 4, 1}}, 8};
  const auto r = simulate(p, 2000);
  CHECK(r.stages[0].utilization == Approx(0.5).epsilon(0.02));
  CHECK(r.stages[1].utilization == Approx(1.0).epsilon(0.01));
  CHECK(r.bottleneck == "down");
  CHECK(r.steady_throughput == Approx(50).epsilon(0.01));
  CHECK(r.work_conserved());
}

TEST_CASE("round-robin gives each replica the same share") {
  PipelineSpec p{{{"src", 1000, 1, 1, 1}, {"wide", 100, 10, 2, 5}}, 16};
  const auto r = simulate(p, 3000);
  const auto& d = r.stages[1].dispatch_per_replica;
  REQUIRE(d.size() == 5);
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  CHECK(*hi - *lo <= 1);
}

TEST_CASE("deep FIFOs reach the bound for arbitrary rates") {
  PipelineSpec p{{{"a", 317, 7, 6, 2}, {"b", 151, 5, 3, 1}, {"c", 480, 31, 4, 3}}, 12};
  const auto r = simulate(p, 4000, 99);
  CHECK(r.steady_throughput == Approx(analytic_bound(p)).epsilon(0.01));
  CHECK(r.work_conserved());
}

TEST_CASE("shallow FIFOs never exceed the bound and still conserve work") {
  auto spec = reference_chain_spec();
  spec.fifo_depth = 1;
  const auto r = simulate(spec, 2000);
  CHECK(r.steady_throughput <= analytic_bound(spec) * 1.001);
  CHECK(r.work_conserved());
}

TEST_CASE("seeded runs are reproducible") {
  const auto spec = reference_chain_spec();
  const auto a = simulate(spec, 1000, 5);
  const auto b = simulate(spec, 1000, 5);
  CHECK(a.measured_hashes == b.measured_hashes);
  CHECK(a.stages[3].dispatch_per_replica == b.stages[3].dispatch_per_replica);
}

TEST_CASE("zero-depth FIFOs deadlock with an error") {
  auto spec = reference_chain_spec();
  spec.fifo_depth = 0;
  CHECK_THROWS_AS(simulate(spec, 2000), DeadlockError);
}

TEST_CASE("horizon must clear the warm-up window") {
  const auto spec = reference_chain_spec();
  CHECK_THROWS_AS(simulate(spec, 50), std::invalid_argument);
  CHECK(warmup_window(spec, 10000) == Approx(1000));
  CHECK(warmup_window(spec, 100) == Approx(100 * 0.768));
}

TEST_CASE("reports: table values, empty pipeline, JSON round-trip") {
  const auto spec = reference_chain_spec();
  const auto text = report_text(spec);
  CHECK(text.find("15.63") != std::string::npos);
  CHECK(text.find("33.09") != std::string::npos);
  CHECK(text.find("31.25") != std::string::npos);

  const PipelineSpec empty;
  CHECK_NOTHROW(report_text(empty));
  CHECK(simulate(empty, 10).stages.empty());
  CHECK(parse_pipeline_spec(report_json(empty)) == empty);

  const auto sim = simulate(spec, 1000);
  const auto doc = report_json(spec, sim);
  CHECK(parse_pipeline_spec(doc) == spec);
  const auto j = nlohmann::json::parse(doc);
  CHECK(j["simulation"]["work_conserved"] == true);
}

TEST_CASE("bundled spec file matches the built-in chain") {
  CHECK(load_pipeline_spec(std::string(LYRA2RE_SPEC_DATA) + "/reference_pipeline.spec") == reference_chain_spec());
}

TEST_CASE("text spec parser errors name line and field") {
  auto error_of = [](const std::string& text) {
    try {
      (void)parse_pipeline_spec(text);
    } catch (const SpecParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(error_of("fifo_depth 4\nstage a freq_mhz=abc cc_per_hash=2\n").starts_with("line 2, field 'freq_mhz'"));
  CHECK(error_of("stage a freq_mhz=10\n").find("cc_per_hash") != std::string::npos);
  CHECK(error_of("\n\nstage a freq_mhz=1 cc_per_hash=0").starts_with("line 3, field 'cc_per_hash'"));
  CHECK(error_of("stage a freq_mhz=1 cc_per_hash=1 colour=red").find("'colour'") != std::string::npos);
  CHECK(error_of("pipes 3").starts_with("line 1"));
  CHECK(error_of("{\"stages\":[{\"name\":\"x\"}]}").find("freq_mhz") != std::string::npos);
  CHECK(error_of("{broken").find("JSON") != std::string::npos);
  const auto ok = parse_pipeline_spec("# comment\nfifo_depth 2\nstage s freq_mhz=1.5 cc_per_hash=3 # trailing\n");
  CHECK(ok.fifo_depth == 2);
  CHECK(ok.stages.at(0).freq_mhz == 1.5);
  CHECK(ok.stages.at(0).replicas == 1);
}
