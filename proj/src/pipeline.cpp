#include "lyra2re/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <iomanip>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

#include <json.hpp>

namespace lyra2re {

void StageSpec::validate() const {
  if (!(freq_mhz > 0) || !std::isfinite(freq_mhz))
    throw std::invalid_argument("stage '" + name + "': freq_mhz must be > 0");
  if (cc_per_hash < 1) throw std::invalid_argument("stage '" + name + "': cc_per_hash must be >= 1");
  if (pipeline_depth < 1) throw std::invalid_argument("stage '" + name + "': pipeline_depth must be >= 1");
  if (replicas < 1) throw std::invalid_argument("stage '" + name + "': replicas must be >= 1");
}

void PipelineSpec::validate() const {
  for (const auto& s : stages) s.validate();
}

double individual_throughput(const StageSpec& s) {
  return s.freq_mhz / static_cast<double>(s.cc_per_hash);
}

double stage_throughput(const StageSpec& s) {
  return individual_throughput(s) * s.replicas;
}

double analytic_bound(const PipelineSpec& p) {
  if (p.stages.empty()) return 0;
  double b = std::numeric_limits<double>::infinity();
  for (const auto& s : p.stages) b = std::min(b, stage_throughput(s));
  return b;
}

ReplicationPlan plan_replication(std::span<const StageSpec> stages, double target_mhs) {
  if (!(target_mhs > 0)) throw std::invalid_argument("target throughput must be > 0");
  ReplicationPlan plan;
  plan.chain_bound = stages.empty() ? 0 : std::numeric_limits<double>::infinity();
  for (const auto& s : stages) {
    s.validate();
    const double one = individual_throughput(s);
    // The relative slack keeps exact multiples (e.g. 2 x 15.625) from rounding up.
    const auto n = static_cast<unsigned>(std::max(1.0, std::ceil(target_mhs / one - 1e-9)));
    plan.replicas.push_back(n);
    plan.individual.push_back(one);
    plan.combined.push_back(one * n);
    plan.chain_bound = std::min(plan.chain_bound, one * n);
  }
  return plan;
}

bool SimReport::work_conserved() const {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto& s = stages[i];
    if (s.accepted != s.delivered + s.in_flight) return false;
    if (i + 1 < stages.size() && s.delivered != stages[i + 1].accepted + s.fifo_level) return false;
  }
  return true;
}

double warmup_window(const PipelineSpec& p, double horizon_us) {
  double slowest = 0;
  for (const auto& s : p.stages) slowest = std::max(slowest, 1.0 / individual_throughput(s));
  return std::max(0.1 * horizon_us, 100.0 * slowest);
}

namespace {

struct Core {
  std::deque<double> done_at;  // completion times of in-flight hashes, ascending
  double next_issue = 0;
  bool frozen = false;
  double frozen_since = 0;
  std::uint64_t generation = 0;
  std::uint64_t dispatched = 0;
};

struct StageState {
  double period = 0;   // initiation interval, us
  double latency = 0;  // issue to result, us
  unsigned depth = 1;
  std::vector<Core> cores;
  std::size_t next_core = 0;
  std::uint64_t accepted = 0;
  std::uint64_t delivered = 0;
  std::uint64_t issued_in_window = 0;
  std::uint64_t delivered_in_window = 0;
};

struct Event {
  double time;
  std::uint64_t seq;
  std::size_t stage;
  std::size_t core;
  std::uint64_t generation;
  bool operator>(const Event& o) const { return time != o.time ? time > o.time : seq > o.seq; }
};

class Simulator {
 public:
  Simulator(const PipelineSpec& p, double horizon, double warmup, std::uint64_t seed)
      : spec_(p), horizon_(horizon), warmup_(warmup), fifo_(p.stages.empty() ? 0 : p.stages.size() - 1, 0) {
    std::mt19937_64 rng(seed);
    for (const auto& s : p.stages) {
      StageState st;
      st.period = 1.0 / individual_throughput(s);
      st.latency = st.period * s.pipeline_depth;
      st.depth = s.pipeline_depth;
      st.cores.resize(s.replicas);
      if (seed != 0) {
        std::uniform_real_distribution<double> phase(0.0, st.period);
        for (auto& c : st.cores) c.next_issue = phase(rng);
      }
      stages_.push_back(std::move(st));
    }
    for (std::size_t i = 0; i < stages_.size(); ++i)
      for (std::size_t c = 0; c < stages_[i].cores.size(); ++c) wake(i, c, stages_[i].cores[c].next_issue);
  }

  void run() {
    pump(0);
    while (!events_.empty()) {
      const Event e = events_.top();
      if (e.time > horizon_) return;
      events_.pop();
      if (stages_[e.stage].cores[e.core].generation != e.generation) continue;
      pump(e.time);
    }
    throw DeadlockError(deadlock_message());
  }

  SimReport report() const {
    SimReport r;
    r.horizon_us = horizon_;
    r.warmup_us = warmup_;
    r.analytic_bound = analytic_bound(spec_);
    const double window = horizon_ - warmup_;
    double best_util = -1;
    double best_cap = 0;
    for (std::size_t i = 0; i < stages_.size(); ++i) {
      const auto& st = stages_[i];
      StageReport sr;
      sr.name = spec_.stages[i].name;
      sr.accepted = st.accepted;
      sr.delivered = st.delivered;
      for (const auto& c : st.cores) {
        sr.in_flight += c.done_at.size();
        sr.dispatch_per_replica.push_back(c.dispatched);
      }
      sr.fifo_level = i < fifo_.size() ? fifo_[i] : 0;
      const double busy = static_cast<double>(st.issued_in_window) * st.period;
      sr.utilization = std::clamp(busy / (static_cast<double>(st.cores.size()) * window), 0.0, 1.0);
      // Ties within 1e-3 go to the lower-capacity stage, then the earlier one.
      const double cap = stage_throughput(spec_.stages[i]);
      if (sr.utilization > best_util + 1e-3 ||
          (std::abs(sr.utilization - best_util) <= 1e-3 && cap < best_cap - 1e-9)) {
        best_util = sr.utilization;
        best_cap = cap;
        r.bottleneck = sr.name;
      }
      r.stages.push_back(std::move(sr));
    }
    if (!stages_.empty()) {
      r.measured_hashes = stages_.back().delivered_in_window;
      r.steady_throughput = static_cast<double>(r.measured_hashes) / window;
    }
    return r;
  }

 private:
  void wake(std::size_t stage, std::size_t core, double t) {
    events_.push({t, seq_++, stage, core, stages_[stage].cores[core].generation});
  }

  bool downstream_has_room(std::size_t stage) const {
    return stage + 1 == stages_.size() || fifo_[stage] < spec_.fifo_depth;
  }

  bool upstream_has_data(std::size_t stage) const { return stage == 0 || fifo_[stage - 1] > 0; }

  // Moves finished results downstream; returns true if anything changed.
  bool drain(std::size_t stage, double now) {
    auto& st = stages_[stage];
    bool moved = false;
    for (std::size_t ci = 0; ci < st.cores.size(); ++ci) {
      auto& c = st.cores[ci];
      while (!c.done_at.empty() && c.done_at.front() <= now) {
        if (!downstream_has_room(stage)) {
          if (!c.frozen) {
            c.frozen = true;
            c.frozen_since = now;
          }
          break;
        }
        c.done_at.pop_front();
        ++st.delivered;
        if (now > warmup_) ++st.delivered_in_window;
        if (stage + 1 < stages_.size()) ++fifo_[stage];
        moved = true;
        if (c.frozen) thaw(stage, ci, now);
      }
    }
    return moved;
  }

  // A frozen core resumes where it stopped: every pending time shifts by the stall.
  void thaw(std::size_t stage, std::size_t ci, double now) {
    auto& c = stages_[stage].cores[ci];
    const double stall = now - c.frozen_since;
    c.frozen = false;
    ++c.generation;
    for (auto& t : c.done_at) t += stall;
    c.next_issue += stall;
    if (!c.done_at.empty()) wake(stage, ci, c.done_at.front());
    wake(stage, ci, c.next_issue);
  }

  bool dispatch(std::size_t stage, double now) {
    auto& st = stages_[stage];
    bool issued = false;
    while (upstream_has_data(stage)) {
      auto& c = st.cores[st.next_core];
      if (c.frozen || c.next_issue > now || c.done_at.size() >= st.depth) break;
      if (stage > 0) --fifo_[stage - 1];
      ++st.accepted;
      ++c.dispatched;
      if (now >= warmup_) ++st.issued_in_window;
      c.done_at.push_back(now + st.latency);
      c.next_issue = now + st.period;
      wake(stage, st.next_core, c.done_at.back());
      wake(stage, st.next_core, c.next_issue);
      st.next_core = (st.next_core + 1) % st.cores.size();
      issued = true;
    }
    return issued;
  }

  void pump(double now) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = stages_.size(); i-- > 0;) {
        progress |= drain(i, now);
        progress |= dispatch(i, now);
      }
    }
  }

  std::string deadlock_message() const {
    std::ostringstream os;
    os << "pipeline deadlock: no pending events before horizon " << horizon_ << " us";
    for (std::size_t i = 0; i < stages_.size(); ++i) {
      bool frozen = false;
      for (const auto& c : stages_[i].cores) frozen |= c.frozen;
      if (frozen) {
        os << "; stage '" << spec_.stages[i].name << "' blocked on a full output FIFO (depth "
           << spec_.fifo_depth << ")";
        break;
      }
    }
    return os.str();
  }

  const PipelineSpec& spec_;
  double horizon_;
  double warmup_;
  std::vector<std::uint64_t> fifo_;
  std::vector<StageState> stages_;
  std::priority_queue<Event, std::vector<Event>, std::greater<>> events_;
  std::uint64_t seq_ = 0;
};

}  // namespace

SimReport simulate(const PipelineSpec& p, double horizon_us, std::uint64_t seed) {
  p.validate();
  if (!(horizon_us > 0) || !std::isfinite(horizon_us))
    throw std::invalid_argument("simulation horizon must be a positive time");
  if (p.stages.empty()) {
    SimReport r;
    r.horizon_us = horizon_us;
    return r;
  }
  const double warmup = warmup_window(p, horizon_us);
  if (horizon_us <= warmup)
    throw std::invalid_argument("simulation horizon " + std::to_string(horizon_us) +
                                " us does not exceed the warm-up window of " + std::to_string(warmup) + " us");
  Simulator sim(p, horizon_us, warmup, seed);
  sim.run();
  return sim.report();
}

namespace {

// Half-away-from-zero, so 15.625 prints as 15.63 rather than the binary-tie 15.62.
std::string fixed(double v, int prec) {
  const double scale = std::pow(10.0, prec);
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << std::round(v * scale) / scale;
  return os.str();
}

}  // namespace

std::string report_text(const PipelineSpec& p, const std::optional<SimReport>& sim) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "stage" << std::right << std::setw(10) << "freq_mhz" << std::setw(9)
     << "cc/hash" << std::setw(11) << "T/P MH/s" << std::setw(10) << "replicas" << std::setw(11) << "combined";
  if (sim) os << std::setw(8) << "util";
  os << '\n';
  for (std::size_t i = 0; i < p.stages.size(); ++i) {
    const auto& s = p.stages[i];
    os << std::left << std::setw(12) << s.name << std::right << std::setw(10) << fixed(s.freq_mhz, 1)
       << std::setw(9) << s.cc_per_hash << std::setw(11) << fixed(individual_throughput(s), 2) << std::setw(10)
       << s.replicas << std::setw(11) << fixed(stage_throughput(s), 2);
    if (sim && i < sim->stages.size()) os << std::setw(8) << fixed(sim->stages[i].utilization, 3);
    os << '\n';
  }
  if (!p.stages.empty()) {
    std::size_t limit = 0;
    for (std::size_t i = 1; i < p.stages.size(); ++i)
      if (stage_throughput(p.stages[i]) < stage_throughput(p.stages[limit]) - 1e-9) limit = i;
    os << "chain bound: " << fixed(analytic_bound(p), 2) << " MHash/s (limited by " << p.stages[limit].name << ")\n";
  }
  if (sim && !p.stages.empty()) {
    os << "simulated:   " << fixed(sim->steady_throughput, 3) << " MHash/s over " << fixed(sim->horizon_us - sim->warmup_us, 1)
       << " us after " << fixed(sim->warmup_us, 1) << " us warm-up (bottleneck " << sim->bottleneck << ")\n";
  }
  return os.str();
}

std::string report_json(const PipelineSpec& p, const std::optional<SimReport>& sim) {
  using nlohmann::json;
  json doc;
  doc["fifo_depth"] = p.fifo_depth;
  doc["stages"] = json::array();
  for (const auto& s : p.stages) {
    doc["stages"].push_back({{"name", s.name},
                             {"freq_mhz", s.freq_mhz},
                             {"cc_per_hash", s.cc_per_hash},
                             {"pipeline_depth", s.pipeline_depth},
                             {"replicas", s.replicas},
                             {"individual_mhs", individual_throughput(s)},
                             {"combined_mhs", stage_throughput(s)}});
  }
  doc["chain_bound_mhs"] = analytic_bound(p);
  if (sim) {
    json r;
    r["steady_throughput_mhs"] = sim->steady_throughput;
    r["horizon_us"] = sim->horizon_us;
    r["warmup_us"] = sim->warmup_us;
    r["measured_hashes"] = sim->measured_hashes;
    r["bottleneck"] = sim->bottleneck;
    r["work_conserved"] = sim->work_conserved();
    r["stages"] = json::array();
    for (const auto& s : sim->stages) {
      r["stages"].push_back({{"name", s.name},
                             {"utilization", s.utilization},
                             {"accepted", s.accepted},
                             {"delivered", s.delivered},
                             {"in_flight", s.in_flight},
                             {"fifo_level", s.fifo_level},
                             {"dispatch_per_replica", s.dispatch_per_replica}});
    }
    doc["simulation"] = std::move(r);
  }
  return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& field, const std::string& what) {
  std::string msg = "line " + std::to_string(line);
  if (!field.empty()) msg += ", field '" + field + "'";
  throw SpecParseError(msg + ": " + what);
}

double parse_positive_real(std::size_t line, const std::string& field, const std::string& v) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    parse_fail(line, field, "expected a number, got '" + v + "'");
  }
  if (used != v.size()) parse_fail(line, field, "expected a number, got '" + v + "'");
  if (!(d > 0) || !std::isfinite(d)) parse_fail(line, field, "must be > 0");
  return d;
}

unsigned parse_count(std::size_t line, const std::string& field, const std::string& v, unsigned min) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(line, field, "expected a non-negative integer, got '" + v + "'");
  unsigned long n = 0;
  try {
    n = std::stoul(v);
  } catch (const std::exception&) {
    parse_fail(line, field, "value out of range");
  }
  if (n > std::numeric_limits<unsigned>::max()) parse_fail(line, field, "value out of range");
  if (n < min) parse_fail(line, field, "must be >= " + std::to_string(min));
  return static_cast<unsigned>(n);
}

PipelineSpec parse_text(std::string_view text) {
  PipelineSpec spec;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "fifo_depth") {
      std::string v, extra;
      if (!(ls >> v)) parse_fail(lineno, "fifo_depth", "missing value");
      if (ls >> extra) parse_fail(lineno, "fifo_depth", "unexpected token '" + extra + "'");
      spec.fifo_depth = parse_count(lineno, "fifo_depth", v, 0);
    } else if (keyword == "stage") {
      StageSpec s;
      if (!(ls >> s.name) || s.name.find('=') != std::string::npos) parse_fail(lineno, "name", "missing stage name");
      bool have_freq = false, have_cc = false;
      std::string kv;
      while (ls >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) parse_fail(lineno, kv, "expected key=value");
        const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "freq_mhz") {
          s.freq_mhz = parse_positive_real(lineno, key, val);
          have_freq = true;
        } else if (key == "cc_per_hash") {
          s.cc_per_hash = parse_count(lineno, key, val, 1);
          have_cc = true;
        } else if (key == "pipeline_depth") {
          s.pipeline_depth = parse_count(lineno, key, val, 1);
        } else if (key == "replicas") {
          s.replicas = parse_count(lineno, key, val, 1);
        } else {
          parse_fail(lineno, key, "unknown field");
        }
      }
      if (!have_freq) parse_fail(lineno, "freq_mhz", "required field missing");
      if (!have_cc) parse_fail(lineno, "cc_per_hash", "required field missing");
      spec.stages.push_back(std::move(s));
    } else {
      parse_fail(lineno, "", "unknown directive '" + keyword + "'");
    }
  }
  return spec;
}

PipelineSpec parse_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError(std::string("invalid JSON pipeline spec: ") + e.what());
  }
  PipelineSpec spec;
  auto field = [](const json& obj, const char* key, const std::string& where) -> const json& {
    if (!obj.contains(key)) throw SpecParseError(where + ", field '" + key + "': required field missing");
    return obj.at(key);
  };
  try {
    if (doc.contains("fifo_depth")) spec.fifo_depth = doc.at("fifo_depth").get<unsigned>();
    if (doc.contains("stages")) {
      std::size_t idx = 0;
      for (const auto& js : doc.at("stages")) {
        const std::string where = "stage " + std::to_string(idx++);
        StageSpec s;
        s.name = field(js, "name", where).get<std::string>();
        s.freq_mhz = field(js, "freq_mhz", where).get<double>();
        s.cc_per_hash = field(js, "cc_per_hash", where).get<unsigned>();
        if (js.contains("pipeline_depth")) s.pipeline_depth = js.at("pipeline_depth").get<unsigned>();
        if (js.contains("replicas")) s.replicas = js.at("replicas").get<unsigned>();
        try {
          s.validate();
        } catch (const std::invalid_argument& e) {
          throw SpecParseError(where + ": " + e.what());
        }
        spec.stages.push_back(std::move(s));
      }
    }
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("invalid JSON pipeline spec: ") + e.what());
  }
  return spec;
}

}  // namespace

PipelineSpec parse_pipeline_spec(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

PipelineSpec load_pipeline_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open pipeline spec '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pipeline_spec(buf.str());
}

std::vector<StageSpec> reference_core_stages() {
  return {
      {"blake256", 100, 2, 28, 1},   {"keccak256", 375, 24, 1, 2}, {"cubehash256", 250, 192, 1, 24},
      {"lyra2", 225, 68, 8, 10},     {"skein256", 375, 9, 8, 1},   {"bmw256", 100, 2, 18, 1},
  };
}

PipelineSpec reference_chain_spec() {
  const auto c = reference_core_stages();
  PipelineSpec p;
  p.stages = {c[0], c[1], c[2], c[3], c[4], c[2], c[5]};
  p.stages[2].name = "cubehash256a";
  p.stages[5].name = "cubehash256b";
  return p;
}

}  // namespace lyra2re
