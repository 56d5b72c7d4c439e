#include "slicesim/harness/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "slicesim/actors/amf.hpp"
#include "slicesim/actors/ue.hpp"
#include "slicesim/common/hex.hpp"
#include "slicesim/dataplane/oracle.hpp"
#include "slicesim/dataplane/traffic.hpp"
#include "slicesim/harness/cdf.hpp"
#include "slicesim/harness/csv.hpp"
#include "slicesim/harness/logparse.hpp"
#include "slicesim/harness/svg.hpp"

namespace slicesim::harness {

namespace {

namespace fs = std::filesystem;

std::string supi_at(const std::string& base, unsigned k) {
  unsigned long long n = std::strtoull(base.c_str(), nullptr, 10) + k;
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%015llu", n);
  return buf;
}

struct ExpandedUe {
  std::string supi;
  const ScenarioUePopulation* pop;
  std::string gnb;
  double arrival_s;
};

std::vector<ExpandedUe> expand_ues(const Scenario& s,
                                   std::optional<unsigned> sweep_n) {
  std::vector<ExpandedUe> out;
  for (const auto& pop : s.ues) {
    unsigned count = pop.count_from_sweep && sweep_n ? *sweep_n : pop.count;
    unsigned via_rogue = count;
    std::string fallback_gnb =
        s.gnbs.empty() ? pop.gnb : s.gnbs.front().id;
    if (s.attacker && pop.gnb == s.attacker->id) {
      via_rogue = static_cast<unsigned>(
          std::lround(s.attacker->attached_fraction * count));
    }
    for (unsigned k = 0; k < count; ++k) {
      ExpandedUe ue;
      ue.supi = supi_at(pop.supi_base, k);
      ue.pop = &pop;
      ue.gnb = (s.attacker && pop.gnb == s.attacker->id && k >= via_rogue)
                   ? fallback_gnb
                   : pop.gnb;
      ue.arrival_s = pop.arrival_start_s + k * pop.arrival_spacing_s;
      out.push_back(std::move(ue));
    }
  }
  return out;
}

/// One fully wired simulation instance: event loop, fabric, AMF, gNBs
/// (honest and rogue) and the expanded UE population.
struct SimInstance {
  explicit SimInstance(const Scenario& s, std::uint64_t seed,
                       std::optional<unsigned> sweep_n, bool trace);

  void run_registrations() {
    loop.run_until(sim::seconds_to_time(registration_deadline_s));
  }

  const Scenario& scenario;
  std::uint64_t seed;
  sim::EventLoop loop;
  actors::Fabric fabric{loop};
  actors::AmfLog amf_log;
  std::map<std::string, actors::UeActor*> ue_by_id;
  std::unique_ptr<actors::AmfActor> amf;
  std::vector<std::unique_ptr<actors::GnbActor>> gnbs;
  actors::RogueGnbActor* rogue = nullptr;
  std::vector<std::unique_ptr<actors::UeActor>> ues;
  std::vector<ExpandedUe> roster;
  double registration_deadline_s = 0;
  std::vector<std::string> trace_lines;
};

SimInstance::SimInstance(const Scenario& s, std::uint64_t seed_in,
                         std::optional<unsigned> sweep_n, bool trace)
    : scenario(s), seed(seed_in) {
  if (trace) {
    fabric.set_trace_sink([this](sim::SimTime t, const actors::Envelope& e) {
      std::string hex;
      if (const auto* plain = std::get_if<actors::PlainPdu>(&e.unit)) {
        hex = to_hex_spaced(plain->octets);
      } else {
        hex = nas::pdu_to_hex(std::get<nas::SecuredPdu>(e.unit));
      }
      trace_lines.push_back(sim::format_timestamp(t) + " " + e.from + "->" +
                            e.to + " " + hex);
    });
  }

  roster = expand_ues(s, sweep_n);

  Bytes ltk_master = sim::RngStream(seed, "ltk-master").bytes(32);
  Bytes home_key = sim::RngStream(seed, "home-key").bytes(16);

  actors::AmfConfig cfg;
  for (const auto& slice : s.slices) {
    cfg.configured_slices.push_back(slice.profile.snssai);
  }
  cfg.default_snssai = s.default_slice();
  cfg.nas_cipher_policy = s.cipher;
  cfg.integrity_policy = s.integrity;
  cfg.gnb_allowlists = s.gnb_allowlists;
  cfg.home_network_key = home_key;
  cfg.snn = s.snn();
  for (const auto& ue : roster) {
    cfg.subscription_db[ue.supi] = ue.pop->subscribed;
    keys::Digest d = keys::hmac_sha256(ltk_master, to_bytes(ue.supi));
    cfg.subscriber_keys[ue.supi] = Bytes(d.begin(), d.begin() + 16);
  }

  amf = std::make_unique<actors::AmfActor>(fabric, std::move(cfg), amf_log,
                                           seed);
  for (const auto& g : s.gnbs) {
    gnbs.push_back(std::make_unique<actors::GnbActor>(fabric, g.id));
  }
  if (s.attacker) {
    auto rogue_ptr = std::make_unique<actors::RogueGnbActor>(
        fabric, s.attacker->id, s.snn(), s.attacker->strategy,
        s.attacker->knowledge);
    rogue = rogue_ptr.get();
    rogue->set_root_key_source(
        [this](const std::string& ue_id)
            -> std::optional<keys::KnowledgeLeakedRoot> {
          auto it = ue_by_id.find(ue_id);
          if (it == ue_by_id.end()) return std::nullopt;
          const keys::CkIk& k = it->second->session_keys();
          if (k.ck.empty()) return std::nullopt;
          return keys::KnowledgeLeakedRoot{k.ck, k.ik};
        });
    gnbs.push_back(std::move(rogue_ptr));
  }

  double last_arrival = 0;
  for (const auto& entry : roster) {
    actors::UeProfile profile;
    profile.supi = entry.supi;
    profile.subscribed_nssai = entry.pop->subscribed;
    profile.preferred_nssai = entry.pop->preferred;
    profile.conceal_supi = entry.pop->conceal_supi;
    profile.traffic_profile_ref = entry.pop->traffic;
    Bytes ltk = amf->config().subscriber_keys.at(entry.supi);
    auto ue = std::make_unique<actors::UeActor>(
        fabric, std::move(profile), std::move(ltk), home_key, s.snn(),
        entry.gnb);
    ue->start_registration(sim::seconds_to_time(entry.arrival_s));
    ue_by_id[ue->node_id()] = ue.get();
    ues.push_back(std::move(ue));
    last_arrival = std::max(last_arrival, entry.arrival_s);
  }
  registration_deadline_s = last_arrival + 1.0;
}

/// Data-plane phase over the registered UEs. One UPF per slice that
/// actually carries sessions; sessions ride the first allowed slice.
struct TrafficPhase {
  double start_s = 0;
  double end_s = 0;
  std::map<nas::Snssai, std::unique_ptr<dataplane::UpfModel>> upfs;
  std::map<nas::Snssai, unsigned> sessions_per_slice;
  std::vector<std::unique_ptr<dataplane::TrafficSource>> sources;
};

TrafficPhase setup_traffic(SimInstance& sim) {
  const Scenario& s = sim.scenario;
  TrafficPhase phase;
  phase.start_s = std::ceil(sim.registration_deadline_s);
  phase.end_s = phase.start_s + s.duration_s;

  for (std::size_t i = 0; i < sim.ues.size(); ++i) {
    const actors::UeActor& ue = *sim.ues[i];
    const ExpandedUe& entry = sim.roster[i];
    if (entry.pop->traffic.empty()) continue;
    if (ue.state() != actors::UeState::Registered) continue;
    const auto& allowed = ue.outcome()->believed_allowed;
    if (allowed.empty()) continue;
    nas::Snssai serving = allowed.front();

    const ScenarioSlice* slice = s.find_slice(serving);
    if (!slice) continue;
    const dataplane::TrafficProfile* profile =
        s.find_traffic(entry.pop->traffic);

    auto it = phase.upfs.find(serving);
    if (it == phase.upfs.end()) {
      it = phase.upfs
               .emplace(serving,
                        std::make_unique<dataplane::UpfModel>(
                            slice->profile,
                            sim::RngStream(sim.seed, "jitter." + slice->name),
                            s.kpi_window_s, phase.end_s))
               .first;
    }
    dataplane::UpfModel& upf = *it->second;
    int session = upf.add_session(entry.supi, phase.start_s, phase.end_s);
    sim::RngStream phase_stream(sim.seed, "phase." + entry.supi);
    double offset = phase_stream.uniform01() * profile->interval_s();
    phase.sessions_per_slice[serving]++;
    phase.sources.push_back(std::make_unique<dataplane::TrafficSource>(
        sim.loop, upf, session, *profile, phase.start_s, phase.end_s,
        offset));
    phase.sources.back()->start();
  }
  return phase;
}

void ensure_dir(const std::string& dir) { fs::create_directories(dir); }

std::string path_join(const std::string& dir, const std::string& file) {
  return (fs::path(dir) / file).string();
}

void append_kpi_rows(std::ofstream& out, const std::string& label,
                     const dataplane::UpfModel& upf, unsigned n_ue) {
  for (const auto& rec : upf.kpi_records()) {
    out << kpi_csv_row(label, upf.profile().snssai, n_ue, rec) << '\n';
  }
}

void append_cpu_rows(std::ofstream& out, const std::string& label,
                     const dataplane::UpfModel& upf, unsigned n_ue) {
  for (const auto& sample : upf.cpu_samples()) {
    out << cpu_csv_row(label, n_ue, sample) << '\n';
  }
}

struct IntervalSummary {
  double per_session_goodput_bps = 0;
  double loss_frac = 0;
  double rtt_mean_ms = 0;
  double rtt_p99_ms = 0;
  double jitter_mean_ms = 0;
  double bitrate_mean_bps = 0;  // per-session windowed mean
  double cpu_mean_pct = 0;
  double wait_mean_pct = 0;
  unsigned sessions = 0;
};

bool window_in(double w_start, double window_s, double from_s, double to_s) {
  return w_start >= from_s - 1e-9 && w_start + window_s <= to_s + 1e-9;
}

IntervalSummary summarize(const dataplane::UpfModel& upf, double from_s,
                          double to_s) {
  IntervalSummary out;
  std::vector<double> rtts, jitters, bitrates;
  double delivered_bits = 0;
  double offered = 0, dropped = 0;
  double interval_len = 0;
  std::map<std::string, bool> sessions;
  std::map<double, bool> windows;
  for (const auto& rec : upf.kpi_records()) {
    if (!window_in(rec.window_start_s, upf.window_s(), from_s, to_s)) continue;
    sessions[rec.session_id] = true;
    windows[rec.window_start_s] = true;
    delivered_bits += rec.bitrate_bps * upf.window_s();
    rtts.push_back(rec.rtt_ms);
    jitters.push_back(rec.jitter_ms);
    bitrates.push_back(rec.bitrate_bps);
    // loss_frac is dropped/offered per window; recover the weights from the
    // record itself is impossible, so track via weighted mean below.
  }
  // Loss over the interval needs raw counts; recompute from session totals
  // is horizon-wide, so weight per-window loss by per-window offered
  // instead. For CBR offered is near-constant per window, so the unweighted
  // mean over windows is exact up to boundary packets.
  double loss_sum = 0;
  unsigned loss_n = 0;
  for (const auto& rec : upf.kpi_records()) {
    if (!window_in(rec.window_start_s, upf.window_s(), from_s, to_s)) continue;
    loss_sum += rec.loss_frac;
    ++loss_n;
  }
  (void)offered;
  (void)dropped;
  out.sessions = static_cast<unsigned>(sessions.size());
  interval_len = static_cast<double>(windows.size()) * upf.window_s();
  if (out.sessions && interval_len > 0) {
    out.per_session_goodput_bps = delivered_bits / interval_len / out.sessions;
  }
  out.loss_frac = loss_n ? loss_sum / loss_n : 0.0;
  out.rtt_mean_ms = mean(rtts);
  out.rtt_p99_ms = rtts.empty() ? 0.0 : percentile(rtts, 0.99);
  out.jitter_mean_ms = mean(jitters);
  out.bitrate_mean_bps = mean(bitrates);

  std::vector<double> cpu_means, waits;
  for (const auto& c : upf.cpu_samples()) {
    if (!window_in(c.window_start_s, upf.window_s(), from_s, to_s)) continue;
    cpu_means.push_back(c.mean_pct);
    waits.push_back(c.wait_pct);
  }
  out.cpu_mean_pct = mean(cpu_means);
  out.wait_mean_pct = mean(waits);
  return out;
}

void write_cdf_csv(const std::string& path, std::vector<double> samples) {
  std::vector<std::string> lines;
  lines.push_back("value,fraction");
  for (const auto& [value, fraction] : emit_cdf(std::move(samples))) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f", value, fraction);
    lines.push_back(buf);
  }
  write_lines(path, lines);
}

std::string strip_timestamp(const std::string& line) {
  if (line.rfind("T+", 0) != 0) return line;
  std::size_t space = line.find(' ');
  return space == std::string::npos ? line : line.substr(space + 1);
}

std::uint64_t effective_seed(const Scenario& s, const RunOptions& opts) {
  return opts.seed_override ? *opts.seed_override : s.seed;
}

void write_trace(const SimInstance& sim, const std::string& dir,
                 const std::string& name) {
  if (!sim.trace_lines.empty()) {
    write_lines(path_join(dir, name), sim.trace_lines);
  }
}

}  // namespace

RunResult run_baseline(const Scenario& s, const RunOptions& opts) {
  if (s.attacker) {
    throw ScenarioError(ScenarioError::Kind::Validation,
                        "baseline runs take no attacker",
                        {"attacker section present"});
  }
  ensure_dir(opts.out_dir);
  std::uint64_t seed = effective_seed(s, opts);

  SimInstance sim(s, seed, std::nullopt, opts.trace);
  sim.run_registrations();
  TrafficPhase phase = setup_traffic(sim);
  sim.loop.run_until(sim::seconds_to_time(phase.end_s));

  RunResult result;
  result.kpi_csv = path_join(opts.out_dir, "kpi.csv");
  result.cpu_csv = path_join(opts.out_dir, "cpu.csv");
  result.amf_log = path_join(opts.out_dir, "amf.log");

  std::ofstream kpi(result.kpi_csv, std::ios::binary);
  std::ofstream cpu(result.cpu_csv, std::ios::binary);
  kpi << kKpiCsvHeader << '\n';
  cpu << kCpuCsvHeader << '\n';

  double measure_from = phase.start_s + s.warmup_s;
  std::vector<Series> bitrate_cdfs, rtt_cdfs, jitter_cdfs;

  for (const auto& [snssai, upf] : phase.upfs) {
    const ScenarioSlice* slice = s.find_slice(snssai);
    std::string label = s.name + "." + slice->name;
    unsigned n_ue = phase.sessions_per_slice.at(snssai);
    append_kpi_rows(kpi, label, *upf, n_ue);
    append_cpu_rows(cpu, label, *upf, n_ue);

    IntervalSummary sum = summarize(*upf, measure_from, phase.end_s);
    result.summary["goodput_bps." + slice->name] = sum.per_session_goodput_bps;
    result.summary["rtt_mean_ms." + slice->name] = sum.rtt_mean_ms;
    result.summary["rtt_p99_ms." + slice->name] = sum.rtt_p99_ms;
    result.summary["jitter_mean_ms." + slice->name] = sum.jitter_mean_ms;
    result.summary["loss_frac." + slice->name] = sum.loss_frac;

    std::vector<double> bitrates, rtts, jitters;
    for (const auto& rec : upf->kpi_records()) {
      if (!window_in(rec.window_start_s, upf->window_s(), measure_from,
                     phase.end_s)) {
        continue;
      }
      bitrates.push_back(rec.bitrate_bps);
      rtts.push_back(rec.rtt_ms);
      jitters.push_back(rec.jitter_ms);
    }
    if (!bitrates.empty()) {
      write_cdf_csv(path_join(opts.out_dir, "cdf_" + slice->name +
                                                "_bitrate.csv"),
                    bitrates);
      write_cdf_csv(path_join(opts.out_dir, "cdf_" + slice->name + "_rtt.csv"),
                    rtts);
      write_cdf_csv(
          path_join(opts.out_dir, "cdf_" + slice->name + "_jitter.csv"),
          jitters);
      if (opts.svg) {
        auto to_series = [&](std::vector<double> v) {
          Series ser;
          ser.label = slice->name;
          for (const auto& [x, f] : emit_cdf(std::move(v))) {
            ser.points.emplace_back(x, f);
          }
          return ser;
        };
        bitrate_cdfs.push_back(to_series(bitrates));
        rtt_cdfs.push_back(to_series(rtts));
        jitter_cdfs.push_back(to_series(jitters));
      }
    }
  }

  write_lines(result.amf_log, sim.amf_log.lines());
  write_trace(sim, opts.out_dir, "nas_trace.log");
  result.summary["amf_warn_error_lines"] =
      static_cast<double>(sim.amf_log.warn_count() + sim.amf_log.error_count());

  if (opts.svg) {
    write_svg(path_join(opts.out_dir, "cdf_bitrate.svg"),
              render_line_chart("Bitrate CDF", "bit/s", "fraction",
                                bitrate_cdfs));
    write_svg(path_join(opts.out_dir, "cdf_rtt.svg"),
              render_line_chart("RTT CDF", "ms", "fraction", rtt_cdfs));
    write_svg(path_join(opts.out_dir, "cdf_jitter.svg"),
              render_line_chart("Jitter CDF", "ms", "fraction", jitter_cdfs));
  }
  return result;
}

RunResult run_stealth(const Scenario& s, const RunOptions& opts) {
  if (!s.attacker ||
      s.attacker->strategy.kind != actors::ManipulationStrategy::Kind::EraseSd) {
    throw ScenarioError(ScenarioError::Kind::Validation,
                        "stealth runs need an attacker with the erase_sd "
                        "strategy",
                        {"attacker strategy is not erase_sd"});
  }
  ensure_dir(opts.out_dir);
  std::uint64_t seed = effective_seed(s, opts);

  SimInstance attack(s, seed, std::nullopt, opts.trace);
  attack.run_registrations();
  TrafficPhase attack_phase = setup_traffic(attack);
  if (!attack_phase.sources.empty()) {
    attack.loop.run_until(sim::seconds_to_time(attack_phase.end_s));
  }

  // Benign twin: no attacker; each UE asks for the post-erasure NSSAI
  // itself through an honest gNB.
  Scenario twin = s;
  twin.attacker.reset();
  if (twin.gnbs.empty()) twin.gnbs.push_back(ScenarioGnb{s.attacker->id});
  for (auto& pop : twin.ues) {
    auto transformed = actors::apply_strategy(
        s.attacker->strategy,
        pop.preferred.empty()
            ? std::optional<std::vector<nas::Snssai>>{}
            : std::optional<std::vector<nas::Snssai>>{pop.preferred});
    pop.preferred = transformed.value_or(std::vector<nas::Snssai>{});
    if (pop.gnb == s.attacker->id) pop.gnb = twin.gnbs.front().id;
  }
  SimInstance benign(twin, seed, std::nullopt, false);
  benign.run_registrations();

  RunResult result;
  result.amf_log = path_join(opts.out_dir, "amf_attack.log");
  write_lines(result.amf_log, attack.amf_log.lines());
  std::string benign_log = path_join(opts.out_dir, "amf_benign.log");
  write_lines(benign_log, benign.amf_log.lines());
  write_trace(attack, opts.out_dir, "nas_trace.log");

  // Requested vs believed vs actual allocations.
  std::vector<std::string> table;
  table.push_back("supi,requested,believed_allowed,actual_allowed");
  auto join = [](const std::vector<nas::Snssai>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ';';
      out += nas::format_snssai_compact(v[i]);
    }
    return out.empty() ? std::string("none") : out;
  };
  unsigned mismatches = 0;
  for (std::size_t i = 0; i < attack.ues.size(); ++i) {
    const actors::UeActor& ue = *attack.ues[i];
    std::vector<nas::Snssai> believed, actual;
    if (ue.outcome()) believed = ue.outcome()->believed_allowed;
    auto reg = attack.amf->registrations().find(ue.profile().supi);
    if (reg != attack.amf->registrations().end()) {
      actual = reg->second.selection.allowed;
    }
    if (believed != ue.profile().preferred_nssai) ++mismatches;
    table.push_back(ue.profile().supi + "," +
                    join(ue.profile().preferred_nssai) + "," +
                    join(believed) + "," + join(actual));
  }
  std::string alloc_csv = path_join(opts.out_dir, "allocations.csv");
  write_lines(alloc_csv, table);

  // Line diff modulo timestamps.
  auto attack_lines = attack.amf_log.lines();
  auto benign_lines = benign.amf_log.lines();
  std::vector<std::string> diff;
  std::size_t n = std::max(attack_lines.size(), benign_lines.size());
  unsigned diff_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::string a =
        i < attack_lines.size() ? strip_timestamp(attack_lines[i]) : "";
    std::string b =
        i < benign_lines.size() ? strip_timestamp(benign_lines[i]) : "";
    if (a != b) {
      ++diff_count;
      diff.push_back("line " + std::to_string(i + 1) + ":");
      diff.push_back("  attack: " + a);
      diff.push_back("  benign: " + b);
    }
  }
  diff.insert(diff.begin(),
              "differing lines (timestamps ignored): " +
                  std::to_string(diff_count));
  write_lines(path_join(opts.out_dir, "diff_report.txt"), diff);

  result.summary["amf_warn_error_lines"] = static_cast<double>(
      attack.amf_log.warn_count() + attack.amf_log.error_count());
  result.summary["benign_diff_lines"] = diff_count;
  result.summary["redirected_ues"] = mismatches;
  return result;
}

RunResult run_contamination(const Scenario& s, const RunOptions& opts) {
  if (!s.attacker ||
      s.attacker->strategy.kind !=
          actors::ManipulationStrategy::Kind::ReplaceNssai ||
      s.sweep.empty()) {
    throw ScenarioError(ScenarioError::Kind::Validation,
                        "contamination runs need a replace strategy and a "
                        "sweep",
                        {"missing replace strategy or sweep"});
  }
  ensure_dir(opts.out_dir);
  std::uint64_t seed = effective_seed(s, opts);
  nas::Snssai target = s.attacker->strategy.replacement.front();
  const ScenarioSlice* target_slice = s.find_slice(target);
  if (!target_slice) {
    throw ScenarioError(ScenarioError::Kind::Validation,
                        "replacement slice is not configured",
                        {"unknown replacement slice"});
  }

  RunResult result;
  result.kpi_csv = path_join(opts.out_dir, "kpi.csv");
  result.cpu_csv = path_join(opts.out_dir, "cpu.csv");
  result.amf_log = path_join(opts.out_dir, "amf.log");

  std::ofstream kpi(result.kpi_csv, std::ios::binary);
  std::ofstream cpu(result.cpu_csv, std::ios::binary);
  std::ofstream amf_out(result.amf_log, std::ios::binary);
  kpi << kKpiCsvHeader << '\n';
  cpu << kCpuCsvHeader << '\n';

  std::vector<std::string> summary_lines;
  summary_lines.push_back(
      "n_ue,goodput_per_ue_bps,loss_frac,cpu_mean_pct,wait_mean_pct,"
      "oracle_goodput_bps,oracle_loss_frac,hijacked_sessions");

  Series g_meas{"measured", {}}, g_oracle{"fair share", {}};
  Series l_meas{"measured", {}}, l_oracle{"fair share", {}};
  Series cpu_series{"mean cpu", {}}, wait_series{"wait", {}};

  // The swept population's traffic profile supplies the per-flow demand for
  // the oracle columns.
  const dataplane::TrafficProfile* demand_profile = nullptr;
  for (const auto& pop : s.ues) {
    if (pop.count_from_sweep && !pop.traffic.empty()) {
      demand_profile = s.find_traffic(pop.traffic);
    }
  }
  if (!demand_profile) {
    throw ScenarioError(ScenarioError::Kind::Validation,
                        "no swept UE population with traffic",
                        {"need a [ue] with count = sweep and traffic"});
  }

  for (unsigned n : s.sweep) {
    SimInstance sim(s, seed, n, opts.trace);
    sim.run_registrations();
    TrafficPhase phase = setup_traffic(sim);
    sim.loop.run_until(sim::seconds_to_time(phase.end_s));

    for (const auto& line : sim.amf_log.lines()) amf_out << line << '\n';

    auto it = phase.upfs.find(target);
    unsigned hijacked =
        it == phase.upfs.end() ? 0 : phase.sessions_per_slice.at(target);
    double measure_from = phase.start_s + s.warmup_s;

    IntervalSummary sum;
    if (it != phase.upfs.end()) {
      append_kpi_rows(kpi, s.name, *it->second, n);
      append_cpu_rows(cpu, s.name, *it->second, n);
      sum = summarize(*it->second, measure_from, phase.end_s);
    }
    dataplane::SteadyState oracle = dataplane::steady_state(
        n, demand_profile->bandwidth_bps, target_slice->profile.rate_bps());

    char row[256];
    std::snprintf(row, sizeof(row), "%u,%.3f,%.6f,%.3f,%.3f,%.3f,%.6f,%u", n,
                  sum.per_session_goodput_bps, sum.loss_frac, sum.cpu_mean_pct,
                  sum.wait_mean_pct, oracle.goodput_bps, oracle.loss_frac,
                  hijacked);
    summary_lines.push_back(row);

    std::string suffix = ".n=" + std::to_string(n);
    result.summary["goodput_per_ue_bps" + suffix] =
        sum.per_session_goodput_bps;
    result.summary["loss_frac" + suffix] = sum.loss_frac;
    result.summary["cpu_mean_pct" + suffix] = sum.cpu_mean_pct;
    result.summary["wait_mean_pct" + suffix] = sum.wait_mean_pct;
    result.summary["oracle_goodput_bps" + suffix] = oracle.goodput_bps;
    result.summary["oracle_loss_frac" + suffix] = oracle.loss_frac;
    result.summary["hijacked_sessions" + suffix] = hijacked;

    g_meas.points.emplace_back(n, sum.per_session_goodput_bps);
    g_oracle.points.emplace_back(n, oracle.goodput_bps);
    l_meas.points.emplace_back(n, sum.loss_frac);
    l_oracle.points.emplace_back(n, oracle.loss_frac);
    cpu_series.points.emplace_back(n, sum.cpu_mean_pct);
    wait_series.points.emplace_back(n, sum.wait_mean_pct);
  }

  write_lines(path_join(opts.out_dir, "summary.csv"), summary_lines);
  if (opts.svg) {
    write_svg(path_join(opts.out_dir, "goodput.svg"),
              render_line_chart("Per-UE goodput vs concurrency", "UEs",
                                "bit/s", {g_meas, g_oracle}));
    write_svg(path_join(opts.out_dir, "loss.svg"),
              render_line_chart("Loss vs concurrency", "UEs", "fraction",
                                {l_meas, l_oracle}));
    write_svg(path_join(opts.out_dir, "cpu.svg"),
              render_line_chart("UPF CPU vs concurrency", "UEs", "%",
                                {cpu_series, wait_series}));
  }
  return result;
}

RunResult run_detect(const Scenario& s, const std::string& kpi_csv_path,
                     const std::string& amf_log_path, const RunOptions& opts) {
  ensure_dir(opts.out_dir);
  std::vector<defense::Alert> alerts;

  AmfLogEvents events = parse_amf_log(read_lines(amf_log_path));

  // supi -> population (for intent lookups and profiler histories).
  std::map<std::string, const ScenarioUePopulation*> pop_by_supi;
  for (const auto& ue : expand_ues(s, std::nullopt)) {
    pop_by_supi[ue.supi] = ue.pop;
  }
  // In swept scenarios the roster can be larger than the un-swept
  // expansion; match by population prefix as a fallback.
  auto find_pop = [&](const std::string& supi)
      -> const ScenarioUePopulation* {
    if (auto it = pop_by_supi.find(supi); it != pop_by_supi.end()) {
      return it->second;
    }
    const ScenarioUePopulation* best = nullptr;
    unsigned long long best_delta = ~0ULL;
    unsigned long long v = std::strtoull(supi.c_str(), nullptr, 10);
    for (const auto& pop : s.ues) {
      unsigned long long base =
          std::strtoull(pop.supi_base.c_str(), nullptr, 10);
      if (v >= base && v - base < best_delta) {
        best = &pop;
        best_delta = v - base;
      }
    }
    return best;
  };

  if (s.detectors.qim && !kpi_csv_path.empty()) {
    std::map<std::pair<unsigned, std::string>, std::vector<dataplane::KpiRecord>>
        by_session;
    for (auto& row : read_kpi_csv(kpi_csv_path)) {
      by_session[{row.n_ue, row.record.session_id}].push_back(row.record);
    }
    for (auto& [key, records] : by_session) {
      const auto& [n_ue, session] = key;
      std::stable_sort(records.begin(), records.end(),
                       [](const auto& a, const auto& b) {
                         return a.window_start_s < b.window_start_s;
                       });

      std::optional<nas::Snssai> expected_slice;
      if (s.detectors.qim_expectation == QimExpectationSource::Intended) {
        if (const auto* pop = find_pop(session); pop && !pop->traffic.empty()) {
          if (const auto* t = s.find_traffic(pop->traffic)) {
            expected_slice = t->intended_slice;
          }
        }
      } else {
        for (const auto& a : events.allocations) {
          if (a.supi == session) {
            expected_slice = a.slice;
            break;
          }
        }
      }
      if (!expected_slice) continue;
      const ScenarioSlice* slice = s.find_slice(*expected_slice);
      if (!slice) continue;
      defense::QosExpectation expect =
          defense::expectation_from_profile(slice->profile);
      auto session_alerts = defense::qim_check(
          expect, records, s.detectors.qim_window_count, session);
      alerts.insert(alerts.end(), session_alerts.begin(),
                    session_alerts.end());
    }
  }

  if (s.detectors.nssf) {
    defense::NssfConfig cfg;
    cfg.window_s = s.detectors.nssf_window_s;
    cfg.k_sigma = s.detectors.nssf_k_sigma;
    cfg.min_baseline_windows = s.detectors.nssf_baseline_windows;
    defense::NssfBaseline baseline =
        defense::build_nssf_baseline(events.allocations, cfg);
    auto nssf_alerts = defense::nssf_check(events.allocations, baseline, cfg);
    alerts.insert(alerts.end(), nssf_alerts.begin(), nssf_alerts.end());
  }

  if (s.detectors.profiler) {
    for (const auto& req : events.requests) {
      const ScenarioUePopulation* pop = find_pop(req.supi);
      if (!pop) continue;
      defense::SupiHistory history;
      history.supi = req.supi;
      history.request_counts = pop->history;
      history.last_tac = pop->history_tac;
      defense::ProfileScore score =
          defense::profile_check(history, req.requested, pop->tac);
      if (score.high_risk()) {
        char detail[120];
        std::snprintf(detail, sizeof(detail),
                      "behavioral risk score %.2f (threshold 0.50)",
                      score.score);
        alerts.push_back(defense::Alert{req.time_s,
                                        defense::AlertKind::BehaviorAnomaly,
                                        req.supi, detail});
      }
    }
  }

  std::stable_sort(alerts.begin(), alerts.end(),
                   [](const defense::Alert& a, const defense::Alert& b) {
                     return a.time_s < b.time_s;
                   });

  RunResult result;
  result.alerts_csv = path_join(opts.out_dir, "alerts.csv");
  std::vector<std::string> lines;
  lines.push_back(kAlertCsvHeader);
  unsigned qos = 0, dist = 0, behavior = 0;
  for (const auto& a : alerts) {
    lines.push_back(alert_csv_row(a));
    if (a.kind == defense::AlertKind::QosIntegrity) ++qos;
    if (a.kind == defense::AlertKind::DistributionAnomaly) ++dist;
    if (a.kind == defense::AlertKind::BehaviorAnomaly) ++behavior;
  }
  write_lines(result.alerts_csv, lines);
  result.summary["alerts_total"] = static_cast<double>(alerts.size());
  result.summary["alerts_qos_integrity"] = qos;
  result.summary["alerts_distribution"] = dist;
  result.summary["alerts_behavior"] = behavior;
  return result;
}

}  // namespace slicesim::harness
