// Copyright 2026 The milc-simd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// milc-simd: verification, benchmarking, operation counts and the speedup
// model from the command line.
//
// Exit status: 0 success, 1 verification failure, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "milc/bench/harness.hpp"
#include "milc/bench/report.hpp"
#include "milc/memory/lattice.hpp"
#include "milc/model/perf_model.hpp"
#include "milc/model/reference_io.hpp"
#include "milc/simd/instruction_mix.hpp"
#include "milc/su3/flop_count.hpp"
#include "milc/verify/suite.hpp"

namespace {

using namespace milc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

// Raised for any user-input problem; maps to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string precision;  // empty: subcommand default
  std::string backend;    // empty: subcommand default
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--precision", c.precision, "single or double")
      ->check(CLI::IsMember({"single", "double"}));
  sub->add_option("--backend", c.backend, "scalar or vector")
      ->check(CLI::IsMember({"scalar", "vector"}));
  sub->add_option("--format", c.format, "csv, table or json-lines")
      ->check(CLI::IsMember({"csv", "table", "json-lines"}))
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "seed for random operands")
      ->capture_default_str();
  sub->add_option("--out", c.out, "write to this file instead of stdout");
}

std::string num(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::vector<Precision> precisions(const Common& c,
                                  std::vector<Precision> fallback) {
  if (c.precision == "single") return {Precision::kSingle};
  if (c.precision == "double") return {Precision::kDouble};
  return fallback;
}

std::vector<Routine> parse_routines(const std::vector<std::string>& names,
                                    std::vector<Routine> fallback) {
  if (names.empty()) return fallback;
  std::vector<Routine> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.assign(kAllRoutines.begin(), kAllRoutines.end());
      continue;
    }
    const auto r = parse_routine(n);
    if (!r) throw InputError("unknown routine '" + n + "'");
    out.push_back(*r);
  }
  return out;
}

bench::Format format_of(const Common& c) { return *bench::parse_format(c.format); }

// A table: header plus rows of cells, printed in any of the three formats.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // Parallel to rows: true where the cell is numeric (unquoted in JSON).
  std::vector<bool> numeric;
};

void print(std::ostream& os, const Table& t, bench::Format f) {
  switch (f) {
    case bench::Format::kCsv:
      for (std::size_t c = 0; c < t.header.size(); ++c) {
        os << t.header[c] << (c + 1 < t.header.size() ? ',' : '\n');
      }
      for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
          os << r[c] << (c + 1 < r.size() ? ',' : '\n');
        }
      }
      break;
    case bench::Format::kTable: {
      std::vector<std::size_t> w(t.header.size());
      for (std::size_t c = 0; c < w.size(); ++c) w[c] = t.header[c].size();
      for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c + 1 < cells.size()) {
            os << cells[c] << std::string(w[c] - cells[c].size() + 2, ' ');
          } else {
            os << cells[c] << '\n';
          }
        }
      };
      line(t.header);
      std::vector<std::string> rule;
      for (auto n : w) rule.emplace_back(n, '-');
      line(rule);
      for (const auto& r : t.rows) line(r);
      break;
    }
    case bench::Format::kJsonLines:
      for (const auto& r : t.rows) {
        nlohmann::ordered_json j;
        for (std::size_t c = 0; c < r.size(); ++c) {
          if (c < t.numeric.size() && t.numeric[c] && !r[c].empty()) {
            j[t.header[c]] = nlohmann::json::parse(r[c]);
          } else {
            j[t.header[c]] = r[c];
          }
        }
        os << j.dump() << '\n';
      }
      break;
  }
}

// Destination stream for --out.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> routines;
  std::uint64_t trials = 10000;
  bool inject_fault = false;
  bool identity = false;
};

int cmd_verify(const Common& c, const VerifyArgs& a) {
  verify::VerifyConfig cfg;
  cfg.routines = parse_routines(a.routines, {});
  cfg.precisions = precisions(c, {Precision::kSingle, Precision::kDouble});
  cfg.trials = a.trials;
  cfg.seed = c.seed;
  cfg.identity_inputs = a.identity;
  cfg.inject_fault = a.inject_fault;
  if (cfg.trials < 1) throw InputError("--trials must be >= 1");
  const bool scalar_only = c.backend == "scalar";

  std::vector<verify::CheckResult> results;
  for (const auto& r : verify::run_verify(cfg)) {
    const bool needs_vector = r.check == verify::CheckKind::kBackend ||
                              r.check == verify::CheckKind::kAlignment;
    if (scalar_only && needs_vector) continue;
    results.push_back(r);
  }

  Table t;
  t.header = {"check",     "routine",   "precision",   "trials",
              "max_error", "tolerance", "worst_trial", "worst_component",
              "status"};
  t.numeric = {false, false, false, true, true, true, true, true, false};
  bool ok = true;
  for (const auto& r : results) {
    t.rows.push_back({std::string(verify::check_name(r.check)),
                      std::string(routine_name(r.routine)),
                      to_string(r.precision), std::to_string(r.trials),
                      num("%.6g", r.max_error), num("%.6g", r.tolerance),
                      std::to_string(r.worst_trial),
                      std::to_string(r.worst_component),
                      r.passed ? "pass" : "FAIL"});
    if (!r.passed) {
      ok = false;
      std::cerr << "verify: " << verify::check_name(r.check) << ' '
                << routine_name(r.routine) << ' ' << to_string(r.precision)
                << ": error " << num("%.6g", r.max_error) << " > tolerance "
                << num("%.6g", r.tolerance) << " at seed " << c.seed
                << " trial " << r.worst_trial << " component "
                << r.worst_component << '\n';
    }
  }
  Output out(c.out);
  print(out.stream(), t, format_of(c));
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> routines;
  std::string mode = "hot";
  std::string alignment = "aligned";
  std::optional<std::uint64_t> reps;
  std::string dims = "8x4x4x4";
  std::uint64_t warmup = 3;
  double min_time = 0.010;
  bool speedup = false;
};

int cmd_bench(const Common& c, const BenchArgs& a) {
  bench::BenchConfig base;
  base.mode = *bench::parse_mode(a.mode);
  base.alignment = *bench::parse_alignment(a.alignment);
  base.warmup = a.warmup;
  base.min_time_s = a.min_time;
  base.seed = c.seed;
  if (base.mode == bench::Mode::kStreaming) {
    base.dims = parse_dims(a.dims);
    base.repetitions = a.reps.value_or(1);
  } else {
    base.repetitions = a.reps.value_or(bench::kDefaultHotRepetitions);
  }
  bench::validate(base);

  std::vector<BackendKind> backends{BackendKind::kScalar, BackendKind::kVector};
  if (!c.backend.empty()) backends = {*parse_backend(c.backend)};
  std::vector<bench::TimingRecord> records;
  std::vector<std::pair<bench::TimingRecord, bench::TimingRecord>> pairs;
  for (Routine r : parse_routines(a.routines, {Routine::kMultSu3MatVec})) {
    for (Precision p : precisions(c, {Precision::kDouble})) {
      std::optional<bench::TimingRecord> ref;
      for (BackendKind b : backends) {
        bench::BenchConfig cfg = base;
        cfg.routine = r;
        cfg.precision = p;
        cfg.backend = b;
        records.push_back(bench::run(cfg));
        if (b == BackendKind::kScalar) ref = records.back();
        if (b == BackendKind::kVector && ref) pairs.emplace_back(*ref, records.back());
      }
    }
  }
  Output out(c.out);
  bench::write_records(out.stream(), records, format_of(c));
  if (a.speedup && !pairs.empty()) {
    if (format_of(c) != bench::Format::kJsonLines) out.stream() << '\n';
    bench::write_speedups(out.stream(), bench::speedup_table(pairs), format_of(c));
  }
  return kExitOk;
}

// ---- flops ----------------------------------------------------------------

int cmd_flops(const Common& c, const std::vector<std::string>& routines) {
  Table t;
  t.header = {"routine",     "real_mults", "real_adds",   "moves",
              "shuffles",    "precision",  "lane_add",    "lane_mul",
              "lane_mov",    "lane_shuffle_other"};
  t.numeric = {false, true, true, true, true, false, true, true, true, true};
  for (Routine r : parse_routines(routines, {kAllRoutines.begin(), kAllRoutines.end()})) {
    const FlopCount f = flop_count(r);
    for (Precision p : precisions(c, {Precision::kDouble, Precision::kSingle})) {
      const auto m = simd::instruction_mix(r, p);
      t.rows.push_back({std::string(routine_name(r)),
                        std::to_string(f.real_mults), std::to_string(f.real_adds),
                        std::to_string(f.moves), std::to_string(f.shuffles),
                        to_string(p), std::to_string(m.add + m.sub),
                        std::to_string(m.mul), std::to_string(m.mov),
                        std::to_string(m.shuffle + m.logic)});
    }
  }
  Output out(c.out);
  print(out.stream(), t, format_of(c));
  return kExitOk;
}

// ---- model ----------------------------------------------------------------

struct ModelArgs {
  std::string input;
  std::string mix;
  std::optional<double> normal_accel;
  std::optional<double> accel_accel;
  double plain = 0.0;
  double noncomp = 0.0;
  double comm = 0.0;
  std::vector<double> sweep;
  std::string target = "comm";
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

int cmd_model(const Common& c, const ModelArgs& a) {
  std::vector<model::Scenario> scenarios;
  if (!a.input.empty()) {
    auto in = open_input(a.input);
    scenarios = model::parse_scenarios(in);
  }
  if (a.normal_accel || a.accel_accel) {
    if (!a.normal_accel || !a.accel_accel) {
      throw InputError("--normal and --accel must be given together");
    }
    model::Scenario s;
    s.name = "cli";
    s.normal = {*a.normal_accel, a.plain, a.noncomp, a.comm};
    s.accel = {*a.accel_accel, a.plain, a.noncomp, a.comm};
    scenarios.push_back(s);
  }
  std::vector<model::InstructionMix> mixes;
  if (!a.mix.empty()) {
    auto in = open_input(a.mix);
    for (const auto& row : model::mix_rows(model::parse_csv(in))) {
      if (row.mix) mixes.push_back(*row.mix);
    }
  }
  if (scenarios.empty() && mixes.empty()) {
    throw InputError("model needs --input, --mix or --normal/--accel");
  }
  const auto target = a.target == "comm" ? model::OverheadTarget::kComm
                                         : model::OverheadTarget::kNonComp;
  std::vector<Table> tables;
  if (!scenarios.empty()) {
    Table t;
    t.header = {"scenario", "overhead_s", "target", "normal_total_s",
                "accel_total_s", "speedup"};
    t.numeric = {false, true, false, true, true, true};
    std::vector<double> sweep = a.sweep.empty() ? std::vector<double>{0.0} : a.sweep;
    for (const auto& s : scenarios) {
      const auto curve = model::degradation_curve(s.normal, s.accel, sweep, target);
      for (std::size_t i = 0; i < sweep.size(); ++i) {
        const double extra = sweep[i];
        t.rows.push_back({s.name, num("%.6g", extra), a.target,
                          num("%.6g", s.normal.total() + extra),
                          num("%.6g", s.accel.total() + extra),
                          num("%.6f", curve[i])});
      }
    }
    tables.push_back(t);
  }
  if (!mixes.empty()) {
    Table t;
    t.header = {"routine", "add", "mul", "mov", "shuffle_other",
                "arithmetic_fraction", "bound_x2", "bound_x4"};
    t.numeric = {false, true, true, true, true, true, true, true};
    for (const auto& m : mixes) {
      t.rows.push_back({m.routine, std::to_string(m.add), std::to_string(m.mul),
                        std::to_string(m.mov), std::to_string(m.shuffle_other),
                        num("%.6f", model::arithmetic_fraction(m)),
                        num("%.6f", model::bound_from_mix(m, 2)),
                        num("%.6f", model::bound_from_mix(m, 4))});
    }
    tables.push_back(t);
  }
  Output out(c.out);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0 && format_of(c) != bench::Format::kJsonLines) out.stream() << '\n';
    print(out.stream(), tables[i], format_of(c));
  }
  return kExitOk;
}

// ---- lattice-bench --------------------------------------------------------

struct LatticeArgs {
  std::vector<std::string> routines;
  std::vector<std::string> dims{"8x4x4x4"};
  std::uint64_t sweeps = 1;
  double min_time = 0.010;
};

// Runs `routine` once over a lattice with the given alignment and returns
// the bytes of every site's output fields.
template <typename T>
std::vector<std::byte> lattice_outputs(const bench::BenchConfig& cfg) {
  SiteLayout layout;
  layout.misalign =
      cfg.alignment == bench::Alignment::kAligned ? 0 : kMisalignOffset;
  const Lattice4D lattice(*cfg.dims);
  SiteFields<T> f(lattice, layout);
  bench::fill_fields(f, cfg.seed);
  const auto b = bench::site_bindings(cfg.routine, f);
  bench::apply<T>(cfg, cfg.routine, b, lattice.volume());
  std::vector<std::byte> bytes(f.base(), f.base() + f.payload_bytes());
  return bytes;
}

int cmd_lattice(const Common& c, const LatticeArgs& a) {
  std::vector<BackendKind> backends{BackendKind::kVector};
  if (!c.backend.empty()) backends = {*parse_backend(c.backend)};
  std::vector<bench::TimingRecord> records;
  Table cmp;
  cmp.header = {"routine", "backend", "precision", "dims", "aligned_s_per_site",
                "unaligned_s_per_site", "unaligned_over_aligned", "outputs_equal"};
  cmp.numeric = {false, false, false, false, true, true, true, false};
  bool all_equal = true;
  for (const auto& d : a.dims) {
    const Dims dims = parse_dims(d);
    for (Routine r : parse_routines(a.routines, {Routine::kMultSu3MatVec})) {
      for (Precision p : precisions(c, {Precision::kDouble})) {
        for (BackendKind b : backends) {
          bench::BenchConfig cfg;
          cfg.routine = r;
          cfg.precision = p;
          cfg.backend = b;
          cfg.mode = bench::Mode::kStreaming;
          cfg.dims = dims;
          cfg.repetitions = a.sweeps;
          cfg.min_time_s = a.min_time;
          cfg.seed = c.seed;
          cfg.alignment = bench::Alignment::kAligned;
          const auto aligned = bench::run(cfg);
          const auto out_a = p == Precision::kDouble ? lattice_outputs<double>(cfg)
                                                     : lattice_outputs<float>(cfg);
          cfg.alignment = bench::Alignment::kUnaligned;
          const auto unaligned = bench::run(cfg);
          const auto out_u = p == Precision::kDouble ? lattice_outputs<double>(cfg)
                                                     : lattice_outputs<float>(cfg);
          const bool equal = out_a == out_u;
          all_equal = all_equal && equal;
          records.push_back(aligned);
          records.push_back(unaligned);
          const double ta = aligned.seconds_per_invocation();
          const double tu = unaligned.seconds_per_invocation();
          cmp.rows.push_back({std::string(routine_name(r)), to_string(b),
                              to_string(p), format_dims(dims), num("%.6e", ta),
                              num("%.6e", tu), num("%.4f", tu / ta),
                              equal ? "yes" : "NO"});
        }
      }
    }
  }
  Output out(c.out);
  bench::write_records(out.stream(), records, format_of(c));
  if (format_of(c) != bench::Format::kJsonLines) out.stream() << '\n';
  print(out.stream(), cmp, format_of(c));
  if (!all_equal) {
    std::cerr << "lattice-bench: aligned and unaligned outputs differ\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(3) kernel verification, benchmarks and speedup model",
               "milc-simd"};
  app.require_subcommand(1);

  Common common;

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check the vectorized backend against the scalar reference and "
                "the scalar reference against a textbook oracle");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--routines", va.routines, "routine names, or 'all'")
      ->delimiter(',');
  verify_cmd->add_option("--trials", va.trials, "random inputs per check")
      ->capture_default_str();
  verify_cmd->add_flag("--inject-fault", va.inject_fault,
                       "corrupt the vectorized backend (negative control)");
  verify_cmd->add_flag("--identity", va.identity,
                       "use identity matrices for every matrix operand");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Time kernels");
  add_common(bench_cmd, common);
  bench_cmd->add_option("--routines", ba.routines, "routine names, or 'all'")
      ->delimiter(',');
  bench_cmd->add_option("--mode", ba.mode, "hot or streaming")
      ->check(CLI::IsMember({"hot", "streaming"}))
      ->capture_default_str();
  bench_cmd->add_option("--alignment", ba.alignment, "aligned or unaligned")
      ->check(CLI::IsMember({"aligned", "unaligned"}))
      ->capture_default_str();
  bench_cmd->add_option("--reps", ba.reps,
                        "calls (hot, default 1000000) or sweeps (streaming, "
                        "default 1)");
  bench_cmd->add_option("--dims", ba.dims, "lattice for streaming mode, e.g. 8x4x4x4")
      ->capture_default_str();
  bench_cmd->add_option("--warmup", ba.warmup, "untimed repetitions")
      ->capture_default_str();
  bench_cmd->add_option("--min-time", ba.min_time,
                        "grow repetitions until a run lasts this many seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench_cmd->add_flag("--speedup", ba.speedup,
                      "append scalar/vector speedup rows");

  std::vector<std::string> flops_routines;
  auto* flops_cmd = app.add_subcommand(
      "flops", "Real arithmetic per call and the vectorized lane-op mix");
  add_common(flops_cmd, common);
  flops_cmd->add_option("--routines", flops_routines, "routine names, or 'all'")
      ->delimiter(',');

  ModelArgs ma;
  auto* model_cmd = app.add_subcommand("model", "Evaluate the speedup model");
  add_common(model_cmd, common);
  model_cmd->add_option("--input", ma.input,
                        "scenario file (key = value or CSV)");
  model_cmd->add_option("--mix", ma.mix, "instruction-mix CSV");
  model_cmd->add_option("--normal", ma.normal_accel,
                        "accelerable kernel seconds, normal run")
      ->check(CLI::NonNegativeNumber);
  model_cmd->add_option("--accel", ma.accel_accel,
                        "accelerable kernel seconds, accelerated run")
      ->check(CLI::NonNegativeNumber);
  model_cmd->add_option("--plain", ma.plain, "other kernel seconds")
      ->check(CLI::NonNegativeNumber);
  model_cmd->add_option("--noncomp", ma.noncomp, "non-kernel seconds")
      ->check(CLI::NonNegativeNumber);
  model_cmd->add_option("--comm", ma.comm, "communication seconds")
      ->check(CLI::NonNegativeNumber);
  model_cmd->add_option("--sweep", ma.sweep,
                        "overheads to add, e.g. 0,10,100")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  model_cmd->add_option("--target", ma.target,
                        "component the sweep adds to: comm or noncomp")
      ->check(CLI::IsMember({"comm", "noncomp"}))
      ->capture_default_str();

  LatticeArgs la;
  auto* lattice_cmd = app.add_subcommand(
      "lattice-bench",
      "Streaming sweeps over aligned and misaligned lattice storage");
  add_common(lattice_cmd, common);
  lattice_cmd->add_option("--routines", la.routines, "routine names, or 'all'")
      ->delimiter(',');
  lattice_cmd->add_option("--dims", la.dims, "lattices, e.g. 8x4x4x4,16x16x16x16")
      ->delimiter(',')
      ->capture_default_str();
  lattice_cmd->add_option("--sweeps", la.sweeps, "minimum sweeps per run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lattice_cmd->add_option("--min-time", la.min_time,
                          "grow sweeps until a run lasts this many seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*verify_cmd) return cmd_verify(common, va);
    if (*bench_cmd) return cmd_bench(common, ba);
    if (*flops_cmd) return cmd_flops(common, flops_routines);
    if (*model_cmd) return cmd_model(common, ma);
    if (*lattice_cmd) return cmd_lattice(common, la);
  } catch (const model::ParseError& e) {
    std::cerr << "milc-simd: parse error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InputError& e) {
    std::cerr << "milc-simd: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "milc-simd: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "milc-simd: error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
