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

#include "milc/bench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "milc/su3/flop_count.hpp"

#ifdef __linux__
#include <sched.h>
#endif

namespace milc::bench {

const char* to_string(Mode m) {
  return m == Mode::kHot ? "hot" : "streaming";
}

const char* to_string(Alignment a) {
  return a == Alignment::kAligned ? "aligned" : "unaligned";
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "hot") return Mode::kHot;
  if (s == "streaming") return Mode::kStreaming;
  return std::nullopt;
}

std::optional<Alignment> parse_alignment(std::string_view s) {
  if (s == "aligned") return Alignment::kAligned;
  if (s == "unaligned") return Alignment::kUnaligned;
  return std::nullopt;
}

void validate(const BenchConfig& config) {
  if (config.repetitions < 1) {
    throw std::invalid_argument("repetitions must be >= 1");
  }
  if (config.mode == Mode::kStreaming && !config.dims) {
    throw std::invalid_argument("streaming mode requires lattice dims");
  }
  if (!(config.min_time_s >= 0.0)) {
    throw std::invalid_argument("min_time_s must be >= 0");
  }
}

std::string_view TimingRecord::regime() const {
  return config.mode == Mode::kHot ? "compute" : "memory";
}

namespace {

using Clock = std::chrono::steady_clock;

double measure_clock_resolution() {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 16; ++i) {
    const auto t0 = Clock::now();
    auto t1 = Clock::now();
    while (t1 == t0) t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

std::atomic_flag g_running = ATOMIC_FLAG_INIT;

// Times `body(reps)`, growing reps until the region reaches min_time_s.
template <typename Body>
std::pair<std::uint64_t, double> timed(const BenchConfig& config, Body body) {
  std::uint64_t reps = config.repetitions;
  for (;;) {
    const auto t0 = Clock::now();
    body(reps);
    const auto t1 = Clock::now();
    const double elapsed = std::chrono::duration<double>(t1 - t0).count();
    if (elapsed >= config.min_time_s && elapsed > 0.0) return {reps, elapsed};
    const double grow =
        elapsed > 0.0 ? std::clamp(1.5 * config.min_time_s / elapsed, 2.0, 100.0)
                      : 100.0;
    reps = static_cast<std::uint64_t>(std::ceil(static_cast<double>(reps) * grow));
  }
}

TimingRecord make_record(const BenchConfig& config, std::uint64_t reps,
                         std::uint64_t invocations, double elapsed) {
  TimingRecord r;
  r.config = config;
  r.repetitions = reps;
  r.invocations = invocations;
  r.elapsed_s = elapsed;
  r.invocations_per_s = static_cast<double>(invocations) / elapsed;
  r.flops_per_s = r.invocations_per_s *
                  static_cast<double>(flop_count(config.routine).flops());
  r.environment = environment();
  return r;
}

SiteLayout layout_for(const BenchConfig& config) {
  SiteLayout layout;
  layout.misalign =
      config.alignment == Alignment::kAligned ? 0 : kMisalignOffset;
  return layout;
}

template <typename T>
TimingRecord hot_impl(const BenchConfig& config) {
  SiteFields<T> fields(Lattice4D({1, 1, 1, 1}), layout_for(config));
  fill_fields(fields, config.seed);
  Bindings b = site_bindings(config.routine, fields);
  auto repeat = [&](std::uint64_t n) {
    for (auto& x : b.inputs) x = {x.kind, x.base, 0, n};
    for (auto& x : b.outputs) x = {x.kind, x.base, 0, n};
    apply<T>(config, config.routine, b, n);
  };
  if (config.warmup > 0) repeat(config.warmup);
  const auto [reps, elapsed] = timed(config, repeat);
  return make_record(config, reps, reps, elapsed);
}

template <typename T>
TimingRecord streaming_impl(const BenchConfig& config) {
  const Lattice4D lattice(*config.dims);
  SiteFields<T> fields(lattice, layout_for(config));
  fill_fields(fields, config.seed);
  const Bindings b = site_bindings(config.routine, fields);
  const std::size_t volume = lattice.volume();
  auto sweeps = [&](std::uint64_t n) {
    for (std::uint64_t s = 0; s < n; ++s) {
      apply<T>(config, config.routine, b, volume);
    }
  };
  if (config.warmup > 0) sweeps(config.warmup);
  const auto [reps, elapsed] = timed(config, sweeps);
  return make_record(config, reps, reps * volume, elapsed);
}

}  // namespace

const Environment& environment() {
  static const Environment env{measure_clock_resolution(), simd::capability()};
  return env;
}

template <typename T>
void fill_fields(SiteFields<T>& f, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<T> u(T(-1), T(1));
  // Fields are packed T values; misaligned bases still hold whole T's.
  const std::size_t n = f.payload_bytes() / sizeof(T);
  for (std::size_t i = 0; i < n; ++i) {
    const T v = u(g);
    std::memcpy(f.base() + i * sizeof(T), &v, sizeof(T));
  }
}

template void fill_fields<float>(SiteFields<float>&, std::uint64_t);
template void fill_fields<double>(SiteFields<double>&, std::uint64_t);

struct ExclusiveRun::State {
#ifdef __linux__
  cpu_set_t saved{};
  bool pinned = false;
#endif
};

ExclusiveRun::ExclusiveRun() {
  if (g_running.test_and_set()) {
    throw std::runtime_error("another benchmark is already running");
  }
  state_ = std::make_unique<State>();
#ifdef __linux__
  State& st = *state_;
  st.pinned = sched_getaffinity(0, sizeof(st.saved), &st.saved) == 0;
  if (st.pinned) {
    const int cpu = sched_getcpu();
    cpu_set_t one;
    CPU_ZERO(&one);
    if (cpu >= 0) CPU_SET(cpu, &one);
    st.pinned = cpu >= 0 && sched_setaffinity(0, sizeof(one), &one) == 0;
  }
#endif
}

ExclusiveRun::~ExclusiveRun() {
#ifdef __linux__
  if (state_->pinned) sched_setaffinity(0, sizeof(state_->saved), &state_->saved);
#endif
  g_running.clear();
}

TimingRecord run_hot(const BenchConfig& config) {
  validate(config);
  if (config.mode != Mode::kHot) throw std::invalid_argument("run_hot: mode must be hot");
  ExclusiveRun guard;
  return config.precision == Precision::kDouble ? hot_impl<double>(config)
                                                : hot_impl<float>(config);
}

TimingRecord run_streaming(const BenchConfig& config) {
  validate(config);
  if (config.mode != Mode::kStreaming) {
    throw std::invalid_argument("run_streaming: mode must be streaming");
  }
  ExclusiveRun guard;
  return config.precision == Precision::kDouble ? streaming_impl<double>(config)
                                                : streaming_impl<float>(config);
}

TimingRecord run(const BenchConfig& config) {
  return config.mode == Mode::kHot ? run_hot(config) : run_streaming(config);
}

double theoretical_max_speedup(Precision p) {
  return p == Precision::kDouble ? 2.0 : 4.0;
}

SpeedupRow speedup_row(Routine routine, Precision precision, Mode mode,
                       double t_ref, double t_vec) {
  if (!(t_ref > 0.0) || !(t_vec > 0.0)) {
    throw std::invalid_argument("speedup_row: times must be positive");
  }
  SpeedupRow row{routine, precision, mode, t_ref, t_vec, t_ref / t_vec, false};
  row.anomalous = row.ratio > theoretical_max_speedup(precision);
  return row;
}

SpeedupRow speedup_row(const TimingRecord& ref, const TimingRecord& vec) {
  if (ref.config.routine != vec.config.routine ||
      ref.config.precision != vec.config.precision ||
      ref.config.mode != vec.config.mode) {
    throw std::invalid_argument(
        "speedup_row: records differ in routine, precision or mode");
  }
  if (ref.config.backend != BackendKind::kScalar ||
      vec.config.backend != BackendKind::kVector) {
    throw std::invalid_argument(
        "speedup_row: expected a scalar record and a vector record");
  }
  return speedup_row(ref.config.routine, ref.config.precision, ref.config.mode,
                     ref.seconds_per_invocation(), vec.seconds_per_invocation());
}

std::vector<SpeedupRow> speedup_table(
    std::span<const std::pair<TimingRecord, TimingRecord>> pairs) {
  std::vector<SpeedupRow> rows;
  rows.reserve(pairs.size());
  for (const auto& [ref, vec] : pairs) rows.push_back(speedup_row(ref, vec));
  return rows;
}

}  // namespace milc::bench
