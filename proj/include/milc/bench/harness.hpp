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

// Kernel timing under two regimes.
//
// Hot: one site's operands are reused for every invocation, so after warmup
// everything is cache resident and the timing measures compute.  Streaming:
// full sweeps over a lattice field, one invocation per site, so the working
// set grows with the lattice and memory traffic is included.
//
// Both regimes run through batch_apply; hot mode uses zero-stride operand
// arrays.  Timing uses std::chrono::steady_clock.  Only one benchmark may
// run at a time in a process, and the running thread is pinned to the CPU
// it started on where the platform allows.

#ifndef MILC_BENCH_HARNESS_HPP_
#define MILC_BENCH_HARNESS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "milc/memory/lattice.hpp"
#include "milc/memory/site_fields.hpp"
#include "milc/simd/backend.hpp"
#include "milc/simd/batch.hpp"
#include "milc/simd/kernels.hpp"
#include "milc/su3/routine.hpp"
#include "milc/su3/types.hpp"

namespace milc::bench {

enum class Mode { kHot, kStreaming };
enum class Alignment { kAligned, kUnaligned };

const char* to_string(Mode m);
const char* to_string(Alignment a);
std::optional<Mode> parse_mode(std::string_view s);
std::optional<Alignment> parse_alignment(std::string_view s);

inline constexpr std::uint64_t kDefaultHotRepetitions = 1'000'000;

struct BenchConfig {
  Routine routine = Routine::kMultSu3MatVec;
  BackendKind backend = BackendKind::kVector;
  Precision precision = Precision::kDouble;
  Mode mode = Mode::kHot;
  // Invocations in hot mode, full sweeps in streaming mode.
  std::uint64_t repetitions = kDefaultHotRepetitions;
  std::optional<Dims> dims;  // required in streaming mode
  Alignment alignment = Alignment::kAligned;
  std::uint64_t warmup = 3;
  // Repetitions grow until one timed region lasts at least this long;
  // 0 disables scaling.
  double min_time_s = 0.010;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument for repetitions == 0, a streaming config
/// without dims, or a negative min_time_s.
void validate(const BenchConfig& config);

struct Environment {
  double clock_resolution_s = 0.0;
  simd::Capability capability{};
};

/// Measured once per process.
const Environment& environment();

struct TimingRecord {
  BenchConfig config;
  // Kernel invocations in the timed region: repetitions after scaling,
  // times the lattice volume in streaming mode.
  std::uint64_t invocations = 0;
  std::uint64_t repetitions = 0;  // after scaling
  double elapsed_s = 0.0;
  double invocations_per_s = 0.0;
  double flops_per_s = 0.0;
  Environment environment;

  /// "compute" for hot runs, "memory" for streaming runs.
  std::string_view regime() const;
  double seconds_per_invocation() const { return elapsed_s / invocations; }
};

/// Process-wide benchmark slot.  Holding one pins the thread to its current
/// CPU; constructing a second while the first lives throws
/// std::runtime_error, so concurrent runs fail instead of skewing timings.
class ExclusiveRun {
 public:
  ExclusiveRun();
  ~ExclusiveRun();
  ExclusiveRun(const ExclusiveRun&) = delete;
  ExclusiveRun& operator=(const ExclusiveRun&) = delete;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

TimingRecord run_hot(const BenchConfig& config);
TimingRecord run_streaming(const BenchConfig& config);
/// Dispatches on config.mode.
TimingRecord run(const BenchConfig& config);

/// Scalar used by the scalar_mult_add routines in benchmarks.
inline constexpr double kBenchScalar = 0.5;

/// Which site fields each routine reads and writes in benchmark runs.
struct Bindings {
  std::vector<OperandArray> inputs;
  std::vector<OperandArray> outputs;
};

template <typename T>
Bindings site_bindings(Routine routine, SiteFields<T>& f) {
  switch (routine) {
    case Routine::kAddSu3Vector:
    case Routine::kScalarMultAddSu3Vector:
      return {{f.vector_array(0), f.vector_array(1)}, {f.vector_array(2)}};
    case Routine::kMultSu3MatVec:
    case Routine::kMultAdjSu3MatVec:
      return {{f.link_array(0), f.vector_array(0)}, {f.vector_array(1)}};
    case Routine::kMultSu3Nn:
    case Routine::kMultSu3Na:
    case Routine::kMultSu3An:
    case Routine::kScalarMultAddSu3Matrix:
      return {{f.link_array(0), f.link_array(1)}, {f.matrix_array(0)}};
    case Routine::kMultSu3MatHwvec:
    case Routine::kMultAdjSu3MatHwvec:
      return {{f.link_array(0), f.hw_array(0)}, {f.hw_array(1)}};
    case Routine::kMultAdjSu3MatVec4dir:
      return {{f.link_array(), f.vector_array(0)}, {f.vector4_array(1)}};
    case Routine::kMultAdjSu3Mat4vec:
      return {{f.link_array(), f.vector_array(0)},
              {f.vector_array(1), f.vector_array(2), f.vector_array(3),
               f.vector_array(4)}};
    case Routine::kMultSu3MatVecSum4dir:
      return {{f.link_array(), f.vector4_array(1)}, {f.vector_array(5)}};
    case Routine::kSu3Projector:
      return {{f.vector_array(0), f.vector_array(1)}, {f.matrix_array(0)}};
    case Routine::kSubFourSu3Vecs:
      return {{f.vector_array(0), f.vector_array(1), f.vector_array(2),
               f.vector_array(3), f.vector_array(4)},
              {}};
  }
  return {};
}

/// Fills every field of every site with seeded values in [-1, 1].
template <typename T>
void fill_fields(SiteFields<T>& f, std::uint64_t seed);

/// Applies the configured backend and entry point to `b` over `count`
/// sites.
template <typename T>
void apply(const BenchConfig& config, Routine routine, const Bindings& b,
           std::size_t count) {
  batch_apply<T>(config.backend, config.alignment == Alignment::kAligned,
                 routine, b.inputs, b.outputs, count, T(kBenchScalar));
}

struct SpeedupRow {
  Routine routine = Routine::kMultSu3MatVec;
  Precision precision = Precision::kDouble;
  Mode mode = Mode::kHot;
  double t_ref = 0.0;  // seconds per invocation, scalar backend
  double t_vec = 0.0;  // seconds per invocation, vectorized backend
  double ratio = 0.0;  // t_ref / t_vec
  bool anomalous = false;
};

/// Lane count of a 128-bit group: the most a vectorized kernel can gain.
double theoretical_max_speedup(Precision p);

/// Row from two times.  Throws std::invalid_argument unless both are > 0.
SpeedupRow speedup_row(Routine routine, Precision precision, Mode mode,
                       double t_ref, double t_vec);

/// Row from a reference and a vectorized record.  Throws
/// std::invalid_argument when routine, precision or mode differ.
SpeedupRow speedup_row(const TimingRecord& ref, const TimingRecord& vec);

std::vector<SpeedupRow> speedup_table(
    std::span<const std::pair<TimingRecord, TimingRecord>> pairs);

}  // namespace milc::bench

#endif  // MILC_BENCH_HARNESS_HPP_
