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

// Amdahl-style speedup model for programs that spend part of their time in
// accelerable kernel instructions.
//
//   T = t_comp_accel + t_comp_plain + t_noncomp + t_comm
//   speedup = T_normal / T_accel
//
// where only t_comp_accel differs between the two runs.  Serial programs
// have t_comm = 0.

#ifndef MILC_MODEL_PERF_MODEL_HPP_
#define MILC_MODEL_PERF_MODEL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace milc::model {

/// Seconds spent in each part of a run.
struct TimeComponents {
  double t_comp_accel = 0.0;  // accelerable instructions in kernels
  double t_comp_plain = 0.0;  // other instructions in kernels
  double t_noncomp = 0.0;     // outside the kernels
  double t_comm = 0.0;        // communication; 0 for serial runs

  double total() const { return t_comp_accel + t_comp_plain + t_noncomp + t_comm; }
  friend bool operator==(const TimeComponents&, const TimeComponents&) = default;
};

/// Throws std::invalid_argument if any component is negative or not finite.
void validate(const TimeComponents& t);

/// normal.total() / accel.total().  Throws std::invalid_argument when a
/// component is invalid, when the accelerated total is not positive, or when
/// the inputs differ in anything but t_comp_accel.
double predicted_speedup(const TimeComponents& normal,
                         const TimeComponents& accel);

enum class OverheadTarget { kComm, kNonComp };

/// predicted_speedup after adding each overhead to the chosen component of
/// both runs.  Overheads must be >= 0.
std::vector<double> degradation_curve(const TimeComponents& normal,
                                      const TimeComponents& accel,
                                      std::span<const double> overheads,
                                      OverheadTarget target);

/// Instruction counts of one kernel.
struct InstructionMix {
  std::string routine;
  std::uint64_t add = 0;
  std::uint64_t mul = 0;
  std::uint64_t mov = 0;
  std::uint64_t shuffle_other = 0;

  std::uint64_t arithmetic() const { return add + mul; }
  std::uint64_t total() const { return add + mul + mov + shuffle_other; }
  friend bool operator==(const InstructionMix&, const InstructionMix&) = default;
};

/// (add + mul) / total.  Throws std::invalid_argument for an empty mix.
double arithmetic_fraction(const InstructionMix& mix);

/// Upper bound on the kernel speedup if arithmetic instructions run
/// lane_factor times faster and everything else is unchanged:
///   total / (non_arithmetic + arithmetic / lane_factor).
/// An empty mix gives 1.  Throws std::invalid_argument unless lane_factor
/// is 2 or 4.
double bound_from_mix(const InstructionMix& mix, int lane_factor);

}  // namespace milc::model

#endif  // MILC_MODEL_PERF_MODEL_HPP_
