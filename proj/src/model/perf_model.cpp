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

#include "milc/model/perf_model.hpp"

#include <cmath>
#include <stdexcept>

namespace milc::model {

void validate(const TimeComponents& t) {
  for (double v : {t.t_comp_accel, t.t_comp_plain, t.t_noncomp, t.t_comm}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("time components must be finite and >= 0");
    }
  }
}

double predicted_speedup(const TimeComponents& normal,
                         const TimeComponents& accel) {
  validate(normal);
  validate(accel);
  if (normal.t_comp_plain != accel.t_comp_plain ||
      normal.t_noncomp != accel.t_noncomp || normal.t_comm != accel.t_comm) {
    throw std::invalid_argument(
        "normal and accelerated runs may differ only in t_comp_accel");
  }
  const double denom = accel.total();
  if (!(denom > 0.0)) {
    throw std::invalid_argument("accelerated total time must be > 0");
  }
  return normal.total() / denom;
}

std::vector<double> degradation_curve(const TimeComponents& normal,
                                      const TimeComponents& accel,
                                      std::span<const double> overheads,
                                      OverheadTarget target) {
  std::vector<double> out;
  out.reserve(overheads.size());
  for (double o : overheads) {
    if (!std::isfinite(o) || o < 0.0) {
      throw std::invalid_argument("overhead must be finite and >= 0");
    }
    TimeComponents n = normal;
    TimeComponents a = accel;
    double TimeComponents::*field = target == OverheadTarget::kComm
                                        ? &TimeComponents::t_comm
                                        : &TimeComponents::t_noncomp;
    n.*field += o;
    a.*field += o;
    out.push_back(predicted_speedup(n, a));
  }
  return out;
}

double arithmetic_fraction(const InstructionMix& mix) {
  if (mix.total() == 0) {
    throw std::invalid_argument("arithmetic_fraction: empty instruction mix");
  }
  return static_cast<double>(mix.arithmetic()) /
         static_cast<double>(mix.total());
}

double bound_from_mix(const InstructionMix& mix, int lane_factor) {
  if (lane_factor != 2 && lane_factor != 4) {
    throw std::invalid_argument("lane_factor must be 2 or 4");
  }
  if (mix.total() == 0) return 1.0;
  const double arith = static_cast<double>(mix.arithmetic());
  const double other = static_cast<double>(mix.total() - mix.arithmetic());
  return static_cast<double>(mix.total()) / (other + arith / lane_factor);
}

}  // namespace milc::model
