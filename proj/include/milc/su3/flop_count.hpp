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

#ifndef MILC_SU3_FLOP_COUNT_HPP_
#define MILC_SU3_FLOP_COUNT_HPP_

#include <cstdint>
#include <string_view>

#include "milc/su3/routine.hpp"

namespace milc {

/// Operation counts for one kernel invocation.  Subtractions are counted
/// under real_adds.  The scalar reference never shuffles and its data
/// movement is left to the compiler, so flop_count reports moves and
/// shuffles as zero; the vectorized backend reports its own lane-level
/// counts (see simd/instruction_mix.hpp).
struct FlopCount {
  std::uint64_t real_mults = 0;
  std::uint64_t real_adds = 0;
  std::uint64_t moves = 0;
  std::uint64_t shuffles = 0;

  std::uint64_t flops() const { return real_mults + real_adds; }
  friend bool operator==(const FlopCount&, const FlopCount&) = default;
};

/// Counts real arithmetic by running the scalar reference kernel on
/// instrumented operands.
FlopCount flop_count(Routine routine);

/// Looks the routine up by MILC name; throws std::invalid_argument for an
/// unknown name.
FlopCount flop_count(std::string_view routine_name);

}  // namespace milc

#endif  // MILC_SU3_FLOP_COUNT_HPP_
