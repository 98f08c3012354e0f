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

#ifndef MILC_SU3_ROUTINE_HPP_
#define MILC_SU3_ROUTINE_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace milc {

/// The fifteen hot-path routines, in the order MILC lists them.
enum class Routine {
  kAddSu3Vector,
  kMultAdjSu3MatHwvec,
  kMultAdjSu3MatVec,
  kMultAdjSu3MatVec4dir,
  kMultAdjSu3Mat4vec,
  kMultSu3An,
  kMultSu3MatHwvec,
  kMultSu3Na,
  kMultSu3Nn,
  kMultSu3MatVec,
  kMultSu3MatVecSum4dir,
  kScalarMultAddSu3Matrix,
  kScalarMultAddSu3Vector,
  kSu3Projector,
  kSubFourSu3Vecs,
};

inline constexpr std::size_t kRoutineCount = 15;

inline constexpr std::array<Routine, kRoutineCount> kAllRoutines = {
    Routine::kAddSu3Vector,         Routine::kMultAdjSu3MatHwvec,
    Routine::kMultAdjSu3MatVec,     Routine::kMultAdjSu3MatVec4dir,
    Routine::kMultAdjSu3Mat4vec,    Routine::kMultSu3An,
    Routine::kMultSu3MatHwvec,      Routine::kMultSu3Na,
    Routine::kMultSu3Nn,            Routine::kMultSu3MatVec,
    Routine::kMultSu3MatVecSum4dir, Routine::kScalarMultAddSu3Matrix,
    Routine::kScalarMultAddSu3Vector, Routine::kSu3Projector,
    Routine::kSubFourSu3Vecs,
};

/// MILC name, e.g. "mult_su3_mat_vec".
std::string_view routine_name(Routine r);

std::optional<Routine> parse_routine(std::string_view name);

// Shape of one per-site operand as seen by batch application.
enum class OperandKind {
  kVector,
  kMatrix,
  kHalfWilson,
  kVector4,  // four contiguous vectors
  kMatrix4,  // four contiguous matrices
};

struct RoutineSignature {
  // Unused trailing slots hold std::nullopt.
  std::array<std::optional<OperandKind>, 5> inputs{};
  std::array<std::optional<OperandKind>, 4> outputs{};
  bool takes_scalar = false;
  // The first input is updated in place and there is no separate output.
  bool in_place = false;

  std::size_t input_count() const;
  std::size_t output_count() const;
};

RoutineSignature signature(Routine r);

}  // namespace milc

#endif  // MILC_SU3_ROUTINE_HPP_
