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

#include "milc/su3/routine.hpp"

#include <algorithm>

#include "milc/su3/types.hpp"

namespace milc {

namespace {

constexpr std::array<std::string_view, kRoutineCount> kNames = {
    "add_su3_vector",
    "mult_adj_su3_mat_hwvec",
    "mult_adj_su3_mat_vec",
    "mult_adj_su3_mat_vec_4dir",
    "mult_adj_su3_mat_4vec",
    "mult_su3_an",
    "mult_su3_mat_hwvec",
    "mult_su3_na",
    "mult_su3_nn",
    "mult_su3_mat_vec",
    "mult_su3_mat_vec_sum_4dir",
    "scalar_mult_add_su3_matrix",
    "scalar_mult_add_su3_vector",
    "su3_projector",
    "sub_four_su3_vecs",
};

}  // namespace

const char* to_string(Precision p) {
  return p == Precision::kSingle ? "single" : "double";
}

std::string_view routine_name(Routine r) {
  return kNames[static_cast<std::size_t>(r)];
}

std::optional<Routine> parse_routine(std::string_view name) {
  const auto it = std::find(kNames.begin(), kNames.end(), name);
  if (it == kNames.end()) return std::nullopt;
  return kAllRoutines[static_cast<std::size_t>(it - kNames.begin())];
}

std::size_t RoutineSignature::input_count() const {
  return static_cast<std::size_t>(
      std::count_if(inputs.begin(), inputs.end(),
                    [](const auto& k) { return k.has_value(); }));
}

std::size_t RoutineSignature::output_count() const {
  return static_cast<std::size_t>(
      std::count_if(outputs.begin(), outputs.end(),
                    [](const auto& k) { return k.has_value(); }));
}

RoutineSignature signature(Routine r) {
  using K = OperandKind;
  RoutineSignature s;
  switch (r) {
    case Routine::kAddSu3Vector:
      s.inputs = {K::kVector, K::kVector};
      s.outputs = {K::kVector};
      break;
    case Routine::kMultSu3MatVec:
    case Routine::kMultAdjSu3MatVec:
      s.inputs = {K::kMatrix, K::kVector};
      s.outputs = {K::kVector};
      break;
    case Routine::kMultSu3Nn:
    case Routine::kMultSu3Na:
    case Routine::kMultSu3An:
      s.inputs = {K::kMatrix, K::kMatrix};
      s.outputs = {K::kMatrix};
      break;
    case Routine::kMultSu3MatHwvec:
    case Routine::kMultAdjSu3MatHwvec:
      s.inputs = {K::kMatrix, K::kHalfWilson};
      s.outputs = {K::kHalfWilson};
      break;
    case Routine::kMultAdjSu3MatVec4dir:
      s.inputs = {K::kMatrix4, K::kVector};
      s.outputs = {K::kVector4};
      break;
    case Routine::kMultAdjSu3Mat4vec:
      s.inputs = {K::kMatrix4, K::kVector};
      s.outputs = {K::kVector, K::kVector, K::kVector, K::kVector};
      break;
    case Routine::kMultSu3MatVecSum4dir:
      s.inputs = {K::kMatrix4, K::kVector4};
      s.outputs = {K::kVector};
      break;
    case Routine::kScalarMultAddSu3Matrix:
      s.inputs = {K::kMatrix, K::kMatrix};
      s.outputs = {K::kMatrix};
      s.takes_scalar = true;
      break;
    case Routine::kScalarMultAddSu3Vector:
      s.inputs = {K::kVector, K::kVector};
      s.outputs = {K::kVector};
      s.takes_scalar = true;
      break;
    case Routine::kSu3Projector:
      s.inputs = {K::kVector, K::kVector};
      s.outputs = {K::kMatrix};
      break;
    case Routine::kSubFourSu3Vecs:
      s.inputs = {K::kVector, K::kVector, K::kVector, K::kVector, K::kVector};
      s.in_place = true;
      break;
  }
  return s;
}

}  // namespace milc
