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

#include "milc/simd/instruction_mix.hpp"

#include <array>

#include "milc/simd/kernels_generic.hpp"

namespace milc::simd {

namespace {

template <typename T>
LaneOpCounts count_routine(Routine routine) {
  using Lanes = CountingLanes<T, kComplexPerGroup<T>>;
  using Impl = Kernels<Lanes>;

  const Su3Matrix<T> a = identity_matrix<T>();
  const Su3Matrix<T> b = identity_matrix<T>();
  const std::array<Su3Matrix<T>, 4> a4 = {a, a, a, a};
  const Su3Vector<T> u = unit_vector<T>(0);
  const Su3Vector<T> w = unit_vector<T>(1);
  const std::array<Su3Vector<T>, 4> v4 = {u, u, u, u};
  const HalfWilsonVector<T> h{{u, w}};
  Su3Vector<T> cv;
  Su3Matrix<T> cm;
  HalfWilsonVector<T> ch;
  std::array<Su3Vector<T>, 4> c4;

  LaneOpCounts counts;
  Lanes::sink = &counts;
  switch (routine) {
    case Routine::kAddSu3Vector:
      Impl::add_su3_vector(u, w, cv);
      break;
    case Routine::kMultAdjSu3MatHwvec:
      Impl::mult_adj_su3_mat_hwvec(a, h, ch);
      break;
    case Routine::kMultAdjSu3MatVec:
      Impl::mult_adj_su3_mat_vec(a, u, cv);
      break;
    case Routine::kMultAdjSu3MatVec4dir:
      Impl::mult_adj_su3_mat_vec_4dir(a4, u, c4);
      break;
    case Routine::kMultAdjSu3Mat4vec:
      Impl::mult_adj_su3_mat_4vec(a4, u, c4[0], c4[1], c4[2], c4[3]);
      break;
    case Routine::kMultSu3An:
      Impl::mult_su3_an(a, b, cm);
      break;
    case Routine::kMultSu3MatHwvec:
      Impl::mult_su3_mat_hwvec(a, h, ch);
      break;
    case Routine::kMultSu3Na:
      Impl::mult_su3_na(a, b, cm);
      break;
    case Routine::kMultSu3Nn:
      Impl::mult_su3_nn(a, b, cm);
      break;
    case Routine::kMultSu3MatVec:
      Impl::mult_su3_mat_vec(a, u, cv);
      break;
    case Routine::kMultSu3MatVecSum4dir:
      Impl::mult_su3_mat_vec_sum_4dir(a4, v4, cv);
      break;
    case Routine::kScalarMultAddSu3Matrix:
      Impl::scalar_mult_add_su3_matrix(a, b, T(2), cm);
      break;
    case Routine::kScalarMultAddSu3Vector:
      Impl::scalar_mult_add_su3_vector(u, w, T(2), cv);
      break;
    case Routine::kSu3Projector:
      Impl::su3_projector(u, w, cm);
      break;
    case Routine::kSubFourSu3Vecs: {
      Su3Vector<T> target = u;
      Impl::sub_four_su3_vecs(target, v4[0], v4[1], v4[2], v4[3]);
      break;
    }
  }
  Lanes::sink = nullptr;
  return counts;
}

}  // namespace

LaneOpCounts instruction_mix(Routine routine, Precision precision) {
  return precision == Precision::kSingle ? count_routine<float>(routine)
                                         : count_routine<double>(routine);
}

}  // namespace milc::simd
