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

#include "milc/su3/flop_count.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>

#include "milc/su3/counted.hpp"
#include "milc/su3/scalar_kernels.hpp"

namespace milc {

thread_local CountScope* CountScope::active_ = nullptr;

namespace {

// Distinct small integers so that no product or sum is trivially zero.
template <typename V>
V counting_operand(double seed) {
  V v;
  double x = seed;
  auto fill = [&x](Complex<Counted>& c) {
    c.re = Counted(x += 1.0);
    c.im = Counted(x += 1.0);
  };
  if constexpr (requires { v.e; }) {
    for (auto& c : v.e) fill(c);
  } else if constexpr (requires { v.h; }) {
    for (auto& h : v.h)
      for (auto& c : h.c) fill(c);
  } else {
    for (auto& c : v.c) fill(c);
  }
  return v;
}

using CVec = Su3Vector<Counted>;
using CMat = Su3Matrix<Counted>;
using CHw = HalfWilsonVector<Counted>;

OpTally run_counted(Routine routine) {
  const CMat a = counting_operand<CMat>(0);
  const CMat b = counting_operand<CMat>(100);
  const std::array<CMat, 4> a4 = {counting_operand<CMat>(200),
                                  counting_operand<CMat>(300),
                                  counting_operand<CMat>(400),
                                  counting_operand<CMat>(500)};
  const std::array<CVec, 4> v4 = {counting_operand<CVec>(600),
                                  counting_operand<CVec>(700),
                                  counting_operand<CVec>(800),
                                  counting_operand<CVec>(900)};
  const CVec u = counting_operand<CVec>(1000);
  const CVec w = counting_operand<CVec>(1100);
  const CHw h = counting_operand<CHw>(1200);
  const Counted s(0.5);

  // Operand setup above is excluded; only the kernel runs inside the scope.
  CountScope scope;
  CVec cv;
  CMat cm;
  CHw ch;
  std::array<CVec, 4> c4;
  switch (routine) {
    case Routine::kAddSu3Vector:
      scalar::add_su3_vector(u, w, cv);
      break;
    case Routine::kMultAdjSu3MatHwvec:
      scalar::mult_adj_su3_mat_hwvec(a, h, ch);
      break;
    case Routine::kMultAdjSu3MatVec:
      scalar::mult_adj_su3_mat_vec(a, u, cv);
      break;
    case Routine::kMultAdjSu3MatVec4dir:
      scalar::mult_adj_su3_mat_vec_4dir<Counted>(a4, u, c4);
      break;
    case Routine::kMultAdjSu3Mat4vec:
      scalar::mult_adj_su3_mat_4vec<Counted>(a4, u, c4[0], c4[1], c4[2],
                                             c4[3]);
      break;
    case Routine::kMultSu3An:
      scalar::mult_su3_an(a, b, cm);
      break;
    case Routine::kMultSu3MatHwvec:
      scalar::mult_su3_mat_hwvec(a, h, ch);
      break;
    case Routine::kMultSu3Na:
      scalar::mult_su3_na(a, b, cm);
      break;
    case Routine::kMultSu3Nn:
      scalar::mult_su3_nn(a, b, cm);
      break;
    case Routine::kMultSu3MatVec:
      scalar::mult_su3_mat_vec(a, u, cv);
      break;
    case Routine::kMultSu3MatVecSum4dir:
      scalar::mult_su3_mat_vec_sum_4dir<Counted>(a4, v4, cv);
      break;
    case Routine::kScalarMultAddSu3Matrix:
      scalar::scalar_mult_add_su3_matrix(a, b, s, cm);
      break;
    case Routine::kScalarMultAddSu3Vector:
      scalar::scalar_mult_add_su3_vector(u, w, s, cv);
      break;
    case Routine::kSu3Projector:
      scalar::su3_projector(u, w, cm);
      break;
    case Routine::kSubFourSu3Vecs: {
      CVec target = u;
      scalar::sub_four_su3_vecs(target, v4[0], v4[1], v4[2], v4[3]);
      break;
    }
  }
  return scope.totals();
}

}  // namespace

FlopCount flop_count(Routine routine) {
  const OpTally t = run_counted(routine);
  FlopCount fc;
  fc.real_mults = t.mults;
  fc.real_adds = t.adds;
  return fc;
}

FlopCount flop_count(std::string_view routine_name) {
  const auto r = parse_routine(routine_name);
  if (!r) {
    throw std::invalid_argument("unknown routine: " + std::string(routine_name));
  }
  return flop_count(*r);
}

}  // namespace milc
