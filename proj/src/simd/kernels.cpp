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

#include "milc/simd/kernels.hpp"

#include <string>

#include "milc/simd/kernels_generic.hpp"
#include "milc/simd/lanes.hpp"
#include "milc/su3/contract.hpp"

namespace milc::simd {

namespace {

template <typename T, bool Aligned>
using Impl = Kernels<NativeLanes<T, Aligned>>;

// Runs f.operator()<true>() when every operand is aligned, otherwise
// reports the violation (debug) or degrades to the unaligned kernel.
template <typename T, typename F, typename... Ops>
void run_aligned(const char* name, F&& f, const Ops&... ops) {
  if ((is_aligned<T>(&ops) && ...)) {
    f.template operator()<true>();
    return;
  }
  if constexpr (kDebugValidation) {
    throw ContractViolation(std::string(name) + ": operand not aligned to " +
                            std::to_string(kRequiredAlignment<T>) +
                            " bytes on an aligned entry point");
  }
  f.template operator()<false>();
}

}  // namespace

Capability capability() {
#ifdef MILC_SIMD_HAVE_SSE2
  return {"sse2", kLaneGroupBits, 2, 4, true};
#else
  return {"portable", kLaneGroupBits, 2, 4, false};
#endif
}

#define MILC_SIMD_KERNEL_DEFS(T, A)                                            \
  void add_su3_vector(const Su3Vector<T>& a, const Su3Vector<T>& b,            \
                      Su3Vector<T>& c) {                                       \
    check_no_alias("add_su3_vector", c, a, b);                                 \
    A(add_su3_vector, (a, b, c), a, b, c);                                     \
  }                                                                            \
  void mult_su3_mat_vec(const Su3Matrix<T>& a, const Su3Vector<T>& b,          \
                        Su3Vector<T>& c) {                                     \
    check_no_alias("mult_su3_mat_vec", c, a, b);                               \
    A(mult_su3_mat_vec, (a, b, c), a, b, c);                                   \
  }                                                                            \
  void mult_adj_su3_mat_vec(const Su3Matrix<T>& a, const Su3Vector<T>& b,      \
                            Su3Vector<T>& c) {                                 \
    check_no_alias("mult_adj_su3_mat_vec", c, a, b);                           \
    A(mult_adj_su3_mat_vec, (a, b, c), a, b, c);                               \
  }                                                                            \
  void mult_su3_nn(const Su3Matrix<T>& a, const Su3Matrix<T>& b,               \
                   Su3Matrix<T>& c) {                                          \
    check_no_alias("mult_su3_nn", c, a, b);                                    \
    A(mult_su3_nn, (a, b, c), a, b, c);                                        \
  }                                                                            \
  void mult_su3_na(const Su3Matrix<T>& a, const Su3Matrix<T>& b,               \
                   Su3Matrix<T>& c) {                                          \
    check_no_alias("mult_su3_na", c, a, b);                                    \
    A(mult_su3_na, (a, b, c), a, b, c);                                        \
  }                                                                            \
  void mult_su3_an(const Su3Matrix<T>& a, const Su3Matrix<T>& b,               \
                   Su3Matrix<T>& c) {                                          \
    check_no_alias("mult_su3_an", c, a, b);                                    \
    A(mult_su3_an, (a, b, c), a, b, c);                                        \
  }                                                                            \
  void mult_su3_mat_hwvec(const Su3Matrix<T>& a,                               \
                          const HalfWilsonVector<T>& b,                        \
                          HalfWilsonVector<T>& c) {                            \
    check_no_alias("mult_su3_mat_hwvec", c, a, b);                             \
    A(mult_su3_mat_hwvec, (a, b, c), a, b, c);                                 \
  }                                                                            \
  void mult_adj_su3_mat_hwvec(const Su3Matrix<T>& a,                           \
                              const HalfWilsonVector<T>& b,                    \
                              HalfWilsonVector<T>& c) {                        \
    check_no_alias("mult_adj_su3_mat_hwvec", c, a, b);                         \
    A(mult_adj_su3_mat_hwvec, (a, b, c), a, b, c);                             \
  }                                                                            \
  void mult_adj_su3_mat_vec_4dir(std::span<const Su3Matrix<T>, 4> a,           \
                                 const Su3Vector<T>& b,                        \
                                 std::span<Su3Vector<T>, 4> c) {               \
    for (int d = 0; d < 4; ++d) {                                              \
      check_no_alias("mult_adj_su3_mat_vec_4dir", c[d], a[0], a[1], a[2],      \
                     a[3], b);                                                 \
    }                                                                          \
    A(mult_adj_su3_mat_vec_4dir, (a, b, c), a[0], a[1], a[2], a[3], b, c[0],   \
      c[1], c[2], c[3]);                                                       \
  }                                                                            \
  void mult_adj_su3_mat_4vec(std::span<const Su3Matrix<T>, 4> a,               \
                             const Su3Vector<T>& b, Su3Vector<T>& c0,          \
                             Su3Vector<T>& c1, Su3Vector<T>& c2,               \
                             Su3Vector<T>& c3) {                               \
    for (const Su3Vector<T>* c : {&c0, &c1, &c2, &c3}) {                       \
      check_no_alias("mult_adj_su3_mat_4vec", *c, a[0], a[1], a[2], a[3], b);  \
    }                                                                          \
    A(mult_adj_su3_mat_4vec, (a, b, c0, c1, c2, c3), a[0], a[1], a[2], a[3],   \
      b, c0, c1, c2, c3);                                                      \
  }                                                                            \
  void mult_su3_mat_vec_sum_4dir(std::span<const Su3Matrix<T>, 4> a,           \
                                 std::span<const Su3Vector<T>, 4> b,           \
                                 Su3Vector<T>& c) {                            \
    check_no_alias("mult_su3_mat_vec_sum_4dir", c, a[0], a[1], a[2], a[3],     \
                   b[0], b[1], b[2], b[3]);                                    \
    A(mult_su3_mat_vec_sum_4dir, (a, b, c), a[0], a[1], a[2], a[3], b[0],      \
      b[1], b[2], b[3], c);                                                    \
  }                                                                            \
  void scalar_mult_add_su3_matrix(const Su3Matrix<T>& a,                       \
                                  const Su3Matrix<T>& b, T s,                  \
                                  Su3Matrix<T>& c) {                           \
    check_no_alias("scalar_mult_add_su3_matrix", c, a, b);                     \
    A(scalar_mult_add_su3_matrix, (a, b, s, c), a, b, c);                      \
  }                                                                            \
  void scalar_mult_add_su3_vector(const Su3Vector<T>& a,                       \
                                  const Su3Vector<T>& b, T s,                  \
                                  Su3Vector<T>& c) {                           \
    check_no_alias("scalar_mult_add_su3_vector", c, a, b);                     \
    A(scalar_mult_add_su3_vector, (a, b, s, c), a, b, c);                      \
  }                                                                            \
  void su3_projector(const Su3Vector<T>& a, const Su3Vector<T>& b,             \
                     Su3Matrix<T>& c) {                                        \
    check_no_alias("su3_projector", c, a, b);                                  \
    A(su3_projector, (a, b, c), a, b, c);                                      \
  }                                                                            \
  void sub_four_su3_vecs(Su3Vector<T>& a, const Su3Vector<T>& b1,              \
                         const Su3Vector<T>& b2, const Su3Vector<T>& b3,       \
                         const Su3Vector<T>& b4) {                             \
    check_no_alias("sub_four_su3_vecs", a, b1, b2, b3, b4);                    \
    A(sub_four_su3_vecs, (a, b1, b2, b3, b4), a, b1, b2, b3, b4);              \
  }

// Unaligned entry points ignore the operand list.
#define MILC_CALL_UNALIGNED_F(fn, args, ...) Impl<float, false>::fn args
#define MILC_CALL_UNALIGNED_D(fn, args, ...) Impl<double, false>::fn args
#define MILC_CALL_ALIGNED_F(fn, args, ...) \
  run_aligned<float>(                      \
      #fn, [&]<bool Al>() { Impl<float, Al>::fn args; }, __VA_ARGS__)
#define MILC_CALL_ALIGNED_D(fn, args, ...) \
  run_aligned<double>(                     \
      #fn, [&]<bool Al>() { Impl<double, Al>::fn args; }, __VA_ARGS__)

MILC_SIMD_KERNEL_DEFS(float, MILC_CALL_UNALIGNED_F)
MILC_SIMD_KERNEL_DEFS(double, MILC_CALL_UNALIGNED_D)

namespace aligned {
MILC_SIMD_KERNEL_DEFS(float, MILC_CALL_ALIGNED_F)
MILC_SIMD_KERNEL_DEFS(double, MILC_CALL_ALIGNED_D)
}  // namespace aligned

}  // namespace milc::simd
