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

// Vectorized backend entry points.
//
// Functions in milc::simd accept operands at any address.  Functions in
// milc::simd::aligned additionally require every operand to sit on a
// multiple of kRequiredAlignment<T> (one complex number, so that no complex
// element straddles a lane group).  A misaligned operand passed to an
// aligned entry point raises ContractViolation in debug builds and falls
// back to the unaligned kernel in release builds.  Both entry points
// produce bitwise-identical results.

#ifndef MILC_SIMD_KERNELS_HPP_
#define MILC_SIMD_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "milc/su3/types.hpp"

namespace milc::simd {

template <typename T>
inline constexpr std::size_t kRequiredAlignment = sizeof(Complex<T>);

template <typename T>
bool is_aligned(const void* p) {
  return reinterpret_cast<std::uintptr_t>(p) % kRequiredAlignment<T> == 0;
}

struct Capability {
  std::string_view isa;  // "sse2" or "portable"
  int width_bits;        // lane group width
  int double_lanes;
  int single_lanes;
  bool hardware_vector;  // false when running the scalar fallback
};

/// Which lane-group implementation this build uses.
Capability capability();

#define MILC_SIMD_KERNEL_DECLS(T)                                              \
  void add_su3_vector(const Su3Vector<T>& a, const Su3Vector<T>& b,            \
                      Su3Vector<T>& c);                                        \
  void mult_su3_mat_vec(const Su3Matrix<T>& a, const Su3Vector<T>& b,          \
                        Su3Vector<T>& c);                                      \
  void mult_adj_su3_mat_vec(const Su3Matrix<T>& a, const Su3Vector<T>& b,      \
                            Su3Vector<T>& c);                                  \
  void mult_su3_nn(const Su3Matrix<T>& a, const Su3Matrix<T>& b,               \
                   Su3Matrix<T>& c);                                           \
  void mult_su3_na(const Su3Matrix<T>& a, const Su3Matrix<T>& b,               \
                   Su3Matrix<T>& c);                                           \
  void mult_su3_an(const Su3Matrix<T>& a, const Su3Matrix<T>& b,               \
                   Su3Matrix<T>& c);                                           \
  void mult_su3_mat_hwvec(const Su3Matrix<T>& a,                               \
                          const HalfWilsonVector<T>& b,                        \
                          HalfWilsonVector<T>& c);                             \
  void mult_adj_su3_mat_hwvec(const Su3Matrix<T>& a,                           \
                              const HalfWilsonVector<T>& b,                    \
                              HalfWilsonVector<T>& c);                         \
  void mult_adj_su3_mat_vec_4dir(std::span<const Su3Matrix<T>, 4> a,           \
                                 const Su3Vector<T>& b,                        \
                                 std::span<Su3Vector<T>, 4> c);                \
  void mult_adj_su3_mat_4vec(std::span<const Su3Matrix<T>, 4> a,               \
                             const Su3Vector<T>& b, Su3Vector<T>& c0,          \
                             Su3Vector<T>& c1, Su3Vector<T>& c2,               \
                             Su3Vector<T>& c3);                                \
  void mult_su3_mat_vec_sum_4dir(std::span<const Su3Matrix<T>, 4> a,           \
                                 std::span<const Su3Vector<T>, 4> b,           \
                                 Su3Vector<T>& c);                             \
  void scalar_mult_add_su3_matrix(const Su3Matrix<T>& a,                       \
                                  const Su3Matrix<T>& b, T s,                  \
                                  Su3Matrix<T>& c);                            \
  void scalar_mult_add_su3_vector(const Su3Vector<T>& a,                       \
                                  const Su3Vector<T>& b, T s,                  \
                                  Su3Vector<T>& c);                            \
  void su3_projector(const Su3Vector<T>& a, const Su3Vector<T>& b,             \
                     Su3Matrix<T>& c);                                         \
  void sub_four_su3_vecs(Su3Vector<T>& a, const Su3Vector<T>& b1,              \
                         const Su3Vector<T>& b2, const Su3Vector<T>& b3,       \
                         const Su3Vector<T>& b4);

MILC_SIMD_KERNEL_DECLS(float)
MILC_SIMD_KERNEL_DECLS(double)

namespace aligned {
MILC_SIMD_KERNEL_DECLS(float)
MILC_SIMD_KERNEL_DECLS(double)
}  // namespace aligned

#undef MILC_SIMD_KERNEL_DECLS

}  // namespace milc::simd

#endif  // MILC_SIMD_KERNELS_HPP_
