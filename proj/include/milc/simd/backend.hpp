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

// Backends as types, so that batch application and benchmarking can be
// written once over any of them.

#ifndef MILC_SIMD_BACKEND_HPP_
#define MILC_SIMD_BACKEND_HPP_

#include <optional>
#include <span>
#include <string_view>

#include "milc/simd/kernels.hpp"
#include "milc/su3/scalar_kernels.hpp"
#include "milc/su3/types.hpp"

namespace milc {

enum class BackendKind { kScalar, kVector };

const char* to_string(BackendKind kind);
std::optional<BackendKind> parse_backend(std::string_view name);

#define MILC_BACKEND_FORWARDS(NS)                                              \
  template <typename T>                                                        \
  static void add_su3_vector(const Su3Vector<T>& a, const Su3Vector<T>& b,     \
                             Su3Vector<T>& c) {                                \
    NS::add_su3_vector(a, b, c);                                               \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_su3_mat_vec(const Su3Matrix<T>& a, const Su3Vector<T>& b,   \
                               Su3Vector<T>& c) {                              \
    NS::mult_su3_mat_vec(a, b, c);                                             \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_adj_su3_mat_vec(const Su3Matrix<T>& a,                      \
                                   const Su3Vector<T>& b, Su3Vector<T>& c) {   \
    NS::mult_adj_su3_mat_vec(a, b, c);                                         \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_su3_nn(const Su3Matrix<T>& a, const Su3Matrix<T>& b,        \
                          Su3Matrix<T>& c) {                                   \
    NS::mult_su3_nn(a, b, c);                                                  \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_su3_na(const Su3Matrix<T>& a, const Su3Matrix<T>& b,        \
                          Su3Matrix<T>& c) {                                   \
    NS::mult_su3_na(a, b, c);                                                  \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_su3_an(const Su3Matrix<T>& a, const Su3Matrix<T>& b,        \
                          Su3Matrix<T>& c) {                                   \
    NS::mult_su3_an(a, b, c);                                                  \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_su3_mat_hwvec(const Su3Matrix<T>& a,                        \
                                 const HalfWilsonVector<T>& b,                 \
                                 HalfWilsonVector<T>& c) {                     \
    NS::mult_su3_mat_hwvec(a, b, c);                                           \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_adj_su3_mat_hwvec(const Su3Matrix<T>& a,                    \
                                     const HalfWilsonVector<T>& b,             \
                                     HalfWilsonVector<T>& c) {                 \
    NS::mult_adj_su3_mat_hwvec(a, b, c);                                       \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_adj_su3_mat_vec_4dir(std::span<const Su3Matrix<T>, 4> a,    \
                                        const Su3Vector<T>& b,                 \
                                        std::span<Su3Vector<T>, 4> c) {        \
    NS::mult_adj_su3_mat_vec_4dir(a, b, c);                                    \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_adj_su3_mat_4vec(                                           \
      std::span<const Su3Matrix<T>, 4> a, const Su3Vector<T>& b,               \
      Su3Vector<T>& c0, Su3Vector<T>& c1, Su3Vector<T>& c2,                    \
      Su3Vector<T>& c3) {                                                      \
    NS::mult_adj_su3_mat_4vec(a, b, c0, c1, c2, c3);                           \
  }                                                                            \
  template <typename T>                                                        \
  static void mult_su3_mat_vec_sum_4dir(std::span<const Su3Matrix<T>, 4> a,    \
                                        std::span<const Su3Vector<T>, 4> b,    \
                                        Su3Vector<T>& c) {                     \
    NS::mult_su3_mat_vec_sum_4dir(a, b, c);                                    \
  }                                                                            \
  template <typename T>                                                        \
  static void scalar_mult_add_su3_matrix(                                      \
      const Su3Matrix<T>& a, const Su3Matrix<T>& b, T s, Su3Matrix<T>& c) {    \
    NS::scalar_mult_add_su3_matrix(a, b, s, c);                                \
  }                                                                            \
  template <typename T>                                                        \
  static void scalar_mult_add_su3_vector(                                      \
      const Su3Vector<T>& a, const Su3Vector<T>& b, T s, Su3Vector<T>& c) {    \
    NS::scalar_mult_add_su3_vector(a, b, s, c);                                \
  }                                                                            \
  template <typename T>                                                        \
  static void su3_projector(const Su3Vector<T>& a, const Su3Vector<T>& b,      \
                            Su3Matrix<T>& c) {                                 \
    NS::su3_projector(a, b, c);                                                \
  }                                                                            \
  template <typename T>                                                        \
  static void sub_four_su3_vecs(Su3Vector<T>& a, const Su3Vector<T>& b1,       \
                                const Su3Vector<T>& b2,                        \
                                const Su3Vector<T>& b3,                        \
                                const Su3Vector<T>& b4) {                      \
    NS::sub_four_su3_vecs(a, b1, b2, b3, b4);                                  \
  }

struct ScalarBackend {
  static constexpr BackendKind kind = BackendKind::kScalar;
  MILC_BACKEND_FORWARDS(scalar)
};

struct VectorBackend {
  static constexpr BackendKind kind = BackendKind::kVector;
  MILC_BACKEND_FORWARDS(simd)
};

struct AlignedVectorBackend {
  static constexpr BackendKind kind = BackendKind::kVector;
  MILC_BACKEND_FORWARDS(simd::aligned)
};

#undef MILC_BACKEND_FORWARDS

/// Every backend exposes the same fifteen kernels.
template <typename B, typename T>
concept KernelBackend = requires(const Su3Matrix<T>& m, const Su3Vector<T>& v,
                                 const HalfWilsonVector<T>& h,
                                 std::span<const Su3Matrix<T>, 4> m4,
                                 std::span<const Su3Vector<T>, 4> v4c,
                                 std::span<Su3Vector<T>, 4> v4, Su3Vector<T>& ov,
                                 Su3Matrix<T>& om, HalfWilsonVector<T>& oh, T s) {
  B::add_su3_vector(v, v, ov);
  B::mult_su3_mat_vec(m, v, ov);
  B::mult_adj_su3_mat_vec(m, v, ov);
  B::mult_su3_nn(m, m, om);
  B::mult_su3_na(m, m, om);
  B::mult_su3_an(m, m, om);
  B::mult_su3_mat_hwvec(m, h, oh);
  B::mult_adj_su3_mat_hwvec(m, h, oh);
  B::mult_adj_su3_mat_vec_4dir(m4, v, v4);
  B::mult_adj_su3_mat_4vec(m4, v, ov, ov, ov, ov);
  B::mult_su3_mat_vec_sum_4dir(m4, v4c, ov);
  B::scalar_mult_add_su3_matrix(m, m, s, om);
  B::scalar_mult_add_su3_vector(v, v, s, ov);
  B::su3_projector(v, v, om);
  B::sub_four_su3_vecs(ov, v, v, v, v);
};

static_assert(KernelBackend<ScalarBackend, float>);
static_assert(KernelBackend<ScalarBackend, double>);
static_assert(KernelBackend<VectorBackend, float>);
static_assert(KernelBackend<VectorBackend, double>);
static_assert(KernelBackend<AlignedVectorBackend, double>);

}  // namespace milc

#endif  // MILC_SIMD_BACKEND_HPP_
