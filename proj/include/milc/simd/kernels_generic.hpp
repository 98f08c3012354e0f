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

// Vectorized MILC kernels, written once against a lane-group policy (see
// lanes.hpp).
//
// Complex products use the broadcast scheme: the left factor's real and
// imaginary parts are each duplicated across a complex slot and multiplied
// against the packed right factor, giving two accumulators
//
//   acc_re = sum x.re * (y.re, y.im)
//   acc_im = sum x.im * (y.re, y.im)
//
// A single swap / negate / add step per result turns them into the complex
// result.  Per lane this is the same arithmetic, in the same order, as
// SplitAccumulator in the scalar reference.
//
// Working set: the matrix-vector kernels keep the three operand vector
// elements resident for the whole routine and use at most five further
// lane groups (one matrix element, its two broadcasts, two accumulators),
// which fits the eight xmm registers of SSE2.

#ifndef MILC_SIMD_KERNELS_GENERIC_HPP_
#define MILC_SIMD_KERNELS_GENERIC_HPP_

#include <algorithm>
#include <span>
#include <type_traits>
#include <utility>

#include "milc/simd/lanes.hpp"
#include "milc/su3/scalar_kernels.hpp"
#include "milc/su3/types.hpp"

namespace milc::simd {

namespace detail {

// Calls f(offset, count) for consecutive blocks of at most K out of Total
// items, with both arguments as integral constants.
template <int Total, int K, typename F>
inline void for_blocks(F&& f) {
  [&]<int... Is>(std::integer_sequence<int, Is...>) {
    (f(std::integral_constant<int, Is * K>{},
       std::integral_constant<int, std::min(K, Total - Is * K)>{}),
     ...);
  }(std::make_integer_sequence<int, (Total + K - 1) / K>{});
}

}  // namespace detail

template <class P>
struct Kernels {
  using S = typename P::scalar;
  using R = typename P::reg;
  using C = Complex<S>;
  using Vec = Su3Vector<S>;
  using Mat = Su3Matrix<S>;
  using Hw = HalfWilsonVector<S>;
  static constexpr int K = P::kComplex;

  struct Acc {
    R re;
    R im;
  };

  static Acc mac_first(R x, R y) {
    return {P::mul(P::dup_re(x), y), P::mul(P::dup_im(x), y)};
  }
  static void mac(Acc& acc, R x, R y) {
    acc.re = P::add(acc.re, P::mul(P::dup_re(x), y));
    acc.im = P::add(acc.im, P::mul(P::dup_im(x), y));
  }

  template <Conj M>
  static R combine(const Acc& acc) {
    if constexpr (M == Conj::kNone) {
      return P::add(acc.re, P::neg_re(P::swap(acc.im)));
    } else if constexpr (M == Conj::kLeft) {
      return P::add(acc.re, P::neg_im(P::swap(acc.im)));
    } else {
      return P::add(P::swap(acc.im), P::neg_im(acc.re));
    }
  }

  static void add_su3_vector(const Vec& a, const Vec& b, Vec& c) {
    detail::for_blocks<3, K>([&](auto i, auto n) {
      P::template store<n>(&c[i], P::add(P::template load<n>(&a[i]),
                                         P::template load<n>(&b[i])));
    });
  }

  // Result elements are produced K at a time with the vector resident in
  // bv.  Term j of result i reads a[OutStep * i + TermStep * j].
  template <Conj M, int OutStep, int TermStep>
  static void mat_vec_resident(const C* a, const R (&bv)[3], Vec& c) {
    detail::for_blocks<3, K>([&](auto i, auto n) {
      const C* x = a + OutStep * i;
      Acc acc = mac_first(P::template load<n, OutStep>(x), bv[0]);
      mac(acc, P::template load<n, OutStep>(x + TermStep), bv[1]);
      mac(acc, P::template load<n, OutStep>(x + 2 * TermStep), bv[2]);
      P::template store<n>(&c[i], combine<M>(acc));
    });
  }

  static void load_resident(const Vec& b, R (&bv)[3]) {
    bv[0] = P::load_dup(&b[0]);
    bv[1] = P::load_dup(&b[1]);
    bv[2] = P::load_dup(&b[2]);
  }

  static void mult_su3_mat_vec(const Mat& a, const Vec& b, Vec& c) {
    R bv[3];
    load_resident(b, bv);
    mat_vec_resident<Conj::kNone, 3, 1>(a.data(), bv, c);
  }

  static void mult_adj_su3_mat_vec(const Mat& a, const Vec& b, Vec& c) {
    R bv[3];
    load_resident(b, bv);
    // Column i of a is row i of adj(a); elements (j, i..i+n) are contiguous.
    mat_vec_resident<Conj::kLeft, 1, 3>(a.data(), bv, c);
  }

  static void mult_su3_nn(const Mat& a, const Mat& b, Mat& c) {
    for (int i = 0; i < 3; ++i) {
      const R a0 = P::load_dup(&a(i, 0));
      const R a1 = P::load_dup(&a(i, 1));
      const R a2 = P::load_dup(&a(i, 2));
      detail::for_blocks<3, K>([&](auto k, auto n) {
        Acc acc = mac_first(a0, P::template load<n>(&b(0, k)));
        mac(acc, a1, P::template load<n>(&b(1, k)));
        mac(acc, a2, P::template load<n>(&b(2, k)));
        P::template store<n>(&c(i, k), combine<Conj::kNone>(acc));
      });
    }
  }

  // c = a * adj(b): element (i, k) pairs row i of a with row k of b.
  static void mult_su3_na(const Mat& a, const Mat& b, Mat& c) {
    for (int i = 0; i < 3; ++i) {
      const R a0 = P::load_dup(&a(i, 0));
      const R a1 = P::load_dup(&a(i, 1));
      const R a2 = P::load_dup(&a(i, 2));
      detail::for_blocks<3, K>([&](auto k, auto n) {
        Acc acc = mac_first(a0, P::template load<n, 3>(&b(k, 0)));
        mac(acc, a1, P::template load<n, 3>(&b(k, 1)));
        mac(acc, a2, P::template load<n, 3>(&b(k, 2)));
        P::template store<n>(&c(i, k), combine<Conj::kRight>(acc));
      });
    }
  }

  // c = adj(a) * b
  static void mult_su3_an(const Mat& a, const Mat& b, Mat& c) {
    for (int i = 0; i < 3; ++i) {
      const R a0 = P::load_dup(&a(0, i));
      const R a1 = P::load_dup(&a(1, i));
      const R a2 = P::load_dup(&a(2, i));
      detail::for_blocks<3, K>([&](auto k, auto n) {
        Acc acc = mac_first(a0, P::template load<n>(&b(0, k)));
        mac(acc, a1, P::template load<n>(&b(1, k)));
        mac(acc, a2, P::template load<n>(&b(2, k)));
        P::template store<n>(&c(i, k), combine<Conj::kLeft>(acc));
      });
    }
  }

  static void mult_su3_mat_hwvec(const Mat& a, const Hw& b, Hw& c) {
    mult_su3_mat_vec(a, b[0], c[0]);
    mult_su3_mat_vec(a, b[1], c[1]);
  }

  static void mult_adj_su3_mat_hwvec(const Mat& a, const Hw& b, Hw& c) {
    mult_adj_su3_mat_vec(a, b[0], c[0]);
    mult_adj_su3_mat_vec(a, b[1], c[1]);
  }

  // The source vector is loaded once and shared by all four directions.
  static void mult_adj_su3_mat_vec_4dir(std::span<const Mat, 4> a,
                                        const Vec& b, std::span<Vec, 4> c) {
    R bv[3];
    load_resident(b, bv);
    for (int d = 0; d < 4; ++d) {
      mat_vec_resident<Conj::kLeft, 1, 3>(a[d].data(), bv, c[d]);
    }
  }

  static void mult_adj_su3_mat_4vec(std::span<const Mat, 4> a, const Vec& b,
                                    Vec& c0, Vec& c1, Vec& c2, Vec& c3) {
    R bv[3];
    load_resident(b, bv);
    mat_vec_resident<Conj::kLeft, 1, 3>(a[0].data(), bv, c0);
    mat_vec_resident<Conj::kLeft, 1, 3>(a[1].data(), bv, c1);
    mat_vec_resident<Conj::kLeft, 1, 3>(a[2].data(), bv, c2);
    mat_vec_resident<Conj::kLeft, 1, 3>(a[3].data(), bv, c3);
  }

  // All twelve products of a row block share one pair of accumulators.
  static void mult_su3_mat_vec_sum_4dir(std::span<const Mat, 4> a,
                                        std::span<const Vec, 4> b, Vec& c) {
    detail::for_blocks<3, K>([&](auto i, auto n) {
      Acc acc = mac_first(P::template load<n, 3>(&a[0](i, 0)),
                          P::load_dup(&b[0][0]));
      mac(acc, P::template load<n, 3>(&a[0](i, 1)), P::load_dup(&b[0][1]));
      mac(acc, P::template load<n, 3>(&a[0](i, 2)), P::load_dup(&b[0][2]));
      for (int d = 1; d < 4; ++d) {
        mac(acc, P::template load<n, 3>(&a[d](i, 0)), P::load_dup(&b[d][0]));
        mac(acc, P::template load<n, 3>(&a[d](i, 1)), P::load_dup(&b[d][1]));
        mac(acc, P::template load<n, 3>(&a[d](i, 2)), P::load_dup(&b[d][2]));
      }
      P::template store<n>(&c[i], combine<Conj::kNone>(acc));
    });
  }

  template <int Count>
  static void scalar_mult_add(const C* a, const C* b, S s, C* c) {
    const R sv = P::set1(s);
    detail::for_blocks<Count, K>([&](auto k, auto n) {
      P::template store<n>(
          c + k, P::add(P::template load<n>(a + k),
                        P::mul(sv, P::template load<n>(b + k))));
    });
  }

  static void scalar_mult_add_su3_matrix(const Mat& a, const Mat& b, S s,
                                         Mat& c) {
    scalar_mult_add<9>(a.data(), b.data(), s, c.data());
  }

  static void scalar_mult_add_su3_vector(const Vec& a, const Vec& b, S s,
                                         Vec& c) {
    scalar_mult_add<3>(a.data(), b.data(), s, c.data());
  }

  static void su3_projector(const Vec& a, const Vec& b, Mat& c) {
    for (int i = 0; i < 3; ++i) {
      const R ai = P::load_dup(&a[i]);
      detail::for_blocks<3, K>([&](auto j, auto n) {
        P::template store<n>(
            &c(i, j),
            combine<Conj::kRight>(mac_first(ai, P::template load<n>(&b[j]))));
      });
    }
  }

  static void sub_four_su3_vecs(Vec& a, const Vec& b1, const Vec& b2,
                                const Vec& b3, const Vec& b4) {
    detail::for_blocks<3, K>([&](auto i, auto n) {
      R r = P::template load<n>(&a[i]);
      r = P::sub(r, P::template load<n>(&b1[i]));
      r = P::sub(r, P::template load<n>(&b2[i]));
      r = P::sub(r, P::template load<n>(&b3[i]));
      r = P::sub(r, P::template load<n>(&b4[i]));
      P::template store<n>(&a[i], r);
    });
  }
};

}  // namespace milc::simd

#endif  // MILC_SIMD_KERNELS_GENERIC_HPP_
