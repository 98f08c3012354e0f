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

// 128-bit lane groups holding packed complex numbers.
//
// A lane group holds K complex numbers laid out (re, im, re, im, ...): one
// for double precision, two for single.  The kernels in kernels_generic.hpp
// are written once against the policy interface below:
//
//   reg                       lane group value
//   load<N, Stride>(p)        N <= K complex numbers from p, p + Stride, ...
//   load_dup(p)               *p copied into every complex slot
//   store<N, Stride>(p, r)    first N complex slots to p, p + Stride, ...
//   set1(s)                   s in every lane
//   dup_re(r), dup_im(r)      (re, re) / (im, im) in every complex slot
//   swap(r)                   (im, re) in every complex slot
//   neg_re(r), neg_im(r)      flip the sign of the real / imaginary lanes
//   add, sub, mul             lanewise
//
// Unused complex slots of a partial load hold a copy of slot 0.

#ifndef MILC_SIMD_LANES_HPP_
#define MILC_SIMD_LANES_HPP_

#include <array>
#include <cstddef>

#if defined(__SSE2__) && !defined(MILC_SIMD_FORCE_PORTABLE)
#define MILC_SIMD_HAVE_SSE2 1
#include <emmintrin.h>
#include <xmmintrin.h>
#endif

#include "milc/su3/types.hpp"

namespace milc::simd {

inline constexpr int kLaneGroupBits = 128;

/// Complex numbers per lane group for a scalar of the given byte width.
template <typename T>
inline constexpr int kComplexPerGroup = kLaneGroupBits / 8 / (2 * sizeof(T));

// Plain-array lane group.  Works for any scalar type with +, -, * and unary
// minus, which lets the instrumented and symbolic scalars run the exact
// instruction sequence of the vectorized kernels.
template <typename S, int K>
struct PortableLanes {
  using scalar = S;
  static constexpr int kComplex = K;
  static constexpr int kLanes = 2 * K;
  using reg = std::array<S, kLanes>;

  template <int N, int Stride = 1>
  static reg load(const Complex<S>* p) {
    static_assert(N >= 1 && N <= K);
    reg r;
    for (int k = 0; k < K; ++k) {
      const Complex<S>& c = p[(k < N ? k : 0) * Stride];
      r[2 * k] = c.re;
      r[2 * k + 1] = c.im;
    }
    return r;
  }

  static reg load_dup(const Complex<S>* p) { return load<1>(p); }

  template <int N, int Stride = 1>
  static void store(Complex<S>* p, const reg& r) {
    static_assert(N >= 1 && N <= K);
    for (int k = 0; k < N; ++k) {
      p[k * Stride].re = r[2 * k];
      p[k * Stride].im = r[2 * k + 1];
    }
  }

  static reg set1(const S& s) {
    reg r;
    r.fill(s);
    return r;
  }

  static reg dup_re(const reg& a) {
    reg r;
    for (int k = 0; k < K; ++k) r[2 * k] = r[2 * k + 1] = a[2 * k];
    return r;
  }
  static reg dup_im(const reg& a) {
    reg r;
    for (int k = 0; k < K; ++k) r[2 * k] = r[2 * k + 1] = a[2 * k + 1];
    return r;
  }
  static reg swap(const reg& a) {
    reg r;
    for (int k = 0; k < K; ++k) {
      r[2 * k] = a[2 * k + 1];
      r[2 * k + 1] = a[2 * k];
    }
    return r;
  }
  static reg neg_re(const reg& a) {
    reg r = a;
    for (int k = 0; k < K; ++k) r[2 * k] = -a[2 * k];
    return r;
  }
  static reg neg_im(const reg& a) {
    reg r = a;
    for (int k = 0; k < K; ++k) r[2 * k + 1] = -a[2 * k + 1];
    return r;
  }

  static reg add(const reg& a, const reg& b) {
    reg r;
    for (int i = 0; i < kLanes; ++i) r[i] = a[i] + b[i];
    return r;
  }
  static reg sub(const reg& a, const reg& b) {
    reg r;
    for (int i = 0; i < kLanes; ++i) r[i] = a[i] - b[i];
    return r;
  }
  static reg mul(const reg& a, const reg& b) {
    reg r;
    for (int i = 0; i < kLanes; ++i) r[i] = a[i] * b[i];
    return r;
  }
};

#ifdef MILC_SIMD_HAVE_SSE2

template <typename T, bool Aligned>
struct SseLanes;

// Two doubles: one complex number per register.
template <bool Aligned>
struct SseLanes<double, Aligned> {
  using scalar = double;
  static constexpr int kComplex = 1;
  static constexpr int kLanes = 2;
  using reg = __m128d;

  template <int N, int Stride = 1>
  static reg load(const Complex<double>* p) {
    static_assert(N == 1);
    if constexpr (Aligned) {
      return _mm_load_pd(&p->re);
    } else {
      return _mm_loadu_pd(&p->re);
    }
  }
  static reg load_dup(const Complex<double>* p) { return load<1>(p); }

  template <int N, int Stride = 1>
  static void store(Complex<double>* p, reg r) {
    static_assert(N == 1);
    if constexpr (Aligned) {
      _mm_store_pd(&p->re, r);
    } else {
      _mm_storeu_pd(&p->re, r);
    }
  }

  static reg set1(double s) { return _mm_set1_pd(s); }
  static reg dup_re(reg a) { return _mm_unpacklo_pd(a, a); }
  static reg dup_im(reg a) { return _mm_unpackhi_pd(a, a); }
  static reg swap(reg a) { return _mm_shuffle_pd(a, a, 1); }
  static reg neg_re(reg a) { return _mm_xor_pd(a, _mm_set_pd(0.0, -0.0)); }
  static reg neg_im(reg a) { return _mm_xor_pd(a, _mm_set_pd(-0.0, 0.0)); }
  static reg add(reg a, reg b) { return _mm_add_pd(a, b); }
  static reg sub(reg a, reg b) { return _mm_sub_pd(a, b); }
  static reg mul(reg a, reg b) { return _mm_mul_pd(a, b); }
};

// Four floats: two complex numbers per register.  A row of three complex
// floats is 24 bytes, so packed pairs land on 16-byte boundaries only every
// other element; full-width loads are therefore always unaligned (movups)
// and the Aligned flag only affects contract checking.
template <bool Aligned>
struct SseLanes<float, Aligned> {
  using scalar = float;
  static constexpr int kComplex = 2;
  static constexpr int kLanes = 4;
  using reg = __m128;

  static const __m64* as_m64(const Complex<float>* p) {
    return reinterpret_cast<const __m64*>(p);
  }
  static __m64* as_m64(Complex<float>* p) { return reinterpret_cast<__m64*>(p); }

  template <int N, int Stride = 1>
  static reg load(const Complex<float>* p) {
    static_assert(N == 1 || N == 2);
    if constexpr (N == 2 && Stride == 1) {
      return _mm_loadu_ps(&p->re);
    } else {
      const reg lo = _mm_loadl_pi(_mm_setzero_ps(), as_m64(p));
      if constexpr (N == 2) {
        return _mm_loadh_pi(lo, as_m64(p + Stride));
      } else {
        return _mm_movelh_ps(lo, lo);
      }
    }
  }
  static reg load_dup(const Complex<float>* p) { return load<1>(p); }

  template <int N, int Stride = 1>
  static void store(Complex<float>* p, reg r) {
    static_assert(N == 1 || N == 2);
    if constexpr (N == 2 && Stride == 1) {
      _mm_storeu_ps(&p->re, r);
    } else {
      _mm_storel_pi(as_m64(p), r);
      if constexpr (N == 2) _mm_storeh_pi(as_m64(p + Stride), r);
    }
  }

  static reg set1(float s) { return _mm_set1_ps(s); }
  static reg dup_re(reg a) { return _mm_shuffle_ps(a, a, _MM_SHUFFLE(2, 2, 0, 0)); }
  static reg dup_im(reg a) { return _mm_shuffle_ps(a, a, _MM_SHUFFLE(3, 3, 1, 1)); }
  static reg swap(reg a) { return _mm_shuffle_ps(a, a, _MM_SHUFFLE(2, 3, 0, 1)); }
  static reg neg_re(reg a) {
    return _mm_xor_ps(a, _mm_set_ps(0.0f, -0.0f, 0.0f, -0.0f));
  }
  static reg neg_im(reg a) {
    return _mm_xor_ps(a, _mm_set_ps(-0.0f, 0.0f, -0.0f, 0.0f));
  }
  static reg add(reg a, reg b) { return _mm_add_ps(a, b); }
  static reg sub(reg a, reg b) { return _mm_sub_ps(a, b); }
  static reg mul(reg a, reg b) { return _mm_mul_ps(a, b); }
};

template <typename T, bool Aligned>
using NativeLanes = SseLanes<T, Aligned>;

#else

template <typename T, bool Aligned>
using NativeLanes = PortableLanes<T, kComplexPerGroup<T>>;

#endif  // MILC_SIMD_HAVE_SSE2

}  // namespace milc::simd

#endif  // MILC_SIMD_LANES_HPP_
