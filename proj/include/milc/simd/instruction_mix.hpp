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

#ifndef MILC_SIMD_INSTRUCTION_MIX_HPP_
#define MILC_SIMD_INSTRUCTION_MIX_HPP_

#include <cstdint>

#include "milc/simd/lanes.hpp"
#include "milc/su3/routine.hpp"
#include "milc/su3/types.hpp"

namespace milc::simd {

/// Lane-group instructions issued by one vectorized kernel call, classified
/// the way an SSE2 instruction listing would be.  Register-to-register
/// copies and spills chosen by the compiler are not modelled.
struct LaneOpCounts {
  std::uint64_t add = 0;      // addpd / addps
  std::uint64_t sub = 0;      // subpd / subps
  std::uint64_t mul = 0;      // mulpd / mulps
  std::uint64_t mov = 0;      // loads and stores, including half-register
  std::uint64_t shuffle = 0;  // unpck / shuf / movlhps
  std::uint64_t logic = 0;    // xor used for sign flips

  friend bool operator==(const LaneOpCounts&, const LaneOpCounts&) = default;
};

LaneOpCounts instruction_mix(Routine routine, Precision precision);

// Counts instructions while computing with the portable lanes.  The
// per-operation costs follow the SseLanes implementation.
template <typename S, int K>
struct CountingLanes {
  using Base = PortableLanes<S, K>;
  using scalar = S;
  static constexpr int kComplex = K;
  static constexpr int kLanes = 2 * K;
  using reg = typename Base::reg;

  static inline thread_local LaneOpCounts* sink = nullptr;

  static void count(std::uint64_t LaneOpCounts::*field, std::uint64_t n = 1) {
    if (sink != nullptr) sink->*field += n;
  }

  template <int N, int Stride = 1>
  static reg load(const Complex<S>* p) {
    if constexpr (N == K && (N == 1 || Stride == 1)) {
      count(&LaneOpCounts::mov);
    } else if constexpr (N == K) {
      count(&LaneOpCounts::mov, N);  // movlps + movhps
    } else {
      count(&LaneOpCounts::mov);  // movlps
      count(&LaneOpCounts::shuffle);  // movlhps
    }
    return Base::template load<N, Stride>(p);
  }
  static reg load_dup(const Complex<S>* p) { return load<1>(p); }

  template <int N, int Stride = 1>
  static void store(Complex<S>* p, const reg& r) {
    if constexpr (N == K && N > 1 && Stride != 1) {
      count(&LaneOpCounts::mov, N);
    } else {
      count(&LaneOpCounts::mov);
    }
    Base::template store<N, Stride>(p, r);
  }

  static reg set1(const S& s) {
    count(&LaneOpCounts::mov);
    count(&LaneOpCounts::shuffle);
    return Base::set1(s);
  }
  static reg dup_re(const reg& a) {
    count(&LaneOpCounts::shuffle);
    return Base::dup_re(a);
  }
  static reg dup_im(const reg& a) {
    count(&LaneOpCounts::shuffle);
    return Base::dup_im(a);
  }
  static reg swap(const reg& a) {
    count(&LaneOpCounts::shuffle);
    return Base::swap(a);
  }
  static reg neg_re(const reg& a) {
    count(&LaneOpCounts::logic);
    return Base::neg_re(a);
  }
  static reg neg_im(const reg& a) {
    count(&LaneOpCounts::logic);
    return Base::neg_im(a);
  }
  static reg add(const reg& a, const reg& b) {
    count(&LaneOpCounts::add);
    return Base::add(a, b);
  }
  static reg sub(const reg& a, const reg& b) {
    count(&LaneOpCounts::sub);
    return Base::sub(a, b);
  }
  static reg mul(const reg& a, const reg& b) {
    count(&LaneOpCounts::mul);
    return Base::mul(a, b);
  }
};

}  // namespace milc::simd

#endif  // MILC_SIMD_INSTRUCTION_MIX_HPP_
