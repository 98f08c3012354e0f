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

// Floating-point distance measures used by the equivalence checks.

#ifndef MILC_VERIFY_ULP_HPP_
#define MILC_VERIFY_ULP_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <type_traits>

namespace milc::verify {

/// Number of representable values strictly between x and y, plus one;
/// 0 iff x == y (so +0 and -0 are at distance 0).  Any NaN gives
/// infinity.
template <typename T>
double ulp_distance(T x, T y) {
  static_assert(std::is_floating_point_v<T>);
  if (std::isnan(x) || std::isnan(y)) {
    return std::numeric_limits<double>::infinity();
  }
  if (x == y) return 0.0;
  using Bits = std::conditional_t<sizeof(T) == 4, std::int32_t, std::int64_t>;
  // Map the sign-magnitude encoding onto a monotone integer line.
  auto ordered = [](T v) {
    const Bits b = std::bit_cast<Bits>(v);
    return b < 0 ? static_cast<long double>(std::numeric_limits<Bits>::min()) -
                       static_cast<long double>(b)
                 : static_cast<long double>(b);
  };
  return static_cast<double>(std::fabs(ordered(x) - ordered(y)));
}

/// Spacing of T at |x|: the distance from |x| to the next value up.
template <typename T>
T ulp_of(T x) {
  const T a = std::fabs(x);
  return std::nextafter(a, std::numeric_limits<T>::infinity()) - a;
}

/// |x - y| / (epsilon * scale), where `scale` is the sum of the absolute
/// values of the terms that produced the result.  Under cancellation the
/// result can be far smaller than its terms and ulp_distance is unbounded
/// for any change of summation order, so the unit is one ULP of the terms
/// instead of one ULP of the result.  Falls back to ulp_distance when scale
/// is zero.
///
/// `y` may be wider than T (a higher-precision reference); the spacing is
/// always that of T.
template <typename T, typename U = T>
double scaled_ulp(T x, U y, T scale) {
  if (std::isnan(x) || std::isnan(y)) {
    return std::numeric_limits<double>::infinity();
  }
  if (static_cast<U>(x) == y) return 0.0;
  if (scale == T(0)) return ulp_distance(x, static_cast<T>(y));
  const long double diff =
      std::fabs(static_cast<long double>(x) - static_cast<long double>(y));
  return static_cast<double>(
      diff / (static_cast<long double>(std::numeric_limits<T>::epsilon()) *
              static_cast<long double>(scale)));
}

}  // namespace milc::verify

#endif  // MILC_VERIFY_ULP_HPP_
