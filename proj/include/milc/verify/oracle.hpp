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

// Textbook complex linear algebra, written without reference to the
// kernels, used as the ground truth for the scalar backend.
//
// Everything is generic over the scalar type.  Running it on AbsBound<T>
// instead of T yields, for every output component, the sum of the absolute
// values of the terms that produced it.

#ifndef MILC_VERIFY_ORACLE_HPP_
#define MILC_VERIFY_ORACLE_HPP_

#include <array>
#include <cmath>
#include <cstddef>

#include "milc/su3/types.hpp"

namespace milc::verify {

/// Magnitude-tracking scalar: both + and - add magnitudes, negation is the
/// identity.
template <typename T>
struct AbsBound {
  T v{};

  AbsBound() = default;
  AbsBound(T x) : v(std::fabs(x)) {}  // NOLINT: implicit by design

  friend AbsBound operator+(AbsBound a, AbsBound b) { return raw(a.v + b.v); }
  friend AbsBound operator-(AbsBound a, AbsBound b) { return raw(a.v + b.v); }
  friend AbsBound operator*(AbsBound a, AbsBound b) { return raw(a.v * b.v); }
  AbsBound operator-() const { return *this; }
  friend bool operator==(AbsBound, AbsBound) = default;

 private:
  static AbsBound raw(T x) {
    AbsBound r;
    r.v = x;
    return r;
  }
};

namespace oracle {

template <typename S>
Complex<S> cadd(const Complex<S>& x, const Complex<S>& y) {
  return {x.re + y.re, x.im + y.im};
}

template <typename S>
Complex<S> csub(const Complex<S>& x, const Complex<S>& y) {
  return {x.re - y.re, x.im - y.im};
}

template <typename S>
Complex<S> cmul(const Complex<S>& x, const Complex<S>& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

template <typename S>
Complex<S> conj(const Complex<S>& x) {
  return {x.re, -x.im};
}

template <typename S>
Su3Matrix<S> dagger(const Su3Matrix<S>& a) {
  Su3Matrix<S> r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = conj(a(j, i));
  }
  return r;
}

template <typename S>
Su3Vector<S> vec_add(const Su3Vector<S>& a, const Su3Vector<S>& b) {
  Su3Vector<S> r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = cadd(a[i], b[i]);
  return r;
}

template <typename S>
Su3Vector<S> vec_sub(const Su3Vector<S>& a, const Su3Vector<S>& b) {
  Su3Vector<S> r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = csub(a[i], b[i]);
  return r;
}

template <typename S>
Su3Vector<S> mat_vec(const Su3Matrix<S>& a, const Su3Vector<S>& b) {
  Su3Vector<S> r;
  for (std::size_t i = 0; i < 3; ++i) {
    Complex<S> sum = cmul(a(i, 0), b[0]);
    for (std::size_t j = 1; j < 3; ++j) sum = cadd(sum, cmul(a(i, j), b[j]));
    r[i] = sum;
  }
  return r;
}

template <typename S>
Su3Matrix<S> mat_mat(const Su3Matrix<S>& a, const Su3Matrix<S>& b) {
  Su3Matrix<S> r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      Complex<S> sum = cmul(a(i, 0), b(0, k));
      for (std::size_t j = 1; j < 3; ++j) {
        sum = cadd(sum, cmul(a(i, j), b(j, k)));
      }
      r(i, k) = sum;
    }
  }
  return r;
}

template <typename S>
Su3Vector<S> scale_add(const Su3Vector<S>& a, const Su3Vector<S>& b, S s) {
  Su3Vector<S> r;
  for (std::size_t i = 0; i < 3; ++i) {
    r[i] = {a[i].re + s * b[i].re, a[i].im + s * b[i].im};
  }
  return r;
}

template <typename S>
Su3Matrix<S> scale_add(const Su3Matrix<S>& a, const Su3Matrix<S>& b, S s) {
  Su3Matrix<S> r;
  for (std::size_t k = 0; k < 9; ++k) {
    r.e[k] = {a.e[k].re + s * b.e[k].re, a.e[k].im + s * b.e[k].im};
  }
  return r;
}

template <typename S>
Su3Matrix<S> outer(const Su3Vector<S>& a, const Su3Vector<S>& b) {
  Su3Matrix<S> r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = cmul(a[i], conj(b[j]));
  }
  return r;
}

}  // namespace oracle
}  // namespace milc::verify

#endif  // MILC_VERIFY_ORACLE_HPP_
