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

// Operand types shared by every kernel backend.
//
// The layouts mirror the MILC structures: a complex number is two adjacent
// scalars (real first), a vector is three complex numbers and a matrix is
// nine complex numbers stored row-major.  All types are standard-layout
// aggregates so that lattice storage can place them back to back without
// padding.

#ifndef MILC_SU3_TYPES_HPP_
#define MILC_SU3_TYPES_HPP_

#include <array>
#include <cstddef>
#include <type_traits>

namespace milc {

enum class Precision { kSingle, kDouble };

const char* to_string(Precision p);

template <typename T>
struct Complex {
  T re{};
  T im{};

  friend bool operator==(const Complex&, const Complex&) = default;
};

template <typename T>
struct Su3Vector {
  std::array<Complex<T>, 3> c{};

  Complex<T>& operator[](std::size_t i) { return c[i]; }
  const Complex<T>& operator[](std::size_t i) const { return c[i]; }
  Complex<T>* data() { return c.data(); }
  const Complex<T>* data() const { return c.data(); }

  friend bool operator==(const Su3Vector&, const Su3Vector&) = default;
};

/// 3x3 complex matrix, row-major: `m(i, j)` is row i, column j.
template <typename T>
struct Su3Matrix {
  std::array<Complex<T>, 9> e{};

  Complex<T>& operator()(std::size_t i, std::size_t j) { return e[3 * i + j]; }
  const Complex<T>& operator()(std::size_t i, std::size_t j) const {
    return e[3 * i + j];
  }
  Complex<T>* data() { return e.data(); }
  const Complex<T>* data() const { return e.data(); }

  friend bool operator==(const Su3Matrix&, const Su3Matrix&) = default;
};

/// Pair of colour vectors sharing one matrix application.
template <typename T>
struct HalfWilsonVector {
  std::array<Su3Vector<T>, 2> h{};

  Su3Vector<T>& operator[](std::size_t i) { return h[i]; }
  const Su3Vector<T>& operator[](std::size_t i) const { return h[i]; }

  friend bool operator==(const HalfWilsonVector&,
                         const HalfWilsonVector&) = default;
};

static_assert(sizeof(Complex<double>) == 16);
static_assert(sizeof(Su3Vector<double>) == 48);
static_assert(sizeof(Su3Matrix<double>) == 144);
static_assert(sizeof(HalfWilsonVector<double>) == 96);
static_assert(sizeof(Su3Matrix<float>) == 72);
static_assert(std::is_standard_layout_v<Su3Matrix<double>>);
static_assert(std::is_trivially_copyable_v<Su3Matrix<float>>);

// Number of real scalars in each operand type.
inline constexpr std::size_t kVectorScalars = 6;
inline constexpr std::size_t kMatrixScalars = 18;

template <typename T>
Su3Matrix<T> identity_matrix() {
  Su3Matrix<T> m;
  for (std::size_t i = 0; i < 3; ++i) m(i, i).re = T(1);
  return m;
}

template <typename T>
Su3Vector<T> unit_vector(std::size_t k) {
  Su3Vector<T> v;
  v[k].re = T(1);
  return v;
}

/// Conjugate transpose.
template <typename T>
Su3Matrix<T> adjoint(const Su3Matrix<T>& a) {
  Su3Matrix<T> r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      r(i, j).re = a(j, i).re;
      r(i, j).im = -a(j, i).im;
    }
  }
  return r;
}

}  // namespace milc

#endif  // MILC_SU3_TYPES_HPP_
