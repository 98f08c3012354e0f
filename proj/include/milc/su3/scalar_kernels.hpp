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

// Scalar reference implementations of the MILC SU(3) routines.
//
// Every kernel is a template over the scalar type so that the same code can
// run on float, double, or on instrumented scalar types (operation counting,
// symbolic expansion).  float and double are instantiated once in the
// library; see scalar_kernels.cpp.
//
// Complex multiply-accumulate follows a fixed evaluation order: the products
// x.re*y.re, x.re*y.im, x.im*y.re and x.im*y.im are summed into four separate
// partial sums over all terms, left to right, and combined once at the end.
// For the adjoint matrix-vector product this gives
//
//   C0.re = (A00.re*B0.re + A10.re*B1.re + A20.re*B2.re)
//         + (A00.im*B0.im + A10.im*B1.im + A20.im*B2.im)
//   C0.im = (A00.re*B0.im + A10.re*B1.im + A20.re*B2.im)
//         - (A00.im*B0.re + A10.im*B1.re + A20.im*B2.re)
//
// which is the order in which a two-lane SIMD unit produces it.  The
// vectorized backend keeps the same partial sums, so both backends round
// identically.
//
// Results must not alias inputs, except for sub_four_su3_vecs which updates
// its first argument in place.

#ifndef MILC_SU3_SCALAR_KERNELS_HPP_
#define MILC_SU3_SCALAR_KERNELS_HPP_

#include <cstddef>
#include <span>

#include "milc/su3/contract.hpp"
#include "milc/su3/types.hpp"

namespace milc {

/// Which factor of each complex product is conjugated.
enum class Conj { kNone, kLeft, kRight };

/// Four partial sums of a complex dot product.
template <typename T>
struct SplitAccumulator {
  T rr, ri, ir, ii;

  SplitAccumulator(const Complex<T>& x, const Complex<T>& y)
      : rr(x.re * y.re), ri(x.re * y.im), ir(x.im * y.re), ii(x.im * y.im) {}

  void add(const Complex<T>& x, const Complex<T>& y) {
    rr = rr + x.re * y.re;
    ri = ri + x.re * y.im;
    ir = ir + x.im * y.re;
    ii = ii + x.im * y.im;
  }

  template <Conj M>
  Complex<T> combine() const {
    if constexpr (M == Conj::kNone) {
      return {rr - ii, ri + ir};
    } else if constexpr (M == Conj::kLeft) {
      return {rr + ii, ri - ir};
    } else {
      return {rr + ii, ir - ri};
    }
  }
};

namespace scalar {

template <typename T>
void add_su3_vector(const Su3Vector<T>& a, const Su3Vector<T>& b,
                    Su3Vector<T>& c) {
  check_no_alias("add_su3_vector", c, a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    c[i].re = a[i].re + b[i].re;
    c[i].im = a[i].im + b[i].im;
  }
}

template <typename T>
void mult_su3_mat_vec(const Su3Matrix<T>& a, const Su3Vector<T>& b,
                      Su3Vector<T>& c) {
  check_no_alias("mult_su3_mat_vec", c, a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    SplitAccumulator<T> acc(a(i, 0), b[0]);
    acc.add(a(i, 1), b[1]);
    acc.add(a(i, 2), b[2]);
    c[i] = acc.template combine<Conj::kNone>();
  }
}

template <typename T>
void mult_adj_su3_mat_vec(const Su3Matrix<T>& a, const Su3Vector<T>& b,
                          Su3Vector<T>& c) {
  check_no_alias("mult_adj_su3_mat_vec", c, a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    SplitAccumulator<T> acc(a(0, i), b[0]);
    acc.add(a(1, i), b[1]);
    acc.add(a(2, i), b[2]);
    c[i] = acc.template combine<Conj::kLeft>();
  }
}

template <typename T>
void mult_su3_nn(const Su3Matrix<T>& a, const Su3Matrix<T>& b,
                 Su3Matrix<T>& c) {
  check_no_alias("mult_su3_nn", c, a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      SplitAccumulator<T> acc(a(i, 0), b(0, k));
      acc.add(a(i, 1), b(1, k));
      acc.add(a(i, 2), b(2, k));
      c(i, k) = acc.template combine<Conj::kNone>();
    }
  }
}

// c = a * adj(b)
template <typename T>
void mult_su3_na(const Su3Matrix<T>& a, const Su3Matrix<T>& b,
                 Su3Matrix<T>& c) {
  check_no_alias("mult_su3_na", c, a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      SplitAccumulator<T> acc(a(i, 0), b(k, 0));
      acc.add(a(i, 1), b(k, 1));
      acc.add(a(i, 2), b(k, 2));
      c(i, k) = acc.template combine<Conj::kRight>();
    }
  }
}

// c = adj(a) * b
template <typename T>
void mult_su3_an(const Su3Matrix<T>& a, const Su3Matrix<T>& b,
                 Su3Matrix<T>& c) {
  check_no_alias("mult_su3_an", c, a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      SplitAccumulator<T> acc(a(0, i), b(0, k));
      acc.add(a(1, i), b(1, k));
      acc.add(a(2, i), b(2, k));
      c(i, k) = acc.template combine<Conj::kLeft>();
    }
  }
}

template <typename T>
void mult_su3_mat_hwvec(const Su3Matrix<T>& a, const HalfWilsonVector<T>& b,
                        HalfWilsonVector<T>& c) {
  check_no_alias("mult_su3_mat_hwvec", c, a, b);
  mult_su3_mat_vec(a, b[0], c[0]);
  mult_su3_mat_vec(a, b[1], c[1]);
}

template <typename T>
void mult_adj_su3_mat_hwvec(const Su3Matrix<T>& a,
                            const HalfWilsonVector<T>& b,
                            HalfWilsonVector<T>& c) {
  check_no_alias("mult_adj_su3_mat_hwvec", c, a, b);
  mult_adj_su3_mat_vec(a, b[0], c[0]);
  mult_adj_su3_mat_vec(a, b[1], c[1]);
}

/// c[d] = adj(a[d]) * b for the four link directions.
template <typename T>
void mult_adj_su3_mat_vec_4dir(std::span<const Su3Matrix<T>, 4> a,
                               const Su3Vector<T>& b,
                               std::span<Su3Vector<T>, 4> c) {
  for (std::size_t d = 0; d < 4; ++d) {
    check_no_alias("mult_adj_su3_mat_vec_4dir", c[d], a[d], b);
    mult_adj_su3_mat_vec(a[d], b, c[d]);
  }
}

/// Same arithmetic as mult_adj_su3_mat_vec_4dir, with four independent
/// destinations.
template <typename T>
void mult_adj_su3_mat_4vec(std::span<const Su3Matrix<T>, 4> a,
                           const Su3Vector<T>& b, Su3Vector<T>& c0,
                           Su3Vector<T>& c1, Su3Vector<T>& c2,
                           Su3Vector<T>& c3) {
  mult_adj_su3_mat_vec(a[0], b, c0);
  mult_adj_su3_mat_vec(a[1], b, c1);
  mult_adj_su3_mat_vec(a[2], b, c2);
  mult_adj_su3_mat_vec(a[3], b, c3);
}

/// c = sum over d of a[d] * b[d].  All twelve products of a row share one
/// set of partial sums.
template <typename T>
void mult_su3_mat_vec_sum_4dir(std::span<const Su3Matrix<T>, 4> a,
                               std::span<const Su3Vector<T>, 4> b,
                               Su3Vector<T>& c) {
  for (std::size_t d = 0; d < 4; ++d) {
    check_no_alias("mult_su3_mat_vec_sum_4dir", c, a[d], b[d]);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    SplitAccumulator<T> acc(a[0](i, 0), b[0][0]);
    acc.add(a[0](i, 1), b[0][1]);
    acc.add(a[0](i, 2), b[0][2]);
    for (std::size_t d = 1; d < 4; ++d) {
      acc.add(a[d](i, 0), b[d][0]);
      acc.add(a[d](i, 1), b[d][1]);
      acc.add(a[d](i, 2), b[d][2]);
    }
    c[i] = acc.template combine<Conj::kNone>();
  }
}

/// c = a + s * b
template <typename T>
void scalar_mult_add_su3_matrix(const Su3Matrix<T>& a, const Su3Matrix<T>& b,
                                T s, Su3Matrix<T>& c) {
  check_no_alias("scalar_mult_add_su3_matrix", c, a, b);
  for (std::size_t k = 0; k < 9; ++k) {
    c.e[k].re = a.e[k].re + s * b.e[k].re;
    c.e[k].im = a.e[k].im + s * b.e[k].im;
  }
}

/// c = a + s * b
template <typename T>
void scalar_mult_add_su3_vector(const Su3Vector<T>& a, const Su3Vector<T>& b,
                                T s, Su3Vector<T>& c) {
  check_no_alias("scalar_mult_add_su3_vector", c, a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    c[i].re = a[i].re + s * b[i].re;
    c[i].im = a[i].im + s * b[i].im;
  }
}

/// Outer product c(i, j) = a[i] * conj(b[j]).
template <typename T>
void su3_projector(const Su3Vector<T>& a, const Su3Vector<T>& b,
                   Su3Matrix<T>& c) {
  check_no_alias("su3_projector", c, a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      c(i, j) = SplitAccumulator<T>(a[i], b[j]).template combine<Conj::kRight>();
    }
  }
}

/// a -= b1 + b2 + b3 + b4, subtracting left to right.
template <typename T>
void sub_four_su3_vecs(Su3Vector<T>& a, const Su3Vector<T>& b1,
                       const Su3Vector<T>& b2, const Su3Vector<T>& b3,
                       const Su3Vector<T>& b4) {
  check_no_alias("sub_four_su3_vecs", a, b1, b2, b3, b4);
  for (std::size_t i = 0; i < 3; ++i) {
    a[i].re = a[i].re - b1[i].re - b2[i].re - b3[i].re - b4[i].re;
    a[i].im = a[i].im - b1[i].im - b2[i].im - b3[i].im - b4[i].im;
  }
}

}  // namespace scalar

#define MILC_SCALAR_KERNELS_DECLARE(EXTERN, T)                                 \
  EXTERN template void scalar::add_su3_vector<T>(                              \
      const Su3Vector<T>&, const Su3Vector<T>&, Su3Vector<T>&);                \
  EXTERN template void scalar::mult_su3_mat_vec<T>(                            \
      const Su3Matrix<T>&, const Su3Vector<T>&, Su3Vector<T>&);                \
  EXTERN template void scalar::mult_adj_su3_mat_vec<T>(                        \
      const Su3Matrix<T>&, const Su3Vector<T>&, Su3Vector<T>&);                \
  EXTERN template void scalar::mult_su3_nn<T>(                                 \
      const Su3Matrix<T>&, const Su3Matrix<T>&, Su3Matrix<T>&);                \
  EXTERN template void scalar::mult_su3_na<T>(                                 \
      const Su3Matrix<T>&, const Su3Matrix<T>&, Su3Matrix<T>&);                \
  EXTERN template void scalar::mult_su3_an<T>(                                 \
      const Su3Matrix<T>&, const Su3Matrix<T>&, Su3Matrix<T>&);                \
  EXTERN template void scalar::mult_su3_mat_hwvec<T>(                          \
      const Su3Matrix<T>&, const HalfWilsonVector<T>&, HalfWilsonVector<T>&);  \
  EXTERN template void scalar::mult_adj_su3_mat_hwvec<T>(                      \
      const Su3Matrix<T>&, const HalfWilsonVector<T>&, HalfWilsonVector<T>&);  \
  EXTERN template void scalar::mult_adj_su3_mat_vec_4dir<T>(                   \
      std::span<const Su3Matrix<T>, 4>, const Su3Vector<T>&,                   \
      std::span<Su3Vector<T>, 4>);                                             \
  EXTERN template void scalar::mult_adj_su3_mat_4vec<T>(                       \
      std::span<const Su3Matrix<T>, 4>, const Su3Vector<T>&, Su3Vector<T>&,    \
      Su3Vector<T>&, Su3Vector<T>&, Su3Vector<T>&);                            \
  EXTERN template void scalar::mult_su3_mat_vec_sum_4dir<T>(                   \
      std::span<const Su3Matrix<T>, 4>, std::span<const Su3Vector<T>, 4>,      \
      Su3Vector<T>&);                                                          \
  EXTERN template void scalar::scalar_mult_add_su3_matrix<T>(                  \
      const Su3Matrix<T>&, const Su3Matrix<T>&, T, Su3Matrix<T>&);             \
  EXTERN template void scalar::scalar_mult_add_su3_vector<T>(                  \
      const Su3Vector<T>&, const Su3Vector<T>&, T, Su3Vector<T>&);             \
  EXTERN template void scalar::su3_projector<T>(                               \
      const Su3Vector<T>&, const Su3Vector<T>&, Su3Matrix<T>&);                \
  EXTERN template void scalar::sub_four_su3_vecs<T>(                           \
      Su3Vector<T>&, const Su3Vector<T>&, const Su3Vector<T>&,                 \
      const Su3Vector<T>&, const Su3Vector<T>&);

MILC_SCALAR_KERNELS_DECLARE(extern, float)
MILC_SCALAR_KERNELS_DECLARE(extern, double)

}  // namespace milc

#endif  // MILC_SU3_SCALAR_KERNELS_HPP_
