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

// Seeded random operands and a uniform way to run any routine on them.
//
// Every trial of a check draws one OperandSet from an engine seeded with
// (seed, routine, trial), so a failing trial can be replayed alone.
// Outputs are flattened to the real scalars of the routine's results in
// declaration order.

#ifndef MILC_VERIFY_OPERANDS_HPP_
#define MILC_VERIFY_OPERANDS_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "milc/su3/routine.hpp"
#include "milc/su3/types.hpp"
#include "milc/verify/oracle.hpp"

namespace milc::verify {

// Members are 16-byte aligned so the aligned entry points accept them.
template <typename S>
struct OperandSet {
  alignas(16) Su3Matrix<S> a;  // first matrix
  alignas(16) Su3Matrix<S> b;  // second matrix
  alignas(16) std::array<Su3Matrix<S>, 4> a4;
  alignas(16) Su3Vector<S> u;  // first vector
  alignas(16) Su3Vector<S> w;  // second vector
  alignas(16) std::array<Su3Vector<S>, 4> v4;
  alignas(16) HalfWilsonVector<S> h;
  S s{};
};

std::mt19937_64 trial_engine(std::uint64_t seed, Routine routine,
                             std::uint64_t trial);

/// Uniform on [-1, 1], exactly representable in T, built from raw bits so
/// the sequence is identical on every standard library.
template <typename T>
T uniform_signed(std::mt19937_64& g) {
  constexpr int kBits = std::numeric_limits<T>::digits;
  const std::uint64_t k = g() >> (64 - kBits);  // [0, 2^kBits)
  return static_cast<T>(std::ldexp(static_cast<double>(k), 1 - kBits)) - T(1);
}

template <typename T>
void fill(std::mt19937_64& g, Complex<T>& z) {
  z.re = uniform_signed<T>(g);
  z.im = uniform_signed<T>(g);
}

template <typename T>
Su3Vector<T> random_vector(std::mt19937_64& g) {
  Su3Vector<T> v;
  for (auto& z : v.c) fill(g, z);
  return v;
}

template <typename T>
Su3Matrix<T> random_matrix(std::mt19937_64& g) {
  Su3Matrix<T> m;
  for (auto& z : m.e) fill(g, z);
  return m;
}

/// Product of three two-parameter plane rotations
///   [[c, -s e^{i phi}], [s e^{-i phi}, c]]
/// on the planes (0,1), (1,2) and (0,2).  Unitary up to rounding; built in
/// double and rounded once.
template <typename T>
Su3Matrix<T> random_unitary(std::mt19937_64& g) {
  constexpr double kPi = 3.14159265358979323846;
  Su3Matrix<double> u = identity_matrix<double>();
  constexpr std::array<std::array<int, 2>, 3> kPlanes{{{0, 1}, {1, 2}, {0, 2}}};
  for (const auto& [p, q] : kPlanes) {
    const double theta = kPi * uniform_signed<double>(g);
    const double phi = kPi * uniform_signed<double>(g);
    Su3Matrix<double> r = identity_matrix<double>();
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    r(p, p) = {c, 0.0};
    r(q, q) = {c, 0.0};
    r(p, q) = {-s * std::cos(phi), -s * std::sin(phi)};
    r(q, p) = {s * std::cos(phi), -s * std::sin(phi)};
    u = oracle::mat_mat(r, u);
  }
  Su3Matrix<T> out;
  for (std::size_t k = 0; k < 9; ++k) {
    out.e[k] = {static_cast<T>(u.e[k].re), static_cast<T>(u.e[k].im)};
  }
  return out;
}

template <typename T>
OperandSet<T> random_operands(std::mt19937_64& g) {
  OperandSet<T> o;
  o.a = random_matrix<T>(g);
  o.b = random_matrix<T>(g);
  for (auto& m : o.a4) m = random_matrix<T>(g);
  o.u = random_vector<T>(g);
  o.w = random_vector<T>(g);
  for (auto& v : o.v4) v = random_vector<T>(g);
  o.h.h[0] = random_vector<T>(g);
  o.h.h[1] = random_vector<T>(g);
  o.s = uniform_signed<T>(g);
  return o;
}

template <typename T>
OperandSet<T> trial_operands(std::uint64_t seed, Routine routine,
                             std::uint64_t trial) {
  auto g = trial_engine(seed, routine, trial);
  return random_operands<T>(g);
}

/// Element-wise image of an operand set under f.
template <typename S2, typename S, typename F>
OperandSet<S2> transform(const OperandSet<S>& o, F f) {
  auto cx = [&](const Complex<S>& z) { return Complex<S2>{f(z.re), f(z.im)}; };
  auto vec = [&](const Su3Vector<S>& v) {
    Su3Vector<S2> r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = cx(v[i]);
    return r;
  };
  auto mat = [&](const Su3Matrix<S>& m) {
    Su3Matrix<S2> r;
    for (std::size_t k = 0; k < 9; ++k) r.e[k] = cx(m.e[k]);
    return r;
  };
  OperandSet<S2> r;
  r.a = mat(o.a);
  r.b = mat(o.b);
  for (std::size_t d = 0; d < 4; ++d) {
    r.a4[d] = mat(o.a4[d]);
    r.v4[d] = vec(o.v4[d]);
  }
  r.u = vec(o.u);
  r.w = vec(o.w);
  r.h.h[0] = vec(o.h.h[0]);
  r.h.h[1] = vec(o.h.h[1]);
  r.s = f(o.s);
  return r;
}

namespace detail {

template <typename S>
void append(std::vector<S>& out, const Su3Vector<S>& v) {
  for (const auto& z : v.c) {
    out.push_back(z.re);
    out.push_back(z.im);
  }
}

template <typename S>
void append(std::vector<S>& out, const Su3Matrix<S>& m) {
  for (const auto& z : m.e) {
    out.push_back(z.re);
    out.push_back(z.im);
  }
}

template <typename S>
void append(std::vector<S>& out, const HalfWilsonVector<S>& h) {
  append(out, h.h[0]);
  append(out, h.h[1]);
}

}  // namespace detail

/// Runs `routine` on `o` through backend B; returns the flattened results.
/// Inputs are bound as: matrices a, b (or a4), vectors u, w (or v4),
/// half-Wilson h, scalar s.  sub_four_su3_vecs updates a copy of u.
template <typename B, typename T>
std::vector<T> run_routine(Routine routine, const OperandSet<T>& o) {
  std::vector<T> out;
  out.reserve(72);
  using V = Su3Vector<T>;
  using M = Su3Matrix<T>;
  const std::span<const M, 4> a4(o.a4);
  switch (routine) {
    case Routine::kAddSu3Vector: {
      alignas(16) V c;
      B::add_su3_vector(o.u, o.w, c);
      detail::append(out, c);
      break;
    }
    case Routine::kMultAdjSu3MatHwvec: {
      alignas(16) HalfWilsonVector<T> c;
      B::mult_adj_su3_mat_hwvec(o.a, o.h, c);
      detail::append(out, c);
      break;
    }
    case Routine::kMultAdjSu3MatVec: {
      alignas(16) V c;
      B::mult_adj_su3_mat_vec(o.a, o.u, c);
      detail::append(out, c);
      break;
    }
    case Routine::kMultAdjSu3MatVec4dir: {
      alignas(16) std::array<V, 4> c;
      B::mult_adj_su3_mat_vec_4dir(a4, o.u, std::span<V, 4>(c));
      for (const auto& v : c) detail::append(out, v);
      break;
    }
    case Routine::kMultAdjSu3Mat4vec: {
      alignas(16) V c0, c1, c2, c3;
      B::mult_adj_su3_mat_4vec(a4, o.u, c0, c1, c2, c3);
      for (const V* v : {&c0, &c1, &c2, &c3}) detail::append(out, *v);
      break;
    }
    case Routine::kMultSu3An: {
      alignas(16) M c;
      B::mult_su3_an(o.a, o.b, c);
      detail::append(out, c);
      break;
    }
    case Routine::kMultSu3MatHwvec: {
      alignas(16) HalfWilsonVector<T> c;
      B::mult_su3_mat_hwvec(o.a, o.h, c);
      detail::append(out, c);
      break;
    }
    case Routine::kMultSu3Na: {
      alignas(16) M c;
      B::mult_su3_na(o.a, o.b, c);
      detail::append(out, c);
      break;
    }
    case Routine::kMultSu3Nn: {
      alignas(16) M c;
      B::mult_su3_nn(o.a, o.b, c);
      detail::append(out, c);
      break;
    }
    case Routine::kMultSu3MatVec: {
      alignas(16) V c;
      B::mult_su3_mat_vec(o.a, o.u, c);
      detail::append(out, c);
      break;
    }
    case Routine::kMultSu3MatVecSum4dir: {
      alignas(16) V c;
      B::mult_su3_mat_vec_sum_4dir(a4, std::span<const V, 4>(o.v4), c);
      detail::append(out, c);
      break;
    }
    case Routine::kScalarMultAddSu3Matrix: {
      alignas(16) M c;
      B::scalar_mult_add_su3_matrix(o.a, o.b, o.s, c);
      detail::append(out, c);
      break;
    }
    case Routine::kScalarMultAddSu3Vector: {
      alignas(16) V c;
      B::scalar_mult_add_su3_vector(o.u, o.w, o.s, c);
      detail::append(out, c);
      break;
    }
    case Routine::kSu3Projector: {
      alignas(16) M c;
      B::su3_projector(o.u, o.w, c);
      detail::append(out, c);
      break;
    }
    case Routine::kSubFourSu3Vecs: {
      alignas(16) V c = o.u;
      B::sub_four_su3_vecs(c, o.v4[0], o.v4[1], o.v4[2], o.v4[3]);
      detail::append(out, c);
      break;
    }
  }
  return out;
}

/// The oracle's answer for `routine`, flattened like run_routine.
template <typename S>
std::vector<S> oracle_routine(Routine routine, const OperandSet<S>& o) {
  namespace O = oracle;
  std::vector<S> out;
  out.reserve(72);
  switch (routine) {
    case Routine::kAddSu3Vector:
      detail::append(out, O::vec_add(o.u, o.w));
      break;
    case Routine::kMultAdjSu3MatHwvec:
      detail::append(out, O::mat_vec(O::dagger(o.a), o.h.h[0]));
      detail::append(out, O::mat_vec(O::dagger(o.a), o.h.h[1]));
      break;
    case Routine::kMultAdjSu3MatVec:
      detail::append(out, O::mat_vec(O::dagger(o.a), o.u));
      break;
    case Routine::kMultAdjSu3MatVec4dir:
    case Routine::kMultAdjSu3Mat4vec:
      for (const auto& m : o.a4) detail::append(out, O::mat_vec(O::dagger(m), o.u));
      break;
    case Routine::kMultSu3An:
      detail::append(out, O::mat_mat(O::dagger(o.a), o.b));
      break;
    case Routine::kMultSu3MatHwvec:
      detail::append(out, O::mat_vec(o.a, o.h.h[0]));
      detail::append(out, O::mat_vec(o.a, o.h.h[1]));
      break;
    case Routine::kMultSu3Na:
      detail::append(out, O::mat_mat(o.a, O::dagger(o.b)));
      break;
    case Routine::kMultSu3Nn:
      detail::append(out, O::mat_mat(o.a, o.b));
      break;
    case Routine::kMultSu3MatVec:
      detail::append(out, O::mat_vec(o.a, o.u));
      break;
    case Routine::kMultSu3MatVecSum4dir: {
      Su3Vector<S> sum = O::mat_vec(o.a4[0], o.v4[0]);
      for (std::size_t d = 1; d < 4; ++d) {
        sum = O::vec_add(sum, O::mat_vec(o.a4[d], o.v4[d]));
      }
      detail::append(out, sum);
      break;
    }
    case Routine::kScalarMultAddSu3Matrix:
      detail::append(out, O::scale_add(o.a, o.b, o.s));
      break;
    case Routine::kScalarMultAddSu3Vector:
      detail::append(out, O::scale_add(o.u, o.w, o.s));
      break;
    case Routine::kSu3Projector:
      detail::append(out, O::outer(o.u, o.w));
      break;
    case Routine::kSubFourSu3Vecs: {
      Su3Vector<S> r = o.u;
      for (const auto& b : o.v4) r = O::vec_sub(r, b);
      detail::append(out, r);
      break;
    }
  }
  return out;
}

/// Per-component sum of absolute terms for `routine` on `o`.
template <typename T>
std::vector<T> oracle_scale(Routine routine, const OperandSet<T>& o) {
  const auto mags = oracle_routine(
      routine, transform<AbsBound<T>>(o, [](T x) { return AbsBound<T>(x); }));
  std::vector<T> out(mags.size());
  for (std::size_t k = 0; k < mags.size(); ++k) out[k] = mags[k].v;
  return out;
}

}  // namespace milc::verify

#endif  // MILC_VERIFY_OPERANDS_HPP_
