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

// Applying one routine across many sites.
//
// Operands are described by OperandArray: a base address, a byte stride
// between consecutive sites and a site count.  Contiguous arrays use a stride
// equal to the operand size; lattice fields stored site by site use the site
// size.  A stride of zero repeats one operand for every site.
// batch_apply(r, xs, n) computes exactly what n single calls would.

#ifndef MILC_SIMD_BATCH_HPP_
#define MILC_SIMD_BATCH_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "milc/simd/backend.hpp"
#include "milc/su3/routine.hpp"
#include "milc/su3/types.hpp"

namespace milc {

struct OperandArray {
  OperandKind kind = OperandKind::kVector;
  std::byte* base = nullptr;
  std::size_t stride = 0;  // bytes; 0 repeats one operand
  std::size_t count = 0;
};

template <typename T>
constexpr std::size_t operand_size(OperandKind kind) {
  switch (kind) {
    case OperandKind::kVector:
      return sizeof(Su3Vector<T>);
    case OperandKind::kMatrix:
      return sizeof(Su3Matrix<T>);
    case OperandKind::kHalfWilson:
      return sizeof(HalfWilsonVector<T>);
    case OperandKind::kVector4:
      return 4 * sizeof(Su3Vector<T>);
    case OperandKind::kMatrix4:
      return 4 * sizeof(Su3Matrix<T>);
  }
  return 0;
}

namespace detail {

template <typename U>
OperandArray contiguous_array(OperandKind kind, std::span<U> xs) {
  using V = std::remove_const_t<U>;
  return {kind,
          const_cast<std::byte*>(reinterpret_cast<const std::byte*>(xs.data())),
          sizeof(V), xs.size()};
}

}  // namespace detail

// Contiguous operand arrays.  The const overloads are for inputs; batch_apply
// never writes through an input array.
template <typename T>
OperandArray operands(std::span<const Su3Vector<T>> xs) {
  return detail::contiguous_array(OperandKind::kVector, xs);
}
template <typename T>
OperandArray operands(std::span<Su3Vector<T>> xs) {
  return detail::contiguous_array(OperandKind::kVector, xs);
}
template <typename T>
OperandArray operands(std::span<const Su3Matrix<T>> xs) {
  return detail::contiguous_array(OperandKind::kMatrix, xs);
}
template <typename T>
OperandArray operands(std::span<Su3Matrix<T>> xs) {
  return detail::contiguous_array(OperandKind::kMatrix, xs);
}
template <typename T>
OperandArray operands(std::span<const HalfWilsonVector<T>> xs) {
  return detail::contiguous_array(OperandKind::kHalfWilson, xs);
}
template <typename T>
OperandArray operands(std::span<HalfWilsonVector<T>> xs) {
  return detail::contiguous_array(OperandKind::kHalfWilson, xs);
}
template <typename T>
OperandArray operands(std::span<const std::array<Su3Vector<T>, 4>> xs) {
  return detail::contiguous_array(OperandKind::kVector4, xs);
}
template <typename T>
OperandArray operands(std::span<std::array<Su3Vector<T>, 4>> xs) {
  return detail::contiguous_array(OperandKind::kVector4, xs);
}
template <typename T>
OperandArray operands(std::span<const std::array<Su3Matrix<T>, 4>> xs) {
  return detail::contiguous_array(OperandKind::kMatrix4, xs);
}
template <typename T>
OperandArray operands(std::span<std::array<Su3Matrix<T>, 4>> xs) {
  return detail::contiguous_array(OperandKind::kMatrix4, xs);
}

/// Throws std::invalid_argument when the arrays do not match the routine's
/// signature or do not all hold `count` sites.
template <typename T>
void validate_batch(Routine routine, std::span<const OperandArray> inputs,
                    std::span<const OperandArray> outputs, std::size_t count) {
  const RoutineSignature sig = signature(routine);
  const std::string name(routine_name(routine));
  if (inputs.size() != sig.input_count() ||
      outputs.size() != sig.output_count()) {
    throw std::invalid_argument(name + ": expected " +
                                std::to_string(sig.input_count()) +
                                " input and " +
                                std::to_string(sig.output_count()) +
                                " output arrays");
  }
  auto check = [&](const OperandArray& x, OperandKind kind, const char* role,
                   std::size_t index) {
    const std::string where = name + ": " + role + " " + std::to_string(index);
    if (x.kind != kind) throw std::invalid_argument(where + ": wrong operand kind");
    if (x.count != count) {
      throw std::invalid_argument(where + ": length " + std::to_string(x.count) +
                                  " does not match site count " +
                                  std::to_string(count));
    }
    if (count > 0 && x.base == nullptr) {
      throw std::invalid_argument(where + ": null base");
    }
    if (count > 1 && x.stride != 0 && x.stride < operand_size<T>(kind)) {
      throw std::invalid_argument(where + ": stride smaller than operand");
    }
  };
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    check(inputs[i], *sig.inputs[i], "input", i);
  }
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    check(outputs[i], *sig.outputs[i], "output", i);
  }
}

template <typename Backend, typename T>
void batch_apply(Routine routine, std::span<const OperandArray> inputs,
                 std::span<const OperandArray> outputs, std::size_t count,
                 T scalar = T(0)) {
  validate_batch<T>(routine, inputs, outputs, count);

  auto at = [](const OperandArray& x, std::size_t i) {
    return x.base + i * x.stride;
  };
  auto in = [&]<typename U>(std::size_t k, std::size_t i) -> const U& {
    return *reinterpret_cast<const U*>(at(inputs[k], i));
  };
  auto out = [&]<typename U>(std::size_t k, std::size_t i) -> U& {
    return *reinterpret_cast<U*>(at(outputs[k], i));
  };
  auto in_m4 = [&](std::size_t k, std::size_t i) {
    return std::span<const Su3Matrix<T>, 4>(
        reinterpret_cast<const Su3Matrix<T>*>(at(inputs[k], i)), 4);
  };
  using V = Su3Vector<T>;
  using M = Su3Matrix<T>;
  using H = HalfWilsonVector<T>;

  switch (routine) {
    case Routine::kAddSu3Vector:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::add_su3_vector(in.template operator()<V>(0, i),
                                in.template operator()<V>(1, i),
                                out.template operator()<V>(0, i));
      }
      break;
    case Routine::kMultAdjSu3MatHwvec:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_adj_su3_mat_hwvec(in.template operator()<M>(0, i),
                                        in.template operator()<H>(1, i),
                                        out.template operator()<H>(0, i));
      }
      break;
    case Routine::kMultAdjSu3MatVec:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_adj_su3_mat_vec(in.template operator()<M>(0, i),
                                      in.template operator()<V>(1, i),
                                      out.template operator()<V>(0, i));
      }
      break;
    case Routine::kMultAdjSu3MatVec4dir:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_adj_su3_mat_vec_4dir(
            in_m4(0, i), in.template operator()<V>(1, i),
            std::span<V, 4>(reinterpret_cast<V*>(at(outputs[0], i)), 4));
      }
      break;
    case Routine::kMultAdjSu3Mat4vec:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_adj_su3_mat_4vec(
            in_m4(0, i), in.template operator()<V>(1, i),
            out.template operator()<V>(0, i), out.template operator()<V>(1, i),
            out.template operator()<V>(2, i), out.template operator()<V>(3, i));
      }
      break;
    case Routine::kMultSu3An:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_su3_an(in.template operator()<M>(0, i),
                             in.template operator()<M>(1, i),
                             out.template operator()<M>(0, i));
      }
      break;
    case Routine::kMultSu3MatHwvec:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_su3_mat_hwvec(in.template operator()<M>(0, i),
                                    in.template operator()<H>(1, i),
                                    out.template operator()<H>(0, i));
      }
      break;
    case Routine::kMultSu3Na:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_su3_na(in.template operator()<M>(0, i),
                             in.template operator()<M>(1, i),
                             out.template operator()<M>(0, i));
      }
      break;
    case Routine::kMultSu3Nn:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_su3_nn(in.template operator()<M>(0, i),
                             in.template operator()<M>(1, i),
                             out.template operator()<M>(0, i));
      }
      break;
    case Routine::kMultSu3MatVec:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_su3_mat_vec(in.template operator()<M>(0, i),
                                  in.template operator()<V>(1, i),
                                  out.template operator()<V>(0, i));
      }
      break;
    case Routine::kMultSu3MatVecSum4dir:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::mult_su3_mat_vec_sum_4dir(
            in_m4(0, i),
            std::span<const V, 4>(
                reinterpret_cast<const V*>(at(inputs[1], i)), 4),
            out.template operator()<V>(0, i));
      }
      break;
    case Routine::kScalarMultAddSu3Matrix:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::scalar_mult_add_su3_matrix(in.template operator()<M>(0, i),
                                            in.template operator()<M>(1, i),
                                            scalar,
                                            out.template operator()<M>(0, i));
      }
      break;
    case Routine::kScalarMultAddSu3Vector:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::scalar_mult_add_su3_vector(in.template operator()<V>(0, i),
                                            in.template operator()<V>(1, i),
                                            scalar,
                                            out.template operator()<V>(0, i));
      }
      break;
    case Routine::kSu3Projector:
      for (std::size_t i = 0; i < count; ++i) {
        Backend::su3_projector(in.template operator()<V>(0, i),
                               in.template operator()<V>(1, i),
                               out.template operator()<M>(0, i));
      }
      break;
    case Routine::kSubFourSu3Vecs:
      // In place on the first input.
      for (std::size_t i = 0; i < count; ++i) {
        Backend::sub_four_su3_vecs(*reinterpret_cast<V*>(at(inputs[0], i)),
                                   in.template operator()<V>(1, i),
                                   in.template operator()<V>(2, i),
                                   in.template operator()<V>(3, i),
                                   in.template operator()<V>(4, i));
      }
      break;
  }
}

/// Runtime backend selection.  `aligned_entry` selects the aligned vector
/// entry points and is ignored for the scalar backend.
template <typename T>
void batch_apply(BackendKind backend, bool aligned_entry, Routine routine,
                 std::span<const OperandArray> inputs,
                 std::span<const OperandArray> outputs, std::size_t count,
                 T scalar = T(0)) {
  if (backend == BackendKind::kScalar) {
    batch_apply<ScalarBackend, T>(routine, inputs, outputs, count, scalar);
  } else if (aligned_entry) {
    batch_apply<AlignedVectorBackend, T>(routine, inputs, outputs, count,
                                         scalar);
  } else {
    batch_apply<VectorBackend, T>(routine, inputs, outputs, count, scalar);
  }
}

}  // namespace milc

#endif  // MILC_SIMD_BATCH_HPP_
