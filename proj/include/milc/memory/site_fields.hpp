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

// Per-site storage for a lattice, array-of-site-structures.
//
// Each site record holds, in order: 4 link matrices (one per positive
// direction), `matrix_fields` scratch matrices, `vector_fields` su3 vectors
// and `hw_fields` half-Wilson vectors.  Records are padded to a multiple of
// the layout alignment, so with misalign = 0 every record starts aligned.
// A non-zero misalign shifts the whole field by that many bytes.

#ifndef MILC_MEMORY_SITE_FIELDS_HPP_
#define MILC_MEMORY_SITE_FIELDS_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "milc/memory/aligned_buffer.hpp"
#include "milc/memory/lattice.hpp"
#include "milc/simd/batch.hpp"
#include "milc/su3/types.hpp"

namespace milc {

struct SiteLayout {
  int vector_fields = 8;
  int matrix_fields = 1;
  int hw_fields = 2;
  std::size_t alignment = kDefaultAlignment;
  std::size_t misalign = 0;
};

template <typename T>
class SiteFields {
 public:
  using Vector = Su3Vector<T>;
  using Matrix = Su3Matrix<T>;
  using HalfWilson = HalfWilsonVector<T>;
  using Links = std::array<Matrix, 4>;

  SiteFields(const Lattice4D& lattice, SiteLayout layout = {})
      : layout_(layout), volume_(lattice.volume()) {
    if (layout.vector_fields < 0 || layout.matrix_fields < 0 ||
        layout.hw_fields < 0) {
      throw std::invalid_argument("negative field count in site layout");
    }
    matrix_offset_ = sizeof(Links);
    vector_offset_ = matrix_offset_ + layout.matrix_fields * sizeof(Matrix);
    hw_offset_ = vector_offset_ + layout.vector_fields * sizeof(Vector);
    const std::size_t raw = hw_offset_ + layout.hw_fields * sizeof(HalfWilson);
    site_bytes_ = (raw + layout.alignment - 1) / layout.alignment *
                  layout.alignment;
    buffer_ = allocate_aligned(volume_ * site_bytes_ + layout.misalign,
                               layout.alignment);
    base_ = buffer_.data() + layout.misalign;
  }

  std::size_t volume() const { return volume_; }
  std::size_t site_bytes() const { return site_bytes_; }
  const SiteLayout& layout() const { return layout_; }
  std::byte* base() { return base_; }
  const std::byte* base() const { return base_; }
  std::size_t payload_bytes() const { return volume_ * site_bytes_; }

  // A non-zero misalign makes these references under-aligned for their
  // type; x86-64 and ARMv8 tolerate unaligned scalar access.
  Links& links(std::size_t s) { return at<Links>(s, 0); }
  Matrix& link(std::size_t s, int d) { return links(s)[check(d, 4)]; }
  Matrix& matrix(std::size_t s, int k) {
    return at<Matrix>(s, matrix_offset_ +
                             check(k, layout_.matrix_fields) * sizeof(Matrix));
  }
  Vector& vector(std::size_t s, int k) {
    return at<Vector>(s, vector_offset_ +
                             check(k, layout_.vector_fields) * sizeof(Vector));
  }
  HalfWilson& hw(std::size_t s, int k) {
    return at<HalfWilson>(
        s, hw_offset_ + check(k, layout_.hw_fields) * sizeof(HalfWilson));
  }

  // Strided views for batch_apply.
  OperandArray link_array() { return view(OperandKind::kMatrix4, 0); }
  OperandArray link_array(int d) {
    return view(OperandKind::kMatrix, check(d, 4) * sizeof(Matrix));
  }
  OperandArray matrix_array(int k) {
    return view(OperandKind::kMatrix,
                matrix_offset_ +
                    check(k, layout_.matrix_fields) * sizeof(Matrix));
  }
  OperandArray vector_array(int k) {
    return view(OperandKind::kVector,
                vector_offset_ +
                    check(k, layout_.vector_fields) * sizeof(Vector));
  }
  /// Vectors k..k+3 of each site as one four-vector operand.
  OperandArray vector4_array(int k) {
    check(k + 3, layout_.vector_fields);
    return view(OperandKind::kVector4,
                vector_offset_ + check(k, layout_.vector_fields) *
                                     sizeof(Vector));
  }
  OperandArray hw_array(int k) {
    return view(OperandKind::kHalfWilson,
                hw_offset_ + check(k, layout_.hw_fields) * sizeof(HalfWilson));
  }

 private:
  static std::size_t check(int k, int n) {
    if (k < 0 || k >= n) {
      throw std::out_of_range("site field " + std::to_string(k) +
                              " outside [0, " + std::to_string(n) + ")");
    }
    return static_cast<std::size_t>(k);
  }

  template <typename U>
  U& at(std::size_t s, std::size_t offset) {
    if (s >= volume_) throw std::out_of_range("site index beyond volume");
    return *reinterpret_cast<U*>(base_ + s * site_bytes_ + offset);
  }

  OperandArray view(OperandKind kind, std::size_t offset) {
    return {kind, base_ + offset, site_bytes_, volume_};
  }

  SiteLayout layout_;
  std::size_t volume_;
  std::size_t matrix_offset_ = 0;
  std::size_t vector_offset_ = 0;
  std::size_t hw_offset_ = 0;
  std::size_t site_bytes_ = 0;
  AlignedBuffer buffer_;
  std::byte* base_ = nullptr;
};

}  // namespace milc

#endif  // MILC_MEMORY_SITE_FIELDS_HPP_
