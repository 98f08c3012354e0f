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

#include "milc/memory/aligned_buffer.hpp"

#include <bit>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

namespace milc {

AlignedBuffer::~AlignedBuffer() {
  if (data_ != nullptr) {
    ::operator delete(data_, std::align_val_t(alignment_));
  }
}

AlignedBuffer::AlignedBuffer(AlignedBuffer&& other) noexcept
    : data_(std::exchange(other.data_, nullptr)),
      size_(std::exchange(other.size_, 0)),
      alignment_(std::exchange(other.alignment_, 0)) {}

AlignedBuffer& AlignedBuffer::operator=(AlignedBuffer&& other) noexcept {
  if (this != &other) {
    AlignedBuffer tmp(std::move(other));
    std::swap(data_, tmp.data_);
    std::swap(size_, tmp.size_);
    std::swap(alignment_, tmp.alignment_);
  }
  return *this;
}

AlignedBuffer allocate_aligned(std::size_t payload, std::size_t alignment) {
  if (alignment < kMinAlignment || !std::has_single_bit(alignment)) {
    throw std::invalid_argument("alignment must be a power of two >= 8, got " +
                                std::to_string(alignment));
  }
  // Round up so the block also ends on an alignment boundary.
  std::size_t size = (payload + alignment - 1) / alignment * alignment;
  if (size == 0) size = alignment;
  auto* p = static_cast<std::byte*>(
      ::operator new(size, std::align_val_t(alignment)));
  std::memset(p, 0, size);
  return AlignedBuffer(p, size, alignment);
}

std::span<std::byte> misaligned_view(AlignedBuffer& buffer,
                                     std::size_t payload, std::size_t offset) {
  if (buffer.size() < payload + offset) {
    throw std::length_error("misaligned view needs " + std::to_string(offset) +
                            " bytes of slack beyond a " +
                            std::to_string(payload) + "-byte payload");
  }
  return {buffer.data() + offset, payload};
}

}  // namespace milc
