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

#ifndef MILC_MEMORY_ALIGNED_BUFFER_HPP_
#define MILC_MEMORY_ALIGNED_BUFFER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

namespace milc {

inline constexpr std::size_t kDefaultAlignment = 16;  // one lane group
inline constexpr std::size_t kCacheLineAlignment = 64;
inline constexpr std::size_t kMinAlignment = 8;

/// Offset applied by misaligned_view.
inline constexpr std::size_t kMisalignOffset = 4;

/// Owning, move-only block of bytes whose base is a multiple of its
/// alignment.  Contents are zero-initialised.
class AlignedBuffer {
 public:
  AlignedBuffer() = default;
  ~AlignedBuffer();
  AlignedBuffer(AlignedBuffer&& other) noexcept;
  AlignedBuffer& operator=(AlignedBuffer&& other) noexcept;
  AlignedBuffer(const AlignedBuffer&) = delete;
  AlignedBuffer& operator=(const AlignedBuffer&) = delete;

  std::byte* data() { return data_; }
  const std::byte* data() const { return data_; }
  /// Usable bytes; at least the requested payload.
  std::size_t size() const { return size_; }
  std::size_t alignment() const { return alignment_; }
  std::span<std::byte> bytes() { return {data_, size_}; }

 private:
  friend AlignedBuffer allocate_aligned(std::size_t, std::size_t);
  AlignedBuffer(std::byte* data, std::size_t size, std::size_t alignment)
      : data_(data), size_(size), alignment_(alignment) {}

  std::byte* data_ = nullptr;
  std::size_t size_ = 0;
  std::size_t alignment_ = 0;
};

/// Allocates at least `payload` bytes at a multiple of `alignment`, which
/// must be a power of two no smaller than 8 (std::invalid_argument
/// otherwise).  Throws std::bad_alloc when memory is exhausted.
AlignedBuffer allocate_aligned(std::size_t payload,
                               std::size_t alignment = kDefaultAlignment);

/// A `payload`-byte window into `buffer` starting `offset` bytes past its
/// base, for aligned-versus-misaligned comparisons.  Throws
/// std::length_error when the buffer lacks `offset` bytes of slack.
std::span<std::byte> misaligned_view(AlignedBuffer& buffer,
                                     std::size_t payload,
                                     std::size_t offset = kMisalignOffset);

inline std::size_t address_mod(const void* p, std::size_t m) {
  return static_cast<std::size_t>(reinterpret_cast<std::uintptr_t>(p) % m);
}

}  // namespace milc

#endif  // MILC_MEMORY_ALIGNED_BUFFER_HPP_
