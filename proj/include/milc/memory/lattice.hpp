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

// Four-dimensional periodic lattice addressing.
//
// Sites are numbered lexicographically with x fastest:
//   index = x + nx * (y + ny * (z + nz * t))
// Directions follow the MILC convention XUP..TUP = 0..3 and
// TDOWN..XDOWN = 4..7, so that the opposite of d is 7 - d.

#ifndef MILC_MEMORY_LATTICE_HPP_
#define MILC_MEMORY_LATTICE_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace milc {

struct SiteIndex {
  std::size_t value = 0;
  auto operator<=>(const SiteIndex&) const = default;
};

using Coord = std::array<int, 4>;  // (x, y, z, t)
using Dims = std::array<int, 4>;   // (nx, ny, nz, nt)

enum class Direction : int {
  kXUp = 0,
  kYUp = 1,
  kZUp = 2,
  kTUp = 3,
  kTDown = 4,
  kZDown = 5,
  kYDown = 6,
  kXDown = 7,
};

inline constexpr int kDirectionCount = 8;

constexpr Direction opposite(Direction d) {
  return static_cast<Direction>(7 - static_cast<int>(d));
}

/// Throws std::invalid_argument unless 0 <= d < 8.
Direction to_direction(int d);

class Lattice4D {
 public:
  /// Throws std::invalid_argument for a non-positive extent.
  explicit Lattice4D(Dims dims);

  const Dims& dims() const { return dims_; }
  std::size_t volume() const { return volume_; }

  /// Throws std::out_of_range for a coordinate outside the box.
  SiteIndex index(const Coord& c) const;
  /// Throws std::out_of_range for an index >= volume.
  Coord coord(SiteIndex s) const;

  /// Periodic neighbour one step along d.
  SiteIndex neighbor(SiteIndex s, Direction d) const;
  SiteIndex neighbor(SiteIndex s, int d) const {
    return neighbor(s, to_direction(d));
  }

 private:
  Dims dims_;
  std::size_t volume_;
};

/// Parses "8x4x4x4" (or a single "4", meaning 4^4).  Throws
/// std::invalid_argument on malformed input.
Dims parse_dims(std::string_view text);
std::string format_dims(const Dims& d);

}  // namespace milc

#endif  // MILC_MEMORY_LATTICE_HPP_
