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

#include "milc/memory/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace milc {

Direction to_direction(int d) {
  if (d < 0 || d >= kDirectionCount) {
    throw std::invalid_argument("invalid lattice direction " +
                                std::to_string(d));
  }
  return static_cast<Direction>(d);
}

Lattice4D::Lattice4D(Dims dims) : dims_(dims), volume_(1) {
  for (int n : dims_) {
    if (n <= 0) {
      throw std::invalid_argument("lattice extents must be positive, got " +
                                  format_dims(dims_));
    }
    volume_ *= static_cast<std::size_t>(n);
  }
}

SiteIndex Lattice4D::index(const Coord& c) const {
  std::size_t idx = 0;
  for (int mu = 3; mu >= 0; --mu) {
    if (c[mu] < 0 || c[mu] >= dims_[mu]) {
      throw std::out_of_range("coordinate outside lattice " +
                              format_dims(dims_));
    }
    idx = idx * static_cast<std::size_t>(dims_[mu]) +
          static_cast<std::size_t>(c[mu]);
  }
  return {idx};
}

Coord Lattice4D::coord(SiteIndex s) const {
  if (s.value >= volume_) {
    throw std::out_of_range("site index " + std::to_string(s.value) +
                            " >= volume " + std::to_string(volume_));
  }
  Coord c{};
  std::size_t rest = s.value;
  for (int mu = 0; mu < 4; ++mu) {
    const auto n = static_cast<std::size_t>(dims_[mu]);
    c[mu] = static_cast<int>(rest % n);
    rest /= n;
  }
  return c;
}

SiteIndex Lattice4D::neighbor(SiteIndex s, Direction d) const {
  Coord c = coord(s);
  const int dir = static_cast<int>(d);
  const int mu = dir < 4 ? dir : 7 - dir;
  const int step = dir < 4 ? 1 : -1;
  c[mu] = (c[mu] + step + dims_[mu]) % dims_[mu];
  return index(c);
}

Dims parse_dims(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('x', pos), text.size());
    const std::string_view tok = text.substr(pos, end - pos);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() ||
        v <= 0) {
      throw std::invalid_argument("bad lattice dims '" + std::string(text) +
                                  "', expected e.g. 8x4x4x4");
    }
    parts.push_back(v);
    pos = end + 1;
  }
  if (parts.size() == 1) return {parts[0], parts[0], parts[0], parts[0]};
  if (parts.size() != 4) {
    throw std::invalid_argument("bad lattice dims '" + std::string(text) +
                                "', expected four extents");
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

std::string format_dims(const Dims& d) {
  return std::to_string(d[0]) + "x" + std::to_string(d[1]) + "x" +
         std::to_string(d[2]) + "x" + std::to_string(d[3]);
}

}  // namespace milc
