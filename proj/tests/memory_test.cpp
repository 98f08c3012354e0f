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

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "milc/memory/aligned_buffer.hpp"
#include "milc/memory/lattice.hpp"
#include "milc/memory/site_fields.hpp"

namespace milc {
namespace {

TEST(AlignedBuffer, Examples) {
  const AlignedBuffer a = allocate_aligned(1024, 16);
  EXPECT_EQ(address_mod(a.data(), 16), 0u);
  EXPECT_GE(a.size(), 1024u);
  const AlignedBuffer b = allocate_aligned(64, 64);
  EXPECT_EQ(address_mod(b.data(), 64), 0u);
  // Three double vectors for 10^5 sites.
  const std::size_t payload = 3 * 48 * 100000;
  AlignedBuffer c = allocate_aligned(payload, 16);
  EXPECT_EQ(address_mod(c.data(), 16), 0u);
  EXPECT_GE(c.size(), payload);
  EXPECT_GE(payload, 147456u);
  c.bytes()[payload - 1] = std::byte{1};  // whole payload is writable
}

TEST(AlignedBuffer, RandomRequestsAreAligned) {
  std::mt19937_64 g(42);
  std::uniform_int_distribution<std::size_t> size(1, 1 << 20);
  std::uniform_int_distribution<int> shift(3, 12);
  for (int i = 0; i < 100; ++i) {
    const std::size_t alignment = std::size_t{1} << shift(g);
    const std::size_t payload = size(g);
    const AlignedBuffer b = allocate_aligned(payload, alignment);
    EXPECT_EQ(address_mod(b.data(), alignment), 0u);
    EXPECT_GE(b.size(), payload);
    EXPECT_EQ(b.alignment(), alignment);
  }
}

TEST(AlignedBuffer, InvalidAlignmentThrows) {
  EXPECT_THROW(allocate_aligned(64, 0), std::invalid_argument);
  EXPECT_THROW(allocate_aligned(64, 4), std::invalid_argument);
  EXPECT_THROW(allocate_aligned(64, 24), std::invalid_argument);
}

TEST(AlignedBuffer, MoveTransfersOwnership) {
  AlignedBuffer a = allocate_aligned(128, 16);
  std::byte* p = a.data();
  AlignedBuffer b = std::move(a);
  EXPECT_EQ(b.data(), p);
  EXPECT_EQ(a.data(), nullptr);  // NOLINT(bugprone-use-after-move)
}

TEST(MisalignedView, OffsetFromAlignedBase) {
  AlignedBuffer b = allocate_aligned(1024 + 16, 16);
  const auto v = misaligned_view(b, 1024);
  EXPECT_EQ(address_mod(v.data(), 16), 4u);
  EXPECT_EQ(v.size(), 1024u);
  const auto e = misaligned_view(b, 0);
  EXPECT_EQ(e.size(), 0u);
  EXPECT_THROW(misaligned_view(b, b.size()), std::length_error);
}

// ---- lattice ---------------------------------------------------------------

// Independent neighbour oracle: coordinate arithmetic with explicit wrap.
Coord step(const Dims& d, Coord c, int dir) {
  const int axis = dir < 4 ? dir : 7 - dir;
  const int delta = dir < 4 ? 1 : -1;
  c[axis] = ((c[axis] + delta) % d[axis] + d[axis]) % d[axis];
  return c;
}

TEST(Lattice, SingleSiteIsItsOwnNeighbour) {
  const Lattice4D l({1, 1, 1, 1});
  for (int d = 0; d < kDirectionCount; ++d) {
    EXPECT_EQ(l.neighbor(SiteIndex{0}, d), SiteIndex{0});
  }
}

TEST(Lattice, WrapsInNegativeX) {
  const Lattice4D l({4, 4, 4, 4});
  const SiteIndex s = l.neighbor(l.index({0, 0, 0, 0}), Direction::kXDown);
  EXPECT_EQ(l.coord(s), (Coord{3, 0, 0, 0}));
}

TEST(Lattice, LexicographicXFastest) {
  const Lattice4D l({8, 4, 4, 4});
  EXPECT_EQ(l.index({1, 0, 0, 0}).value, 1u);
  EXPECT_EQ(l.index({0, 1, 0, 0}).value, 8u);
  EXPECT_EQ(l.index({0, 0, 0, 1}).value, 128u);
  EXPECT_EQ(l.volume(), 512u);
}

TEST(Lattice, RandomNeighboursMatchCoordinateOracle) {
  const Dims d{8, 4, 4, 4};
  const Lattice4D l(d);
  std::mt19937 g(3);
  std::uniform_int_distribution<std::size_t> site(0, l.volume() - 1);
  std::uniform_int_distribution<int> dir(0, 7);
  for (int i = 0; i < 2000; ++i) {
    const SiteIndex s{site(g)};
    const int k = dir(g);
    EXPECT_EQ(l.coord(l.neighbor(s, k)), step(d, l.coord(s), k));
  }
}

class LatticeInvariants : public ::testing::TestWithParam<Dims> {};

TEST_P(LatticeInvariants, Hold) {
  const Lattice4D l(GetParam());
  const Dims& d = l.dims();
  const bool wide = std::min({d[0], d[1], d[2], d[3]}) >= 3;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < l.volume(); ++i) {
    const SiteIndex s{i};
    std::set<std::size_t> around;
    EXPECT_EQ(l.index(l.coord(s)), s);
    seen.insert(i);
    for (int k = 0; k < kDirectionCount; ++k) {
      const Direction dir = to_direction(k);
      const SiteIndex n = l.neighbor(s, dir);
      ASSERT_LT(n.value, l.volume());
      EXPECT_EQ(l.neighbor(n, opposite(dir)), s);
      EXPECT_EQ(l.coord(n), step(d, l.coord(s), k));
      around.insert(n.value);
    }
    if (wide) {
      EXPECT_EQ(around.size(), 8u);
    }
  }
  EXPECT_EQ(seen.size(), l.volume());
}

INSTANTIATE_TEST_SUITE_P(Shapes, LatticeInvariants,
                         ::testing::Values(Dims{1, 1, 1, 1}, Dims{4, 4, 4, 4},
                                           Dims{8, 4, 4, 4}, Dims{2, 3, 4, 5}));

TEST(Lattice, InvalidInputsThrow) {
  EXPECT_THROW(to_direction(8), std::invalid_argument);
  EXPECT_THROW(to_direction(-1), std::invalid_argument);
  EXPECT_THROW(Lattice4D({0, 4, 4, 4}), std::invalid_argument);
  const Lattice4D l({2, 2, 2, 2});
  EXPECT_THROW(l.index({2, 0, 0, 0}), std::out_of_range);
  EXPECT_THROW(l.coord(SiteIndex{16}), std::out_of_range);
  EXPECT_THROW(l.neighbor(SiteIndex{0}, 9), std::invalid_argument);
}

TEST(Lattice, OppositeDirections) {
  EXPECT_EQ(opposite(Direction::kXUp), Direction::kXDown);
  EXPECT_EQ(opposite(Direction::kTUp), Direction::kTDown);
  for (int d = 0; d < kDirectionCount; ++d) {
    EXPECT_EQ(opposite(opposite(to_direction(d))), to_direction(d));
  }
}

TEST(Lattice, ParseDims) {
  EXPECT_EQ(parse_dims("8x4x4x4"), (Dims{8, 4, 4, 4}));
  EXPECT_EQ(parse_dims("4"), (Dims{4, 4, 4, 4}));
  EXPECT_EQ(format_dims({2, 3, 4, 5}), "2x3x4x5");
  EXPECT_THROW(parse_dims("8x4x4"), std::invalid_argument);
  EXPECT_THROW(parse_dims("8x4xax4"), std::invalid_argument);
  EXPECT_THROW(parse_dims("0x4x4x4"), std::invalid_argument);
  EXPECT_THROW(parse_dims(""), std::invalid_argument);
}

// ---- site records ----------------------------------------------------------

TEST(SiteFields, RecordsAreAlignedAndDisjoint) {
  const Lattice4D l({2, 2, 2, 2});
  SiteFields<double> f(l);
  EXPECT_EQ(f.site_bytes() % 16, 0u);
  EXPECT_EQ(f.payload_bytes(), f.site_bytes() * 16);
  for (std::size_t s = 0; s < f.volume(); ++s) {
    EXPECT_EQ(address_mod(&f.links(s), 16), 0u);
    EXPECT_EQ(address_mod(&f.vector(s, 7), 16), 0u);
    EXPECT_EQ(address_mod(&f.hw(s, 1), 16), 0u);
  }
  const auto* link0 = reinterpret_cast<std::byte*>(&f.link(0, 0));
  const auto* link1 = reinterpret_cast<std::byte*>(&f.link(1, 0));
  EXPECT_EQ(static_cast<std::size_t>(link1 - link0), f.site_bytes());
  const auto* m0 = reinterpret_cast<std::byte*>(&f.matrix(0, 0));
  EXPECT_EQ(static_cast<std::size_t>(m0 - link0), 4 * sizeof(Su3Matrix<double>));
  EXPECT_THROW(f.vector(0, 8), std::out_of_range);
  EXPECT_THROW(f.link(0, 4), std::out_of_range);
  EXPECT_THROW(f.links(16), std::out_of_range);
}

TEST(SiteFields, MisalignedLayoutShiftsBase) {
  const Lattice4D l({1, 1, 1, 2});
  SiteLayout layout;
  layout.misalign = kMisalignOffset;
  SiteFields<float> f(l, layout);
  EXPECT_EQ(address_mod(f.base(), 16), kMisalignOffset);
  EXPECT_EQ(address_mod(&f.links(1), 16), kMisalignOffset);
  // Field offsets inside a record are the same as in the aligned layout.
  SiteFields<float> g(l);
  const auto off = [](SiteFields<float>& x) {
    return reinterpret_cast<std::byte*>(&x.vector(1, 2)) - x.base();
  };
  EXPECT_EQ(off(f), off(g));
}

TEST(SiteFields, ArrayViewsStrideBySite) {
  const Lattice4D l({4, 1, 1, 1});
  SiteFields<double> f(l);
  const OperandArray v = f.vector_array(3);
  EXPECT_EQ(v.kind, OperandKind::kVector);
  EXPECT_EQ(v.count, 4u);
  EXPECT_EQ(v.stride, f.site_bytes());
  EXPECT_EQ(v.base, reinterpret_cast<std::byte*>(&f.vector(0, 3)));
  EXPECT_EQ(f.link_array().kind, OperandKind::kMatrix4);
  EXPECT_EQ(f.vector4_array(1).kind, OperandKind::kVector4);
  EXPECT_THROW(f.vector4_array(5), std::out_of_range);
}

}  // namespace
}  // namespace milc
