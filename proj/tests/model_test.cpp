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

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "milc/model/perf_model.hpp"
#include "milc/model/reference_io.hpp"

namespace milc::model {
namespace {

const std::string kRefDir = MILC_REFERENCE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TimeComponents comp(double accel, double plain = 0, double noncomp = 0,
                    double comm = 0) {
  return {accel, plain, noncomp, comm};
}

TEST(Speedup, Examples) {
  EXPECT_DOUBLE_EQ(predicted_speedup(comp(2), comp(1)), 2.0);
  EXPECT_NEAR(predicted_speedup(comp(220), comp(135)), 1.630, 1e-3);
  EXPECT_NEAR(predicted_speedup(comp(153), comp(89)), 1.719, 1e-3);
  EXPECT_DOUBLE_EQ(predicted_speedup(comp(3, 1, 0, 1), comp(1, 1, 0, 1)), 5.0 / 3.0);
}

TEST(Speedup, InvalidInputsThrow) {
  EXPECT_THROW(predicted_speedup(comp(1), comp(0)), std::invalid_argument);
  EXPECT_THROW(predicted_speedup(comp(-1), comp(1)), std::invalid_argument);
  EXPECT_THROW(predicted_speedup(comp(1, 1), comp(1, 2)), std::invalid_argument);
  EXPECT_THROW(predicted_speedup(comp(NAN), comp(1)), std::invalid_argument);
}

TEST(Degradation, Curve) {
  const double o[] = {0.0, 2.0, 20.0};
  const auto c = degradation_curve(comp(2), comp(1), o, OverheadTarget::kComm);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_DOUBLE_EQ(c[0], 2.0);
  EXPECT_NEAR(c[1], 1.3333333, 1e-6);
  EXPECT_NEAR(c[2], 1.047619, 1e-6);
  const auto n = degradation_curve(comp(2), comp(1), o, OverheadTarget::kNonComp);
  EXPECT_EQ(n, c);
}

TEST(Degradation, TendsToOne) {
  const double o[] = {1e9};
  EXPECT_NEAR(degradation_curve(comp(220), comp(135), o, OverheadTarget::kComm)[0],
              1.0, 1e-6);
  const double bad[] = {-1.0};
  EXPECT_THROW(degradation_curve(comp(2), comp(1), bad, OverheadTarget::kComm),
               std::invalid_argument);
}

TEST(Degradation, MonotoneNonIncreasing) {
  std::vector<double> o;
  for (int i = 0; i <= 100; ++i) o.push_back(i * 0.37);
  const auto c = degradation_curve(comp(5, 1, 2), comp(2, 1, 2), o,
                                   OverheadTarget::kComm);
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_LE(c[i], c[i - 1]);
}

TEST(Speedup, Invariants) {
  std::mt19937_64 g(8);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double plain = u(g), noncomp = u(g), comm = u(g);
    const double na = u(g) + 1e-3, aa = u(g) + 1e-3;
    const TimeComponents n{na, plain, noncomp, comm};
    const TimeComponents a{aa, plain, noncomp, comm};
    const double s = predicted_speedup(n, a);
    // Scale invariance.
    const double k = 1.0 + u(g);
    const TimeComponents nk{na * k, plain * k, noncomp * k, comm * k};
    const TimeComponents ak{aa * k, plain * k, noncomp * k, comm * k};
    EXPECT_NEAR(predicted_speedup(nk, ak), s, 1e-12 * s);
    // Equal inputs give no speedup.
    EXPECT_DOUBLE_EQ(predicted_speedup(n, n), 1.0);
    // Bounded by the kernel-only ratio.
    if (na >= aa) {
      EXPECT_GE(s, 1.0);
      EXPECT_LE(s, na / aa * (1 + 1e-12));
    }
  }
}

// ---- instruction mixes -----------------------------------------------------

CsvDocument load(const std::string& name) {
  std::ifstream in(kRefDir + "/" + name);
  EXPECT_TRUE(in) << name;
  return parse_csv(in);
}

TEST(ReferenceData, CsvRoundTripIsByteIdentical) {
  for (const char* name : {"table2.csv", "table3.csv", "table4.csv",
                           "table5.csv", "scenarios.csv"}) {
    std::ostringstream out;
    write_csv(out, load(name));
    EXPECT_EQ(out.str(), slurp(kRefDir + "/" + name)) << name;
  }
}

TEST(ReferenceData, MixTableValues) {
  const auto rows = mix_rows(load("table3.csv"));
  ASSERT_EQ(rows.size(), 15u);
  auto find = [&](const std::string& r) -> const MixRow& {
    for (const auto& row : rows) {
      if (row.routine == r) return row;
    }
    throw std::runtime_error("missing " + r);
  };
  EXPECT_EQ(*find("mult_su3_mat_vec").mix,
            (InstructionMix{"mult_su3_mat_vec", 15, 21, 29, 24}));
  EXPECT_EQ(*find("mult_su3_nn").mix, (InstructionMix{"mult_su3_nn", 45, 57, 77, 72}));
  EXPECT_EQ(*find("mult_su3_mat_vec_sum_4dir").mix,
            (InstructionMix{"mult_su3_mat_vec_sum_4dir", 72, 75, 113, 96}));
  EXPECT_EQ(*find("su3_projector").mix, (InstructionMix{"su3_projector", 9, 18, 35, 36}));
  EXPECT_FALSE(find("add_su3_vector").mix);
  EXPECT_FALSE(find("scalar_mult_add_su3_vector").mix);
  EXPECT_FALSE(find("sub_four_su3_vecs").mix);
  const auto& hw = *find("mult_su3_mat_hwvec").mix;
  EXPECT_DOUBLE_EQ(arithmetic_fraction(hw), 69.0 / 170.0);
}

TEST(Mix, Bounds) {
  const InstructionMix m{"x", 15, 21, 29, 24};
  const double f = arithmetic_fraction(m);
  EXPECT_DOUBLE_EQ(bound_from_mix(m, 2), 1.0 / ((1 - f) + f / 2));
  EXPECT_NEAR(bound_from_mix(m, 2), 1.253521, 1e-6);
  EXPECT_GT(bound_from_mix(m, 4), bound_from_mix(m, 2));
  EXPECT_LT(bound_from_mix(m, 4), 4.0);
  EXPECT_THROW(bound_from_mix(m, 3), std::invalid_argument);
  EXPECT_THROW(arithmetic_fraction(InstructionMix{}), std::invalid_argument);
  EXPECT_EQ(bound_from_mix(InstructionMix{}, 2), 1.0);
  const InstructionMix all{"y", 1, 1, 0, 0};
  EXPECT_DOUBLE_EQ(bound_from_mix(all, 4), 4.0);
}

// ---- parsing ---------------------------------------------------------------

TEST(Parse, CsvErrorsCarryLineNumbers) {
  std::istringstream in("# comment\nroutine,add,mul,mov,shuffle_other\nx,1,2,3\n");
  try {
    mix_rows(parse_csv(in));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream bad_num("routine,add,mul,mov,shuffle_other\nx,1,2,q,4\n");
  EXPECT_THROW(mix_rows(parse_csv(bad_num)), ParseError);
  std::istringstream partial("routine,add,mul,mov,shuffle_other\nx,1,,3,4\n");
  EXPECT_THROW(mix_rows(parse_csv(partial)), ParseError);
  std::istringstream header("routine,add,mul\nx,1,2\n");
  EXPECT_THROW(mix_rows(parse_csv(header)), ParseError);
}

TEST(Parse, KeyedAndCsvScenariosAgree) {
  std::ifstream keyed(kRefDir + "/scenarios.txt");
  std::ifstream csv(kRefDir + "/scenarios.csv");
  const auto a = parse_scenarios(keyed);
  const auto b = parse_scenarios(csv);
  ASSERT_EQ(a.size(), 2u);
  ASSERT_EQ(b.size(), 2u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].normal, b[i].normal);
    EXPECT_EQ(a[i].accel, b[i].accel);
  }
  EXPECT_EQ(a[0].name, "serial-4^4-double");
  EXPECT_NEAR(predicted_speedup(a[0].normal, a[0].accel), 1.630, 1e-3);
  EXPECT_NEAR(predicted_speedup(a[1].normal, a[1].accel), 1.719, 1e-3);
}

TEST(Parse, KeyedErrors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_scenarios(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("name = a\nbogus = 1\n"), 2u);
  EXPECT_EQ(line_of("name = a\nt_comm = 1\nt_comm = 2\n"), 3u);
  const std::string rest =
      "normal.t_comp_accel = 2\naccel.t_comp_accel = 1\n"
      "t_comp_plain = 0\nt_noncomp = 0\n";
  EXPECT_EQ(line_of("name = a\n" + rest + "t_comm = -1\n"), 6u);
  EXPECT_EQ(line_of("name = a\n" + rest + "t_comm = x\n"), 6u);
  EXPECT_EQ(line_of("name = a\n" + rest + "t_comm = 0\n"), 0u);
  EXPECT_EQ(line_of("t_comm = 1\n"), 1u);
  // Missing keys are reported against the scenario's name line.
  EXPECT_NE(line_of("# c\nname = a\nt_comm = 1\n"), 0u);
}

}  // namespace
}  // namespace milc::model
