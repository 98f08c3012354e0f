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
#include <limits>

#include <gtest/gtest.h>

#include "milc/simd/backend.hpp"
#include "milc/verify/operands.hpp"
#include "milc/verify/oracle.hpp"
#include "milc/verify/suite.hpp"
#include "milc/verify/ulp.hpp"

namespace milc::verify {
namespace {

TEST(Ulp, Distance) {
  EXPECT_EQ(ulp_distance(1.0, 1.0), 0.0);
  EXPECT_EQ(ulp_distance(0.0, -0.0), 0.0);
  EXPECT_EQ(ulp_distance(1.0, std::nextafter(1.0, 2.0)), 1.0);
  EXPECT_EQ(ulp_distance(1.0f, std::nextafter(std::nextafter(1.0f, 2.0f), 2.0f)), 2.0);
  const double tiny = std::numeric_limits<double>::denorm_min();
  EXPECT_EQ(ulp_distance(-tiny, tiny), 2.0);
  EXPECT_TRUE(std::isinf(ulp_distance(std::nan(""), 1.0)));
}

TEST(Ulp, ScaledMetric) {
  const double eps = std::numeric_limits<double>::epsilon();
  EXPECT_DOUBLE_EQ(scaled_ulp(1.0 + eps, 1.0L, 1.0), 1.0);
  // Cancellation: a tiny result is judged against the term magnitude.
  EXPECT_DOUBLE_EQ(scaled_ulp(3 * eps, 2.0L * eps, 1.0), 1.0);
  // Zero scale falls back to plain ULP distance.
  EXPECT_EQ(scaled_ulp(0.0, 0.0, 0.0), 0.0);
  EXPECT_EQ(scaled_ulp(std::numeric_limits<double>::denorm_min(), 0.0, 0.0), 1.0);
}

TEST(Oracle, AbsBoundAccumulatesMagnitudes) {
  const AbsBound<double> a(-2.0), b(3.0);
  EXPECT_EQ((a + b).v, 5.0);
  EXPECT_EQ((a - b).v, 5.0);
  EXPECT_EQ((a * b).v, 6.0);
  EXPECT_EQ((-a).v, 2.0);
}

TEST(Oracle, ScaleBoundsResult) {
  for (Routine r : kAllRoutines) {
    const auto o = trial_operands<double>(2, r, 0);
    const auto got = run_routine<milc::ScalarBackend, double>(r, o);
    const auto scale = oracle_scale(r, o);
    ASSERT_EQ(got.size(), scale.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      EXPECT_LE(std::fabs(got[k]), scale[k] * (1 + 1e-12)) << routine_name(r);
    }
  }
}

TEST(Operands, ReproducibleByTrial) {
  const auto x = trial_operands<double>(9, Routine::kMultSu3Nn, 17);
  const auto y = trial_operands<double>(9, Routine::kMultSu3Nn, 17);
  const auto z = trial_operands<double>(9, Routine::kMultSu3Nn, 18);
  EXPECT_EQ(x.a, y.a);
  EXPECT_EQ(x.v4, y.v4);
  EXPECT_NE(x.a, z.a);
}

TEST(Operands, UniformRangeAndGrid) {
  auto g = trial_engine(1, Routine::kAddSu3Vector, 0);
  for (int i = 0; i < 10000; ++i) {
    const double d = uniform_signed<double>(g);
    EXPECT_GE(d, -1.0);
    EXPECT_LT(d, 1.0);
    const float f = uniform_signed<float>(g);
    EXPECT_GE(f, -1.0f);
    EXPECT_LT(f, 1.0f);
  }
}

TEST(Suite, SmallRunPasses) {
  VerifyConfig cfg;
  cfg.trials = 200;
  cfg.seed = 4;
  const auto results = run_verify(cfg);
  std::size_t expected = 0;
  for (Routine r : kAllRoutines) expected += 2 * checks_for(r).size();
  EXPECT_EQ(results.size(), expected);
  for (const auto& res : results) {
    EXPECT_TRUE(res.passed) << check_name(res.check) << ' '
                            << routine_name(res.routine) << ' '
                            << res.max_error;
    EXPECT_EQ(res.trials, 200u);
  }
}

TEST(Suite, IdentityInputsPass) {
  VerifyConfig cfg;
  cfg.trials = 1;
  cfg.identity_inputs = true;
  for (const auto& res : run_verify(cfg)) {
    EXPECT_TRUE(res.passed) << check_name(res.check) << ' '
                            << routine_name(res.routine);
  }
}

TEST(Suite, InjectedFaultIsCaughtAndLocated) {
  VerifyConfig cfg;
  cfg.trials = 5;
  cfg.inject_fault = true;
  cfg.routines = {Routine::kMultSu3MatVec};
  cfg.precisions = {Precision::kDouble};
  const auto results = run_verify(cfg);
  bool any_failed = false;
  for (const auto& res : results) {
    if (res.check == CheckKind::kBackend) {
      EXPECT_FALSE(res.passed);
      EXPECT_GE(res.max_error, 16.0);
      EXPECT_EQ(res.worst_trial, 0u);
      EXPECT_EQ(res.worst_component, 0u);
    }
    any_failed |= !res.passed;
  }
  EXPECT_TRUE(any_failed);
}

TEST(Suite, DeterministicForFixedSeed) {
  VerifyConfig cfg;
  cfg.trials = 100;
  cfg.seed = 123;
  cfg.routines = {Routine::kMultSu3Na, Routine::kSu3Projector};
  const auto a = run_verify(cfg);
  const auto b = run_verify(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].max_error, b[i].max_error);
    EXPECT_EQ(a[i].worst_trial, b[i].worst_trial);
  }
}

TEST(Suite, ToleranceTable) {
  EXPECT_EQ(tolerance(CheckKind::kAlignment, Precision::kDouble), 0.0);
  EXPECT_EQ(tolerance(CheckKind::kOracle, Precision::kSingle), 2.0);
  EXPECT_EQ(tolerance(CheckKind::kBackend, Precision::kDouble), 2.0);
  EXPECT_EQ(tolerance(CheckKind::kUnitary, Precision::kDouble), 1e-12);
}

}  // namespace
}  // namespace milc::verify
