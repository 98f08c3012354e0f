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

// Seeded equivalence and property checks over all routines.

#ifndef MILC_VERIFY_SUITE_HPP_
#define MILC_VERIFY_SUITE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milc/su3/routine.hpp"
#include "milc/su3/types.hpp"

namespace milc::verify {

enum class CheckKind {
  kBackend,    // vectorized vs scalar, ULP distance
  kAlignment,  // aligned vs unaligned entry points, bitwise
  kOracle,     // scalar vs textbook oracle, ULP of the term magnitude
  kAdjoint,    // an / na against nn with an explicit adjoint, ULP distance
  kLinearity,  // A(u + w) against Au + Aw, ULP of the term magnitude
  kSum4dir,    // summed form against four separate products and adds
  kUnitary,    // adj(U) (U B) recovers B, relative error
};

std::string_view check_name(CheckKind k);

/// Checks that apply to `routine`, in report order.
std::vector<CheckKind> checks_for(Routine routine);

/// Default tolerance of check `k` at precision `p`.
double tolerance(CheckKind k, Precision p);

struct CheckResult {
  CheckKind check = CheckKind::kBackend;
  Routine routine = Routine::kAddSu3Vector;
  Precision precision = Precision::kDouble;
  std::uint64_t trials = 0;
  double max_error = 0.0;  // ULPs, or relative error for kUnitary
  double tolerance = 0.0;
  std::uint64_t worst_trial = 0;
  std::size_t worst_component = 0;
  bool passed = true;
};

struct VerifyConfig {
  std::vector<Routine> routines;      // empty means all
  std::vector<Precision> precisions;  // empty means both
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  // Replace every matrix operand with the identity.
  bool identity_inputs = false;
  // Negative control: corrupt the vectorized backend's first output.
  bool inject_fault = false;
};

std::vector<CheckResult> run_verify(const VerifyConfig& config);

/// One check on its own.  Trial t of any check sees the same operands.
CheckResult run_check(CheckKind kind, Routine routine, Precision precision,
                      const VerifyConfig& config);

}  // namespace milc::verify

#endif  // MILC_VERIFY_SUITE_HPP_
