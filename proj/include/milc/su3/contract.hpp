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

#ifndef MILC_SU3_CONTRACT_HPP_
#define MILC_SU3_CONTRACT_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace milc {

/// Raised by debug validation when a caller breaks a kernel precondition
/// (result aliasing an input, misaligned operand on an aligned entry point).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#ifdef NDEBUG
inline constexpr bool kDebugValidation = false;
#else
inline constexpr bool kDebugValidation = true;
#endif

template <typename A, typename B>
bool overlaps(const A& a, const B& b) {
  const auto a0 = reinterpret_cast<std::uintptr_t>(&a);
  const auto b0 = reinterpret_cast<std::uintptr_t>(&b);
  return a0 < b0 + sizeof(B) && b0 < a0 + sizeof(A);
}

template <typename Out, typename... In>
void check_no_alias(const char* routine, const Out& out, const In&... in) {
  if constexpr (kDebugValidation) {
    if ((overlaps(out, in) || ...)) {
      throw ContractViolation(std::string(routine) +
                              ": result location aliases an input operand");
    }
  }
}

}  // namespace milc

#endif  // MILC_SU3_CONTRACT_HPP_
