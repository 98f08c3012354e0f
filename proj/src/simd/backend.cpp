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

#include "milc/simd/backend.hpp"

namespace milc {

const char* to_string(BackendKind kind) {
  return kind == BackendKind::kScalar ? "scalar" : "vector";
}

std::optional<BackendKind> parse_backend(std::string_view name) {
  if (name == "scalar") return BackendKind::kScalar;
  if (name == "vector") return BackendKind::kVector;
  return std::nullopt;
}

}  // namespace milc
