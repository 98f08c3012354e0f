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

// Output formats for timing records and speedup rows.
//
// CSV carries exactly the record columns.  Environment metadata (clock
// resolution, vector capability) goes in the table footer and in every
// json-lines object.

#ifndef MILC_BENCH_REPORT_HPP_
#define MILC_BENCH_REPORT_HPP_

#include <optional>
#include <ostream>
#include <span>
#include <string_view>

#include "milc/bench/harness.hpp"

namespace milc::bench {

enum class Format { kCsv, kTable, kJsonLines };

std::optional<Format> parse_format(std::string_view s);

inline constexpr std::string_view kCsvHeader =
    "routine,backend,precision,mode,alignment,reps,elapsed_s,"
    "invocations_per_s,flops_per_s";

void write_records(std::ostream& os, std::span<const TimingRecord> records,
                   Format format);

void write_speedups(std::ostream& os, std::span<const SpeedupRow> rows,
                    Format format);

}  // namespace milc::bench

#endif  // MILC_BENCH_REPORT_HPP_
