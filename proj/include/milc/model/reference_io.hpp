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

// Reading and writing the model's text inputs.
//
// CSV files may carry '#' comment lines and blank lines anywhere; both are
// kept verbatim so that parse followed by write reproduces a canonical file
// byte for byte.  Cells are plain (no quoting).  Errors report 1-based line
// numbers.

#ifndef MILC_MODEL_REFERENCE_IO_HPP_
#define MILC_MODEL_REFERENCE_IO_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "milc/model/perf_model.hpp"

namespace milc::model {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CsvLine {
  std::size_t number = 0;     // 1-based
  bool verbatim = false;      // comment or blank line
  std::string text;           // the line itself when verbatim
  std::vector<std::string> cells;
};

/// The first non-verbatim line is the header.
struct CsvDocument {
  std::vector<CsvLine> lines;

  const CsvLine* header() const;
  std::vector<const CsvLine*> rows() const;
};

CsvDocument parse_csv(std::istream& in);
void write_csv(std::ostream& out, const CsvDocument& doc);

// Instruction-mix table: header "routine,add,mul,mov,shuffle_other".  A row
// whose four counts are all empty marks a routine with no reference data.
inline constexpr std::string_view kMixHeader = "routine,add,mul,mov,shuffle_other";

struct MixRow {
  std::string routine;
  std::optional<InstructionMix> mix;  // nullopt when absent
};

/// Throws ParseError on a wrong header, a bad count, a partly blank row or
/// a wrong number of cells.
std::vector<MixRow> mix_rows(const CsvDocument& doc);

// Two-run scenario for predicted_speedup.
struct Scenario {
  std::string name;
  TimeComponents normal;
  TimeComponents accel;
};

// Keyed form, one "key = value" per line, '#' comments:
//   name = serial-double
//   normal.t_comp_accel = 220
//   accel.t_comp_accel = 135
//   t_comp_plain = 0
//   t_noncomp = 0
//   t_comm = 0
// Each "name" line starts a new scenario and every key is required once
// per scenario.  CSV form has header kScenarioHeader.
inline constexpr std::string_view kScenarioHeader =
    "name,normal_t_comp_accel,accel_t_comp_accel,t_comp_plain,t_noncomp,t_comm";

/// Detects the form from the first non-comment line.  Throws ParseError
/// on unknown, duplicate or missing keys, bad numbers or negative times.
std::vector<Scenario> parse_scenarios(std::istream& in);

}  // namespace milc::model

#endif  // MILC_MODEL_REFERENCE_IO_HPP_
