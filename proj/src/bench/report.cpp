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

#include "milc/bench/report.hpp"

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace milc::bench {

std::optional<Format> parse_format(std::string_view s) {
  if (s == "csv") return Format::kCsv;
  if (s == "table") return Format::kTable;
  if (s == "json-lines") return Format::kJsonLines;
  return std::nullopt;
}

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << v;
  return os.str();
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << v;
  return os.str();
}

nlohmann::ordered_json environment_json(const Environment& env) {
  nlohmann::ordered_json j;
  j["clock_resolution_s"] = env.clock_resolution_s;
  j["isa"] = std::string(env.capability.isa);
  j["vector_width_bits"] = env.capability.width_bits;
  j["double_lanes"] = env.capability.double_lanes;
  j["single_lanes"] = env.capability.single_lanes;
  j["hardware_vector"] = env.capability.hardware_vector;
  return j;
}

std::vector<std::string> record_cells(const TimingRecord& r) {
  return {std::string(routine_name(r.config.routine)),
          to_string(r.config.backend),
          to_string(r.config.precision),
          to_string(r.config.mode),
          to_string(r.config.alignment),
          std::to_string(r.invocations),
          sci(r.elapsed_s),
          sci(r.invocations_per_s),
          sci(r.flops_per_s)};
}

// Left-aligned text columns padded to the widest cell.
void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c + 1 < cells.size()) {
        os << std::left << std::setw(static_cast<int>(width[c])) << cells[c]
           << "  ";
      } else {
        os << cells[c] << '\n';
      }
    }
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
}

std::vector<std::string> split_header(std::string_view header) {
  std::vector<std::string> out;
  std::string cell;
  for (char ch : header) {
    if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else {
      cell += ch;
    }
  }
  out.push_back(cell);
  return out;
}

}  // namespace

void write_records(std::ostream& os, std::span<const TimingRecord> records,
                   Format format) {
  switch (format) {
    case Format::kCsv:
      os << kCsvHeader << '\n';
      for (const auto& r : records) {
        const auto cells = record_cells(r);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          os << cells[c] << (c + 1 < cells.size() ? ',' : '\n');
        }
      }
      break;
    case Format::kTable: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : records) rows.push_back(record_cells(r));
      write_table(os, split_header(kCsvHeader), rows);
      const Environment& env =
          records.empty() ? environment() : records.front().environment;
      os << "clock resolution " << sci(env.clock_resolution_s) << " s; vector "
         << env.capability.isa << ' ' << env.capability.width_bits
         << "-bit\n";
      break;
    }
    case Format::kJsonLines:
      for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["routine"] = routine_name(r.config.routine);
        j["backend"] = to_string(r.config.backend);
        j["precision"] = to_string(r.config.precision);
        j["mode"] = to_string(r.config.mode);
        j["alignment"] = to_string(r.config.alignment);
        j["reps"] = r.invocations;
        j["sweeps_or_calls"] = r.repetitions;
        if (r.config.dims) j["dims"] = format_dims(*r.config.dims);
        j["elapsed_s"] = r.elapsed_s;
        j["invocations_per_s"] = r.invocations_per_s;
        j["flops_per_s"] = r.flops_per_s;
        j["regime"] = r.regime();
        j["environment"] = environment_json(r.environment);
        os << j.dump() << '\n';
      }
      break;
  }
}

void write_speedups(std::ostream& os, std::span<const SpeedupRow> rows,
                    Format format) {
  const std::vector<std::string> header{"routine", "precision", "mode",
                                        "t_ref_s", "t_vec_s",  "ratio",
                                        "anomalous"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.push_back({std::string(routine_name(r.routine)),
                     to_string(r.precision), to_string(r.mode), sci(r.t_ref),
                     sci(r.t_vec), fixed(r.ratio, 3),
                     r.anomalous ? "yes" : "no"});
  }
  switch (format) {
    case Format::kCsv:
      for (std::size_t c = 0; c < header.size(); ++c) {
        os << header[c] << (c + 1 < header.size() ? ',' : '\n');
      }
      for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          os << row[c] << (c + 1 < row.size() ? ',' : '\n');
        }
      }
      break;
    case Format::kTable:
      write_table(os, header, cells);
      break;
    case Format::kJsonLines:
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["routine"] = routine_name(r.routine);
        j["precision"] = to_string(r.precision);
        j["mode"] = to_string(r.mode);
        j["t_ref_s"] = r.t_ref;
        j["t_vec_s"] = r.t_vec;
        j["ratio"] = r.ratio;
        j["anomalous"] = r.anomalous;
        os << j.dump() << '\n';
      }
      break;
  }
}

}  // namespace milc::bench
