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

#include "milc/model/reference_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace milc::model {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const auto next = s.find(sep, pos);
    out.emplace_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

bool is_verbatim(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::uint64_t parse_count(const std::string& cell, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + cell + "'");
  }
  return v;
}

double parse_seconds(std::string_view text, std::size_t line) {
  const std::string cell(trim(text));
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ParseError(line, "expected a number, got '" + cell + "'");
  }
  if (!std::isfinite(v) || v < 0.0) {
    throw ParseError(line, "times must be finite and >= 0, got '" + cell + "'");
  }
  return v;
}

}  // namespace

const CsvLine* CsvDocument::header() const {
  for (const auto& l : lines) {
    if (!l.verbatim) return &l;
  }
  return nullptr;
}

std::vector<const CsvLine*> CsvDocument::rows() const {
  std::vector<const CsvLine*> out;
  bool seen_header = false;
  for (const auto& l : lines) {
    if (l.verbatim) continue;
    if (seen_header) out.push_back(&l);
    seen_header = true;
  }
  return out;
}

CsvDocument parse_csv(std::istream& in) {
  CsvDocument doc;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    CsvLine l;
    l.number = n;
    if (is_verbatim(line)) {
      l.verbatim = true;
      l.text = line;
    } else {
      l.cells = split(line, ',');
    }
    doc.lines.push_back(std::move(l));
  }
  return doc;
}

void write_csv(std::ostream& out, const CsvDocument& doc) {
  for (const auto& l : doc.lines) {
    if (l.verbatim) {
      out << l.text << '\n';
      continue;
    }
    for (std::size_t c = 0; c < l.cells.size(); ++c) {
      out << l.cells[c] << (c + 1 < l.cells.size() ? ',' : '\n');
    }
  }
}

std::vector<MixRow> mix_rows(const CsvDocument& doc) {
  const CsvLine* header = doc.header();
  if (header == nullptr) throw ParseError(1, "missing header");
  const auto expected = split(kMixHeader, ',');
  if (header->cells != expected) {
    throw ParseError(header->number,
                     "expected header '" + std::string(kMixHeader) + "'");
  }
  std::vector<MixRow> out;
  for (const CsvLine* row : doc.rows()) {
    if (row->cells.size() != expected.size()) {
      throw ParseError(row->number, "expected " +
                                        std::to_string(expected.size()) +
                                        " cells");
    }
    MixRow r;
    r.routine = row->cells[0];
    if (r.routine.empty()) throw ParseError(row->number, "empty routine name");
    const auto blanks = std::count_if(row->cells.begin() + 1, row->cells.end(),
                                      [](const std::string& c) { return c.empty(); });
    if (blanks == 4) {
      out.push_back(r);
      continue;
    }
    if (blanks != 0) {
      throw ParseError(row->number, "counts must be all present or all blank");
    }
    r.mix = InstructionMix{r.routine, parse_count(row->cells[1], row->number),
                           parse_count(row->cells[2], row->number),
                           parse_count(row->cells[3], row->number),
                           parse_count(row->cells[4], row->number)};
    out.push_back(r);
  }
  return out;
}

namespace {

constexpr std::array<std::string_view, 6> kKeys = {
    "name",         "normal.t_comp_accel", "accel.t_comp_accel",
    "t_comp_plain", "t_noncomp",           "t_comm"};

struct Pending {
  std::size_t line = 0;
  std::map<std::string, std::string, std::less<>> values;
  std::map<std::string, std::size_t, std::less<>> lines;
};

Scenario finish(const Pending& p) {
  for (auto key : kKeys) {
    if (!p.values.contains(key)) {
      throw ParseError(p.line, "scenario '" + p.values.at("name") +
                                   "' is missing key '" + std::string(key) + "'");
    }
  }
  auto num = [&](std::string_view key) {
    return parse_seconds(p.values.find(key)->second, p.lines.find(key)->second);
  };
  Scenario s;
  s.name = p.values.at("name");
  s.normal.t_comp_accel = num("normal.t_comp_accel");
  s.accel.t_comp_accel = num("accel.t_comp_accel");
  s.normal.t_comp_plain = s.accel.t_comp_plain = num("t_comp_plain");
  s.normal.t_noncomp = s.accel.t_noncomp = num("t_noncomp");
  s.normal.t_comm = s.accel.t_comm = num("t_comm");
  return s;
}

std::vector<Scenario> parse_keyed(const std::vector<std::string>& text) {
  std::vector<Scenario> out;
  std::optional<Pending> cur;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const std::size_t n = i + 1;
    if (is_verbatim(text[i])) continue;
    const auto eq = text[i].find('=');
    if (eq == std::string::npos) throw ParseError(n, "expected 'key = value'");
    const std::string key(trim(std::string_view(text[i]).substr(0, eq)));
    const std::string value(trim(std::string_view(text[i]).substr(eq + 1)));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ParseError(n, "unknown key '" + key + "'");
    }
    if (key == "name") {
      if (cur) out.push_back(finish(*cur));
      if (value.empty()) throw ParseError(n, "empty scenario name");
      cur = Pending{};
      cur->line = n;
    } else if (!cur) {
      throw ParseError(n, "key '" + key + "' before the first 'name'");
    }
    if (cur->values.contains(key)) {
      throw ParseError(n, "duplicate key '" + key + "'");
    }
    cur->values[key] = value;
    cur->lines[key] = n;
  }
  if (cur) out.push_back(finish(*cur));
  return out;
}

std::vector<Scenario> parse_scenario_csv(const CsvDocument& doc) {
  const auto expected = split(kScenarioHeader, ',');
  const CsvLine* header = doc.header();
  if (header == nullptr || header->cells != expected) {
    throw ParseError(header ? header->number : 1,
                     "expected header '" + std::string(kScenarioHeader) + "'");
  }
  std::vector<Scenario> out;
  for (const CsvLine* row : doc.rows()) {
    if (row->cells.size() != expected.size()) {
      throw ParseError(row->number, "expected " +
                                        std::to_string(expected.size()) +
                                        " cells");
    }
    Scenario s;
    s.name = std::string(trim(row->cells[0]));
    if (s.name.empty()) throw ParseError(row->number, "empty scenario name");
    s.normal.t_comp_accel = parse_seconds(row->cells[1], row->number);
    s.accel.t_comp_accel = parse_seconds(row->cells[2], row->number);
    s.normal.t_comp_plain = s.accel.t_comp_plain =
        parse_seconds(row->cells[3], row->number);
    s.normal.t_noncomp = s.accel.t_noncomp =
        parse_seconds(row->cells[4], row->number);
    s.normal.t_comm = s.accel.t_comm = parse_seconds(row->cells[5], row->number);
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Scenario> parse_scenarios(std::istream& in) {
  std::vector<std::string> text;
  std::string line;
  while (std::getline(in, line)) text.push_back(line);
  for (const auto& l : text) {
    if (is_verbatim(l)) continue;
    if (trim(l).starts_with("name,")) {
      std::istringstream again;
      std::string joined;
      for (const auto& t : text) joined += t + '\n';
      again.str(joined);
      return parse_scenario_csv(parse_csv(again));
    }
    break;
  }
  return parse_keyed(text);
}

}  // namespace milc::model
