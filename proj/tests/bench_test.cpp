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
#include <cstring>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include "json.hpp"

#include "milc/bench/harness.hpp"
#include "milc/bench/report.hpp"

namespace milc::bench {
namespace {

BenchConfig hot(std::uint64_t reps) {
  BenchConfig c;
  c.repetitions = reps;
  c.warmup = 0;
  c.min_time_s = 0.0;
  return c;
}

TEST(Harness, SingleRepetition) {
  const TimingRecord r = run_hot(hot(1));
  EXPECT_GT(r.elapsed_s, 0.0);
  EXPECT_LE(r.elapsed_s, 1.0);
  EXPECT_EQ(r.invocations, r.repetitions);
  EXPECT_GE(r.repetitions, 1u);
}

TEST(Harness, ThroughputTimesElapsedIsInvocations) {
  BenchConfig c = hot(100000);
  c.precision = Precision::kSingle;
  const TimingRecord r = run_hot(c);
  EXPECT_NEAR(r.invocations_per_s * r.elapsed_s,
              static_cast<double>(r.invocations), 1e-6 * r.invocations);
  EXPECT_NEAR(r.flops_per_s, r.invocations_per_s * 66.0, 1e-6 * r.flops_per_s);
}

TEST(Harness, MinTimeScalesRepetitions) {
  BenchConfig c = hot(1);
  c.min_time_s = 0.005;
  const TimingRecord r = run_hot(c);
  EXPECT_GE(r.elapsed_s, 0.005);
  EXPECT_GT(r.repetitions, 1u);
}

TEST(Harness, StreamingOnOneSite) {
  BenchConfig c = hot(1);
  c.mode = Mode::kStreaming;
  c.dims = Dims{1, 1, 1, 1};
  for (Routine r : kAllRoutines) {
    c.routine = r;
    const TimingRecord rec = run_streaming(c);
    EXPECT_EQ(rec.invocations, rec.repetitions) << routine_name(r);
    EXPECT_GT(rec.elapsed_s, 0.0);
  }
  c.dims = Dims{4, 2, 2, 2};
  c.routine = Routine::kMultSu3MatVec;
  const TimingRecord rec = run(c);
  EXPECT_EQ(rec.invocations, rec.repetitions * 32);
}

TEST(Harness, ValidationErrors) {
  BenchConfig c = hot(0);
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = hot(1);
  c.mode = Mode::kStreaming;
  EXPECT_THROW(validate(c), std::invalid_argument);  // no dims
  c = hot(1);
  c.min_time_s = -1.0;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = hot(1);
  c.mode = Mode::kStreaming;
  EXPECT_THROW(run_hot(c), std::invalid_argument);
}

TEST(Harness, ConcurrentRunIsRejected) {
  ExclusiveRun held;
  EXPECT_THROW(run_hot(hot(1)), std::runtime_error);
}

TEST(Harness, SlotIsReleasedAfterRun) {
  run_hot(hot(1));
  EXPECT_NO_THROW(run_hot(hot(1)));
}

TEST(Harness, Parsers) {
  EXPECT_EQ(parse_mode("hot"), Mode::kHot);
  EXPECT_EQ(parse_mode("streaming"), Mode::kStreaming);
  EXPECT_FALSE(parse_mode("warm"));
  EXPECT_EQ(parse_alignment("unaligned"), Alignment::kUnaligned);
  EXPECT_EQ(parse_format("json-lines"), Format::kJsonLines);
  EXPECT_FALSE(parse_format("xml"));
}

TEST(Harness, EnvironmentRecorded) {
  const Environment& e = environment();
  EXPECT_GT(e.clock_resolution_s, 0.0);
  EXPECT_LT(e.clock_resolution_s, 1e-3);
}

// Hot and streaming bindings produce the same bits for the same operands.
template <typename T>
std::vector<std::byte> run_bindings(BackendKind backend, Routine routine,
                                    Alignment alignment) {
  const Lattice4D l({2, 2, 2, 2});
  SiteLayout layout;
  if (alignment == Alignment::kUnaligned) layout.misalign = sizeof(T);
  SiteFields<T> f(l, layout);
  fill_fields(f, 5);
  BenchConfig c;
  c.backend = backend;
  c.alignment = alignment;
  apply<T>(c, routine, site_bindings(routine, f), f.volume());
  std::vector<std::byte> out(f.payload_bytes());
  std::memcpy(out.data(), f.base(), out.size());
  return out;
}

TEST(Harness, BackendsAndAlignmentsWriteSameBits) {
  for (Routine r : kAllRoutines) {
    const auto ref = run_bindings<double>(BackendKind::kScalar, r, Alignment::kAligned);
    EXPECT_EQ(run_bindings<double>(BackendKind::kVector, r, Alignment::kAligned), ref)
        << routine_name(r);
    EXPECT_EQ(run_bindings<double>(BackendKind::kVector, r, Alignment::kUnaligned), ref)
        << routine_name(r);
    const auto fref = run_bindings<float>(BackendKind::kScalar, r, Alignment::kAligned);
    EXPECT_EQ(run_bindings<float>(BackendKind::kVector, r, Alignment::kUnaligned), fref)
        << routine_name(r);
  }
}

// ---- speedup ---------------------------------------------------------------

TEST(Speedup, Examples) {
  const auto same = speedup_row(Routine::kMultSu3MatVec, Precision::kDouble,
                                Mode::kHot, 1e-8, 1e-8);
  EXPECT_DOUBLE_EQ(same.ratio, 1.0);
  EXPECT_FALSE(same.anomalous);
  const auto typical = speedup_row(Routine::kMultSu3Nn, Precision::kDouble,
                                   Mode::kHot, 8.80, 5.01);
  EXPECT_NEAR(typical.ratio, 1.7565, 1e-3);
  EXPECT_FALSE(typical.anomalous);
  const auto over = speedup_row(Routine::kSu3Projector, Precision::kDouble,
                                Mode::kHot, 16.14, 4.09);
  EXPECT_NEAR(over.ratio, 3.946, 1e-3);
  EXPECT_TRUE(over.anomalous);
  const auto single = speedup_row(Routine::kSu3Projector, Precision::kSingle,
                                  Mode::kHot, 16.14, 4.09);
  EXPECT_FALSE(single.anomalous);
}

TEST(Speedup, Bounds) {
  EXPECT_EQ(theoretical_max_speedup(Precision::kDouble), 2.0);
  EXPECT_EQ(theoretical_max_speedup(Precision::kSingle), 4.0);
  EXPECT_THROW(speedup_row(Routine::kMultSu3Nn, Precision::kDouble, Mode::kHot,
                           1.0, 0.0),
               std::invalid_argument);
}

TEST(Speedup, SwappingBackendsInvertsRatio) {
  const auto a = speedup_row(Routine::kMultSu3Nn, Precision::kSingle, Mode::kHot, 3.0, 2.0);
  const auto b = speedup_row(Routine::kMultSu3Nn, Precision::kSingle, Mode::kHot, 2.0, 3.0);
  EXPECT_NEAR(a.ratio * b.ratio, 1.0, 1e-15);
}

TEST(Speedup, MismatchedRecordsThrow) {
  TimingRecord ref, vec;
  ref.config.backend = BackendKind::kScalar;
  vec.config.backend = BackendKind::kVector;
  ref.elapsed_s = vec.elapsed_s = 1.0;
  ref.invocations = vec.invocations = 10;
  EXPECT_NO_THROW(speedup_row(ref, vec));
  vec.config.routine = Routine::kMultSu3Nn;
  EXPECT_THROW(speedup_row(ref, vec), std::invalid_argument);
  vec.config.routine = ref.config.routine;
  vec.config.precision = Precision::kSingle;
  EXPECT_THROW(speedup_row(ref, vec), std::invalid_argument);
  vec.config.precision = ref.config.precision;
  EXPECT_THROW(speedup_row(vec, ref), std::invalid_argument);
}

// ---- reports ---------------------------------------------------------------

TimingRecord fake_record() {
  TimingRecord r;
  r.config.routine = Routine::kMultSu3MatVec;
  r.repetitions = r.invocations = 1000;
  r.elapsed_s = 0.5;
  r.invocations_per_s = 2000;
  r.flops_per_s = 132000;
  r.environment = environment();
  return r;
}

TEST(Report, CsvHeaderAndRow) {
  std::ostringstream os;
  const TimingRecord recs[] = {fake_record()};
  write_records(os, recs, Format::kCsv);
  std::istringstream in(os.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header,
            "routine,backend,precision,mode,alignment,reps,elapsed_s,"
            "invocations_per_s,flops_per_s");
  EXPECT_EQ(row.rfind("mult_su3_mat_vec,vector,double,hot,aligned,1000,", 0), 0u)
      << row;
}

TEST(Report, JsonLinesParse) {
  std::ostringstream os;
  const TimingRecord recs[] = {fake_record(), fake_record()};
  write_records(os, recs, Format::kJsonLines);
  std::istringstream in(os.str());
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("routine"), "mult_su3_mat_vec");
    EXPECT_TRUE(j.contains("environment"));
    ++n;
  }
  EXPECT_EQ(n, 2);
}

TEST(Report, SpeedupCsv) {
  std::ostringstream os;
  const SpeedupRow rows[] = {speedup_row(Routine::kSu3Projector,
                                         Precision::kDouble, Mode::kHot, 4, 1)};
  write_speedups(os, rows, Format::kCsv);
  EXPECT_NE(os.str().find("ratio"), std::string::npos);
  EXPECT_NE(os.str().find(",yes"), std::string::npos);
}

}  // namespace
}  // namespace milc::bench
