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

// A scalar that counts the arithmetic performed on it.
//
// Every value carries the tally of operations in the expression that
// produced it, and every operation is also added to the thread's active
// CountScope.  The per-value tally gives counts for a single output element;
// the scope gives totals for a whole kernel call.

#ifndef MILC_SU3_COUNTED_HPP_
#define MILC_SU3_COUNTED_HPP_

#include <cstdint>

namespace milc {

struct OpTally {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;

  OpTally& operator+=(const OpTally& o) {
    mults += o.mults;
    adds += o.adds;
    return *this;
  }
  friend bool operator==(const OpTally&, const OpTally&) = default;
};

class CountScope {
 public:
  CountScope() : previous_(active_) { active_ = this; }
  ~CountScope() { active_ = previous_; }
  CountScope(const CountScope&) = delete;
  CountScope& operator=(const CountScope&) = delete;

  const OpTally& totals() const { return totals_; }

  static void record_mult() {
    if (active_ != nullptr) ++active_->totals_.mults;
  }
  static void record_add() {
    if (active_ != nullptr) ++active_->totals_.adds;
  }

 private:
  OpTally totals_;
  CountScope* previous_;
  static thread_local CountScope* active_;
};

class Counted {
 public:
  Counted() = default;
  Counted(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  double value() const { return value_; }
  const OpTally& tally() const { return tally_; }

  friend Counted operator+(const Counted& a, const Counted& b) {
    CountScope::record_add();
    return Counted(a.value_ + b.value_, a.tally_, b.tally_, {0, 1});
  }
  friend Counted operator-(const Counted& a, const Counted& b) {
    CountScope::record_add();
    return Counted(a.value_ - b.value_, a.tally_, b.tally_, {0, 1});
  }
  friend Counted operator*(const Counted& a, const Counted& b) {
    CountScope::record_mult();
    return Counted(a.value_ * b.value_, a.tally_, b.tally_, {1, 0});
  }

 private:
  Counted(double v, OpTally a, OpTally b, OpTally op) : value_(v) {
    tally_ += a;
    tally_ += b;
    tally_ += op;
  }

  double value_ = 0.0;
  OpTally tally_;
};

}  // namespace milc

#endif  // MILC_SU3_COUNTED_HPP_
