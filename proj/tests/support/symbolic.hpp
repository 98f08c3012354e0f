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

// A scalar type that records expressions as ordered sums of signed
// products, so a kernel's arithmetic can be read back term by term.

#ifndef MILC_TESTS_SUPPORT_SYMBOLIC_HPP_
#define MILC_TESTS_SUPPORT_SYMBOLIC_HPP_

#include <algorithm>
#include <string>
#include <vector>

namespace symbolic {

struct Term {
  int sign = 1;
  std::vector<std::string> factors;

  std::string str() const {
    std::string s = sign < 0 ? "-" : "+";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      s += (i ? "*" : "") + factors[i];
    }
    return s;
  }
  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Sum of terms in evaluation order.  Default-constructed value is zero.
struct Expr {
  std::vector<Term> terms;

  Expr() = default;
  static Expr leaf(std::string name) {
    Expr e;
    e.terms.push_back({1, {std::move(name)}});
    return e;
  }

  friend Expr operator+(const Expr& a, const Expr& b) {
    Expr r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
  }
  Expr operator-() const {
    Expr r = *this;
    for (auto& t : r.terms) t.sign = -t.sign;
    return r;
  }
  friend Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
  friend Expr operator*(const Expr& a, const Expr& b) {
    Expr r;
    for (const auto& x : a.terms) {
      for (const auto& y : b.terms) {
        Term t{x.sign * y.sign, x.factors};
        t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
        r.terms.push_back(std::move(t));
      }
    }
    return r;
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (const auto& t : terms) out.push_back(t.str());
    return out;
  }
  std::vector<std::string> sorted() const {
    auto s = strings();
    std::sort(s.begin(), s.end());
    return s;
  }
};

}  // namespace symbolic

#endif  // MILC_TESTS_SUPPORT_SYMBOLIC_HPP_
