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

#include "milc/verify/suite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "milc/simd/backend.hpp"
#include "milc/verify/operands.hpp"
#include "milc/verify/ulp.hpp"

namespace milc::verify {

std::mt19937_64 trial_engine(std::uint64_t seed, Routine routine,
                             std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(routine),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::string_view check_name(CheckKind k) {
  switch (k) {
    case CheckKind::kBackend:
      return "backend";
    case CheckKind::kAlignment:
      return "alignment";
    case CheckKind::kOracle:
      return "oracle";
    case CheckKind::kAdjoint:
      return "adjoint";
    case CheckKind::kLinearity:
      return "linearity";
    case CheckKind::kSum4dir:
      return "sum4dir";
    case CheckKind::kUnitary:
      return "unitary";
  }
  return "?";
}

std::vector<CheckKind> checks_for(Routine routine) {
  std::vector<CheckKind> ks{CheckKind::kBackend, CheckKind::kAlignment,
                            CheckKind::kOracle};
  switch (routine) {
    case Routine::kMultSu3An:
      ks.push_back(CheckKind::kAdjoint);
      ks.push_back(CheckKind::kUnitary);
      break;
    case Routine::kMultSu3Na:
      ks.push_back(CheckKind::kAdjoint);
      break;
    case Routine::kMultSu3MatVec:
      ks.push_back(CheckKind::kLinearity);
      break;
    case Routine::kMultSu3MatVecSum4dir:
      ks.push_back(CheckKind::kSum4dir);
      break;
    default:
      break;
  }
  return ks;
}

double tolerance(CheckKind k, Precision p) {
  switch (k) {
    case CheckKind::kBackend:
    case CheckKind::kOracle:
      return 2.0;
    case CheckKind::kAlignment:
      return 0.0;
    case CheckKind::kAdjoint:
    case CheckKind::kLinearity:
    case CheckKind::kSum4dir:
      return 4.0;
    case CheckKind::kUnitary:
      return p == Precision::kDouble ? 1e-12 : 1e-5;
  }
  return 0.0;
}

namespace {

template <typename T>
void corrupt(std::vector<T>& out) {
  for (int i = 0; i < 16; ++i) {
    out[0] = std::nextafter(out[0], std::numeric_limits<T>::infinity());
  }
}

struct Worst {
  double error = 0.0;
  std::uint64_t trial = 0;
  std::size_t component = 0;

  void update(double e, std::uint64_t t, std::size_t c) {
    if (e > error || std::isnan(e)) {
      error = std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
      trial = t;
      component = c;
    }
  }
};

template <typename T>
void compare_ulp(Worst& w, std::uint64_t trial, const std::vector<T>& x,
                 const std::vector<T>& y) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    w.update(ulp_distance(x[k], y[k]), trial, k);
  }
}

template <typename T, typename U>
void compare_scaled(Worst& w, std::uint64_t trial, const std::vector<T>& x,
                    const std::vector<U>& y, const std::vector<T>& scale) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    w.update(scaled_ulp(x[k], y[k], scale[k]), trial, k);
  }
}

// The oracle runs one step wider than the data so that its own rounding is
// negligible and the measured distance is the kernel's error alone.
template <typename T>
using Wide = std::conditional_t<std::is_same_v<T, float>, double, long double>;

template <typename T>
std::vector<Wide<T>> wide_oracle(Routine routine, const OperandSet<T>& o) {
  return oracle_routine(routine, transform<Wide<T>>(o, [](T x) {
                          return static_cast<Wide<T>>(x);
                        }));
}

template <typename T>
std::vector<T> flatten(const Su3Vector<T>& v) {
  std::vector<T> out;
  detail::append(out, v);
  return out;
}

template <typename T>
std::vector<T> flatten(const Su3Matrix<T>& m) {
  std::vector<T> out;
  detail::append(out, m);
  return out;
}

template <typename T>
void one_trial(CheckKind kind, Routine routine, const OperandSet<T>& o,
               std::uint64_t trial, bool inject_fault, Worst& w) {
  switch (kind) {
    case CheckKind::kBackend: {
      auto vec = run_routine<VectorBackend>(routine, o);
      if (inject_fault) corrupt(vec);
      compare_ulp(w, trial, vec, run_routine<ScalarBackend>(routine, o));
      break;
    }
    case CheckKind::kAlignment:
      compare_ulp(w, trial, run_routine<AlignedVectorBackend>(routine, o),
                  run_routine<VectorBackend>(routine, o));
      break;
    case CheckKind::kOracle:
      compare_scaled(w, trial, run_routine<ScalarBackend>(routine, o),
                     wide_oracle(routine, o), oracle_scale(routine, o));
      break;
    case CheckKind::kAdjoint: {
      alignas(16) Su3Matrix<T> lhs, rhs;
      if (routine == Routine::kMultSu3An) {
        scalar::mult_su3_an(o.a, o.b, lhs);
        scalar::mult_su3_nn(adjoint(o.a), o.b, rhs);
      } else {
        scalar::mult_su3_na(o.a, o.b, lhs);
        scalar::mult_su3_nn(o.a, adjoint(o.b), rhs);
      }
      compare_ulp(w, trial, flatten(lhs), flatten(rhs));
      break;
    }
    case CheckKind::kLinearity: {
      Su3Vector<T> sum, lhs, pa, pb, rhs;
      scalar::add_su3_vector(o.u, o.w, sum);
      scalar::mult_su3_mat_vec(o.a, sum, lhs);
      scalar::mult_su3_mat_vec(o.a, o.u, pa);
      scalar::mult_su3_mat_vec(o.a, o.w, pb);
      scalar::add_su3_vector(pa, pb, rhs);
      const auto abs = transform<AbsBound<T>>(o, [](T x) { return AbsBound<T>(x); });
      const auto bound = oracle::vec_add(oracle::mat_vec(abs.a, abs.u),
                                         oracle::mat_vec(abs.a, abs.w));
      std::vector<T> scale;
      for (const auto& z : bound.c) {
        scale.push_back(z.re.v);
        scale.push_back(z.im.v);
      }
      compare_scaled(w, trial, flatten(lhs), flatten(rhs), scale);
      break;
    }
    case CheckKind::kSum4dir: {
      Su3Vector<T> lhs, rhs, part, acc;
      scalar::mult_su3_mat_vec_sum_4dir(std::span<const Su3Matrix<T>, 4>(o.a4),
                                        std::span<const Su3Vector<T>, 4>(o.v4),
                                        lhs);
      scalar::mult_su3_mat_vec(o.a4[0], o.v4[0], rhs);
      for (std::size_t d = 1; d < 4; ++d) {
        scalar::mult_su3_mat_vec(o.a4[d], o.v4[d], part);
        scalar::add_su3_vector(rhs, part, acc);
        rhs = acc;
      }
      compare_scaled(w, trial, flatten(lhs), flatten(rhs),
                     oracle_scale(Routine::kMultSu3MatVecSum4dir, o));
      break;
    }
    case CheckKind::kUnitary: {
      Su3Matrix<T> ub, back;
      scalar::mult_su3_nn(o.a, o.b, ub);
      scalar::mult_su3_an(o.a, ub, back);
      T norm = 0;
      for (const auto& z : o.b.e) {
        norm = std::max({norm, std::fabs(z.re), std::fabs(z.im)});
      }
      const auto x = flatten(back);
      const auto y = flatten(o.b);
      for (std::size_t k = 0; k < x.size(); ++k) {
        w.update(static_cast<double>(std::fabs(x[k] - y[k])) / norm, trial, k);
      }
      break;
    }
  }
}

template <typename T>
std::vector<CheckResult> checks_impl(std::span<const CheckKind> kinds,
                                     Routine routine, Precision precision,
                                     const VerifyConfig& config) {
  std::vector<Worst> worst(kinds.size());
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    auto g = trial_engine(config.seed, routine, t);
    OperandSet<T> o = random_operands<T>(g);
    if (config.identity_inputs) {
      o.a = o.b = identity_matrix<T>();
      o.a4.fill(identity_matrix<T>());
    }
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      if (kinds[i] == CheckKind::kUnitary && !config.identity_inputs) {
        OperandSet<T> ou = o;
        ou.a = random_unitary<T>(g);
        one_trial(kinds[i], routine, ou, t, config.inject_fault, worst[i]);
      } else {
        one_trial(kinds[i], routine, o, t, config.inject_fault, worst[i]);
      }
    }
  }
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    CheckResult r;
    r.check = kinds[i];
    r.routine = routine;
    r.precision = precision;
    r.trials = config.trials;
    r.max_error = worst[i].error;
    r.tolerance = tolerance(kinds[i], precision);
    r.worst_trial = worst[i].trial;
    r.worst_component = worst[i].component;
    r.passed = worst[i].error <= r.tolerance;
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> run_checks(std::span<const CheckKind> kinds,
                                    Routine routine, Precision precision,
                                    const VerifyConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  return precision == Precision::kDouble
             ? checks_impl<double>(kinds, routine, precision, config)
             : checks_impl<float>(kinds, routine, precision, config);
}

}  // namespace

CheckResult run_check(CheckKind kind, Routine routine, Precision precision,
                      const VerifyConfig& config) {
  const CheckKind kinds[] = {kind};
  return run_checks(kinds, routine, precision, config).front();
}

std::vector<CheckResult> run_verify(const VerifyConfig& config) {
  std::vector<Routine> routines = config.routines;
  if (routines.empty()) routines.assign(kAllRoutines.begin(), kAllRoutines.end());
  std::vector<Precision> precisions = config.precisions;
  if (precisions.empty()) precisions = {Precision::kSingle, Precision::kDouble};
  std::vector<CheckResult> results;
  for (Routine r : routines) {
    for (Precision p : precisions) {
      const auto kinds = checks_for(r);
      for (auto& c : run_checks(kinds, r, p, config)) results.push_back(c);
    }
  }
  return results;
}

}  // namespace milc::verify
