// Copyright 2026 The picodes Authors
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

#include "picodes/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "picodes/parallel.hpp"

namespace picodes {

void SynthesisParams::validate() const {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  if (w < 1) throw std::invalid_argument("w must be at least 1");
  if (u < 2) throw std::invalid_argument("u must be at least 2");
  std::set<Partition> seen;
  for (const auto& q : q_subset) {
    if (q.n() != w) {
      throw std::invalid_argument("subset element " + q.to_string() + " is not a partition of w=" +
                                  std::to_string(w));
    }
    if (!seen.insert(q).second) throw std::invalid_argument("duplicate subset element " + q.to_string());
  }
}

std::vector<Partition> SynthesisParams::effective_q() const {
  if (q_subset.empty()) return enumerate_partitions(w);
  auto out = q_subset;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SynthesisParams SynthesisParams::with_defaults(int t, std::optional<int> w, std::optional<int> u) {
  SynthesisParams params;
  params.t = t;
  params.w = w.value_or(t);
  params.u = u.value_or(t + 1);
  return params;
}

DickeBasis build_qu(const SynthesisParams& params) {
  params.validate();
  DickeBasis basis;
  basis.n = params.n();
  for (const auto& q : params.effective_q()) {
    Occupation label = q.padded(basis.n);
    for (int& entry : label) entry *= params.u;
    basis.labels.push_back(std::move(label));
  }
  basis.labels.emplace_back(static_cast<std::size_t>(basis.n), 1);

  const std::set<Occupation> distinct(basis.labels.begin(), basis.labels.end());
  if (distinct.size() != basis.labels.size()) {
    throw ConsistencyError("duplicate Dicke label in Q_u");
  }
  return basis;
}

namespace {

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// Distinct nonzero entries of q with their multiplicities.
struct ValueClass {
  int value;
  int multiplicity;
};

std::vector<ValueClass> value_classes(std::span<const int> q) {
  std::map<int, int, std::greater<>> counts;
  for (int v : q) {
    if (v > 0) ++counts[v];
  }
  std::vector<ValueClass> out;
  for (const auto& [value, count] : counts) out.push_back({value, count});
  return out;
}

// Sum over injective placements of parts[j..] onto modes of q, grouped by
// value class, of prod C(q_mode, part).
BigInt placement_sum(const std::vector<int>& parts, std::size_t j,
                     const std::vector<ValueClass>& classes, std::vector<int>& used) {
  if (j == parts.size()) return 1;
  BigInt total = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int free_modes = classes[c].multiplicity - used[c];
    if (free_modes <= 0 || classes[c].value < parts[j]) continue;
    ++used[c];
    const BigInt rest = placement_sum(parts, j + 1, classes, used);
    --used[c];
    if (rest != 0) total += rest * free_modes * binomial(classes[c].value, parts[j]);
  }
  return total;
}

BigInt padded_orbit_size(const Partition& tau, int n) {
  if (tau.length() > n) return 0;
  return orbit_size(tau.padded(n));
}

}  // namespace

Rational matrix_element(const Partition& tau, std::span<const int> q) {
  const int n = static_cast<int>(q.size());
  if (tau.length() > n) return 0;

  const auto classes = value_classes(q);
  std::vector<int> used(classes.size(), 0);
  BigInt ordered = placement_sum(tau.parts(), 0, classes, used);

  // Placements that only swap equal parts give the same error vector.
  std::map<int, int> part_multiplicity;
  for (int part : tau.parts()) ++part_multiplicity[part];
  for (const auto& [part, count] : part_multiplicity) ordered /= factorial(count);

  return Rational(ordered, padded_orbit_size(tau, n));
}

ConstraintMatrix build_matrix(int t, const DickeBasis& basis) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  for (const auto& label : basis.labels) {
    if (static_cast<int>(label.size()) != basis.n || weight(label) != basis.n) {
      throw std::invalid_argument("Dicke label " + occupation_key(label) + " does not have weight n");
    }
  }

  ConstraintMatrix out;
  out.t = t;
  out.rows = error_labels(t);
  out.columns = basis;
  const auto rows = static_cast<Eigen::Index>(out.rows.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  out.a = RationalMatrix(rows, cols);

  parallel_for(static_cast<std::size_t>(rows * cols), [&](std::size_t flat) {
    const auto i = static_cast<Eigen::Index>(flat) / cols;
    const auto j = static_cast<Eigen::Index>(flat) % cols;
    out.a(i, j) = matrix_element(out.rows[static_cast<std::size_t>(i)].partition,
                                 basis.labels[static_cast<std::size_t>(j)]);
  });

  if (!row_sum_identity_holds(out)) {
    throw ConsistencyError("constraint matrix violates the per-weight row-sum identity");
  }
  return out;
}

ConstraintMatrix build_matrix(const SynthesisParams& params) {
  return build_matrix(params.t, build_qu(params));
}

bool row_sum_identity_holds(const ConstraintMatrix& m) {
  const int n = m.n();
  for (int k = 1; k <= m.t; ++k) {
    RationalVector sum = RationalVector::Zero(m.a.cols());
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      if (m.rows[i].weight != k) continue;
      const Rational c(padded_orbit_size(m.rows[i].partition, n));
      sum += c * m.a.row(static_cast<Eigen::Index>(i)).transpose();
    }
    const Rational expected(binomial(n, k));
    for (const auto& entry : sum) {
      if (entry != expected) return false;
    }
  }
  return true;
}

bool row_dependence_check(const ConstraintMatrix& m, int h, int w_err) {
  if (h < 1 || h >= w_err || w_err > m.t) {
    throw std::invalid_argument("row_dependence_check requires 1 <= h < w_err <= t");
  }
  const int n = m.n();
  auto b_row = [&](std::size_t i) -> RationalVector {
    const Rational c(padded_orbit_size(m.rows[i].partition, n));
    return c * m.a.row(static_cast<Eigen::Index>(i)).transpose();
  };

  // The last row of weight h is the all-ones partition (1^h).
  std::size_t anchor = 0;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (m.rows[i].weight == h) anchor = i;
  }
  const RationalVector lhs = Rational(binomial(n - h, w_err - h)) * b_row(anchor);

  RationalVector rhs = RationalVector::Zero(m.a.cols());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (m.rows[i].weight != w_err) continue;
    const Rational d(elementary_symmetric(m.rows[i].partition, h));
    if (d != 0) rhs += d * b_row(i);
  }
  return lhs == rhs;
}

int min_distance(const DickeBasis& basis) {
  std::vector<Occupation> sorted = basis.labels;
  for (auto& label : sorted) std::sort(label.begin(), label.end(), std::greater<>());

  int best = -1;
  auto consider = [&](int d) { best = best < 0 ? d : std::min(best, d); };

  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      int d = 0;
      for (std::size_t i = 0; i < sorted[a].size(); ++i) d += std::abs(sorted[a][i] - sorted[b][i]);
      consider(d);
    }
    // Swapping two entries of different value v, v' moves 2|v - v'|.
    std::vector<int> values(sorted[a].begin(), sorted[a].end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t i = 1; i < values.size(); ++i) consider(2 * (values[i - 1] - values[i]));
  }
  if (best < 0) throw std::domain_error("minimum distance undefined for a single constant label");
  return best;
}

int min_distance_bruteforce(const DickeBasis& basis, std::size_t cap) {
  BigInt total = 0;
  for (const auto& label : basis.labels) total += orbit_size(label);
  if (total > cap) {
    throw std::length_error("expanded orbit union has " + total.str() + " vectors, cap is " +
                            std::to_string(cap));
  }

  std::vector<Occupation> expanded;
  for (const auto& label : basis.labels) {
    Occupation v = label;
    std::sort(v.begin(), v.end());
    do {
      expanded.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
  }

  int best = -1;
  for (std::size_t a = 0; a < expanded.size(); ++a) {
    for (std::size_t b = a + 1; b < expanded.size(); ++b) {
      int d = 0;
      for (std::size_t i = 0; i < expanded[a].size(); ++i) d += std::abs(expanded[a][i] - expanded[b][i]);
      if (d > 0) best = best < 0 ? d : std::min(best, d);
    }
  }
  if (best < 0) throw std::domain_error("minimum distance undefined for a single vector");
  return best;
}

CodeSpec code_from_vector(const SynthesisParams& params, const DickeBasis& basis,
                          const RationalVector& x, int distance, int nullity) {
  if (static_cast<std::size_t>(x.size()) != basis.size()) {
    throw std::invalid_argument("coefficient vector does not match the basis size");
  }
  Rational sum = 0;
  Rational positive = 0;
  for (const auto& entry : x) {
    sum += entry;
    if (entry > 0) positive += entry;
  }
  if (positive == 0) throw std::invalid_argument("coefficient vector is zero");
  if (sum != 0) throw std::invalid_argument("coefficient vector does not sum to zero");

  CodeSpec spec;
  spec.params = params;
  spec.basis = basis;
  spec.x = x;
  spec.distance = distance;
  spec.nullity = nullity;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Rational& entry = x(static_cast<Eigen::Index>(j));
    if (entry > 0) spec.zero_weights.push_back({basis.labels[j], entry / positive});
    if (entry < 0) spec.one_weights.push_back({basis.labels[j], -entry / positive});
  }
  return spec;
}

SynthesisResult synthesize(const SynthesisParams& params) {
  const DickeBasis basis = build_qu(params);
  const int required = 2 * params.t + 1;
  int distance = 0;
  try {
    distance = min_distance(basis);
  } catch (const std::domain_error&) {
    return SynthesisFailure{SynthesisFailure::Reason::distance, 0, required, 0};
  }
  if (distance < required) {
    return SynthesisFailure{SynthesisFailure::Reason::distance, distance, required, 0};
  }

  const ConstraintMatrix m = build_matrix(params.t, basis);
  const NullspaceBasis kernel = nullspace(m.a);
  const int nullity = static_cast<int>(kernel.nullity());
  if (nullity == 0) {
    return SynthesisFailure{SynthesisFailure::Reason::nullity, distance, required, 0};
  }

  RationalVector x = kernel.vectors.front();
  if (x(x.size() - 1) < 0) x = -x;

  // The first row is all ones, so any kernel vector sums to zero.
  if (x.sum() != 0) throw ConsistencyError("nullspace vector does not sum to zero");
  return code_from_vector(params, basis, x, distance, nullity);
}

double fidelity_lower_bound(int total_excitation, int t, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::domain_error("gamma must lie in [0, 1]");
  if (t < 0 || t > total_excitation) throw std::domain_error("t must lie in [0, N]");
  double total = 0.0;
  double choose = 1.0;
  for (int k = 0; k <= t; ++k) {
    if (k > 0) choose = choose * (total_excitation - k + 1) / k;
    total += choose * std::pow(gamma, k) * std::pow(1.0 - gamma, total_excitation - k);
  }
  return total;
}

long nullity_lower_bound(int t, int w) {
  const long binom_t2 = static_cast<long>(t) * (t - 1) / 2;
  return static_cast<long>(partition_count(w)) + 1 -
         (static_cast<long>(cumulative_partition_count(t)) - binom_t2);
}

SearchResult search_min_excitation(int t, SearchMode mode, int w_max) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  SearchResult result;
  result.mode = mode;
  result.t = t;

  if (mode == SearchMode::inequality) {
    const std::uint64_t needed = cumulative_partition_count(t);
    const std::uint64_t binom_t2 = static_cast<std::uint64_t>(t) * (t - 1) / 2;
    for (int w = 2; w <= 400; ++w) {
      const bool holds = partition_count(w) + binom_t2 >= needed;
      result.scan_log.push_back("w=" + std::to_string(w) + " p(w)=" + std::to_string(partition_count(w)) +
                                (holds ? " satisfies" : " fails"));
      if (holds) {
        result.w = w;
        result.u = t + 1;
        result.N = w * (t + 1);
        return result;
      }
    }
    throw SearchExhausted("no w <= 400 satisfies the counting inequality", result.scan_log);
  }

  if (w_max < 1) throw std::invalid_argument("w_max must be at least 1");
  for (int total = 2; total <= w_max * (t + 1); ++total) {
    for (int w = std::min(w_max, total / 2); w >= 1; --w) {
      if (total % w != 0) continue;
      SynthesisParams params;
      params.t = t;
      params.w = w;
      params.u = total / w;
      auto outcome = synthesize(params);
      std::string entry = "N=" + std::to_string(total) + " w=" + std::to_string(w) +
                          " u=" + std::to_string(params.u) + ": ";
      if (auto* failure = std::get_if<SynthesisFailure>(&outcome)) {
        result.scan_log.push_back(entry + failure->reason_name() + " failure");
        continue;
      }
      result.scan_log.push_back(entry + "code found");
      result.w = w;
      result.u = params.u;
      result.N = total;
      result.certificate = std::get<CodeSpec>(std::move(outcome));
      return result;
    }
  }
  throw SearchExhausted("no code with w <= " + std::to_string(w_max) + " for t=" + std::to_string(t),
                        result.scan_log);
}

}  // namespace picodes
