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

#include "picodes/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "picodes/parallel.hpp"

namespace picodes {

void SparseFockState::add(const Occupation& basis, double amplitude) {
  if (amplitude == 0.0) return;
  if (static_cast<int>(basis.size()) != modes_) {
    throw std::invalid_argument("basis state has the wrong number of modes");
  }
  auto [it, inserted] = amplitudes_.try_emplace(basis, amplitude);
  if (inserted) return;
  it->second += amplitude;
  if (it->second == 0.0) amplitudes_.erase(it);
}

double SparseFockState::amplitude(const Occupation& basis) const {
  const auto it = amplitudes_.find(basis);
  return it == amplitudes_.end() ? 0.0 : it->second;
}

double SparseFockState::norm_squared() const {
  double total = 0.0;
  for (const auto& [basis, amp] : amplitudes_) total += amp * amp;
  return total;
}

double SparseFockState::inner(const SparseFockState& other) const {
  const auto& small = size() <= other.size() ? *this : other;
  const auto& large = size() <= other.size() ? other : *this;
  double total = 0.0;
  for (const auto& [basis, amp] : small) {
    const auto it = large.amplitudes_.find(basis);
    if (it != large.amplitudes_.end()) total += amp * it->second;
  }
  return total;
}

SparseFockState SparseFockState::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != modes_) throw std::invalid_argument("permutation size mismatch");
  SparseFockState out(modes_);
  Occupation target(static_cast<std::size_t>(modes_));
  for (const auto& [basis, amp] : amplitudes_) {
    for (int i = 0; i < modes_; ++i) target[i] = basis[perm[i]];
    out.amplitudes_.emplace(target, amp);
  }
  return out;
}

SparseFockState SparseFockState::scaled(double factor) const {
  SparseFockState out(modes_);
  if (factor == 0.0) return out;
  for (const auto& [basis, amp] : amplitudes_) out.amplitudes_.emplace_hint(out.amplitudes_.end(), basis, amp * factor);
  return out;
}

SparseFockState& SparseFockState::add_scaled(const SparseFockState& other, double factor) {
  for (const auto& [basis, amp] : other) add(basis, factor * amp);
  return *this;
}

SparseFockState dicke_state(std::span<const int> q, std::size_t cap) {
  const BigInt count = orbit_size(q);
  if (count > cap) {
    throw std::length_error("orbit of " + occupation_key(q) + " has " + count.str() +
                            " elements, cap is " + std::to_string(cap));
  }
  const double amp = 1.0 / std::sqrt(count.convert_to<double>());
  SparseFockState out(static_cast<int>(q.size()));
  Occupation v(q.begin(), q.end());
  std::sort(v.begin(), v.end());
  do {
    out.add(v, amp);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

SparseFockState codeword_state(const CodeSpec& spec, Logical which, std::size_t cap) {
  const auto& weights = which == Logical::zero ? spec.zero_weights : spec.one_weights;
  BigInt support = 0;
  for (const auto& entry : weights) support += orbit_size(entry.label);
  if (support > cap) {
    throw std::length_error("codeword support " + support.str() + " exceeds cap " + std::to_string(cap));
  }
  SparseFockState out(spec.n());
  for (const auto& entry : weights) {
    const double amp = std::sqrt(entry.weight.convert_to<double>());
    out.add_scaled(dicke_state(entry.label, cap), amp);
  }
  return out;
}

namespace {

double binomial_real(int m, int k) {
  if (k < 0 || k > m) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (m - k + i) / i;
  return out;
}

}  // namespace

double kraus_element(int m, int k, double gamma) {
  if (k > m) return 0.0;
  return std::sqrt(binomial_real(m, k)) * std::sqrt(std::pow(1.0 - gamma, m - k) * std::pow(gamma, k));
}

double damping_diagonal(int m, int k, double gamma) {
  if (k > m) return 0.0;
  return binomial_real(m, k) * std::pow(1.0 - gamma, m - k) * std::pow(gamma, k);
}

SparseFockState apply_ad(std::span<const int> k, const SparseFockState& psi, double gamma) {
  if (static_cast<int>(k.size()) != psi.modes()) throw std::invalid_argument("error vector size mismatch");
  SparseFockState out(psi.modes());
  Occupation target(k.size());
  for (const auto& [basis, amp] : psi) {
    double coefficient = amp;
    for (std::size_t i = 0; i < k.size() && coefficient != 0.0; ++i) {
      if (basis[i] < k[i]) {
        coefficient = 0.0;
        break;
      }
      coefficient *= kraus_element(basis[i], k[i], gamma);
      target[i] = basis[i] - k[i];
    }
    if (coefficient != 0.0) out.add(target, coefficient);
  }
  return out;
}

namespace {

void compositions(int mode, int remaining, Occupation& current,
                  const std::function<void(const Occupation&)>& fn) {
  const int n = static_cast<int>(current.size());
  if (mode == n - 1) {
    current[mode] = remaining;
    fn(current);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current[mode] = v;
    compositions(mode + 1, remaining - v, current, fn);
  }
  current[mode] = 0;
}

}  // namespace

void for_each_weak_composition(int n, int weight, const std::function<void(const Occupation&)>& fn) {
  if (n < 1 || weight < 0) return;
  Occupation current(static_cast<std::size_t>(n), 0);
  compositions(0, weight, current, fn);
}

std::vector<Occupation> error_vectors(int n, int max_weight) {
  std::vector<Occupation> out;
  for (int kappa = 0; kappa <= max_weight; ++kappa) {
    for_each_weak_composition(n, kappa, [&](const Occupation& k) { out.push_back(k); });
  }
  return out;
}

std::size_t error_vector_count(int n, int t) {
  BigInt total = 0;
  for (int kappa = 0; kappa <= t; ++kappa) total += binomial(n + kappa - 1, kappa);
  if (total > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  return total.convert_to<std::size_t>();
}

std::string scope_name(Scope scope) { return scope == Scope::full ? "full" : "partition-reduced"; }

Scope parse_scope(const std::string& name) {
  if (name == "full") return Scope::full;
  if (name == "partition-reduced" || name == "reduced") return Scope::partition_reduced;
  throw std::invalid_argument("unknown scope '" + name + "'");
}

double VerificationReport::max_violation() const {
  return std::max({max_nondeformation_violation, max_offdiag_violation, max_ortho_violation});
}

namespace {

std::size_t checked_square(std::size_t count) {
  if (count != 0 && count > std::numeric_limits<std::size_t>::max() / count) {
    return std::numeric_limits<std::size_t>::max();
  }
  return count * count;
}

// Uniform element of K_{n,0} u ... u K_{n,t}: weight by class size, then a
// uniform stars-and-bars placement.
Occupation sample_error_vector(int n, int t, std::mt19937_64& rng) {
  std::vector<double> sizes;
  for (int kappa = 0; kappa <= t; ++kappa) sizes.push_back(binomial(n + kappa - 1, kappa).convert_to<double>());
  std::discrete_distribution<int> pick_weight(sizes.begin(), sizes.end());
  const int kappa = pick_weight(rng);

  std::vector<int> slots(static_cast<std::size_t>(n + kappa - 1));
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<int> bars(slots.begin(), slots.begin() + (n - 1));
  std::sort(bars.begin(), bars.end());

  Occupation out(static_cast<std::size_t>(n), 0);
  int previous = -1;
  for (int i = 0; i < n - 1; ++i) {
    out[i] = bars[i] - previous - 1;
    previous = bars[i];
  }
  out[n - 1] = n + kappa - 1 - previous - 1;
  return out;
}

struct ErrorImages {
  std::vector<SparseFockState> zero;
  std::vector<SparseFockState> one;
};

ErrorImages images_of(const std::vector<Occupation>& errors, const SparseFockState& c0,
                      const SparseFockState& c1, double gamma) {
  ErrorImages out;
  out.zero.resize(errors.size());
  out.one.resize(errors.size());
  parallel_for(errors.size(), [&](std::size_t i) {
    out.zero[i] = apply_ad(errors[i], c0, gamma);
    out.one[i] = apply_ad(errors[i], c1, gamma);
  });
  return out;
}

std::vector<Occupation> reduced_representatives(int n, int t) {
  std::vector<Occupation> out{Occupation(static_cast<std::size_t>(n), 0)};
  for (const auto& label : error_labels(t)) {
    if (label.partition.length() <= n) out.push_back(label.partition.padded(n));
  }
  return out;
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::domain_error("gamma must lie in (0, 1)");
}

}  // namespace

VerificationReport kl_verify(const CodeSpec& spec, double gamma, Scope scope, const OracleLimits& limits) {
  check_gamma(gamma);
  const int n = spec.n();
  const int t = spec.params.t;

  VerificationReport report;
  report.scope = scope;
  report.gamma = gamma;

  std::vector<Occupation> pair_errors;
  std::vector<Occupation> diagonal_errors;
  if (scope == Scope::full) {
    const std::size_t pairs = checked_square(error_vector_count(n, t));
    if (pairs > limits.pair_cap) {
      throw std::length_error("full scope needs " + std::to_string(pairs) + " pairs, cap is " +
                              std::to_string(limits.pair_cap) + "; use the partition-reduced scope");
    }
    pair_errors = error_vectors(n, t);
    diagonal_errors = pair_errors;
  } else {
    diagonal_errors = reduced_representatives(n, t);
    std::set<Occupation> chosen(diagonal_errors.begin(), diagonal_errors.end());
    std::mt19937_64 rng(limits.seed);
    for (std::size_t s = 0; s < limits.sampled_errors; ++s) chosen.insert(sample_error_vector(n, t, rng));
    pair_errors.assign(chosen.begin(), chosen.end());
  }

  const SparseFockState c0 = codeword_state(spec, Logical::zero, limits.state_cap);
  const SparseFockState c1 = codeword_state(spec, Logical::one, limits.state_cap);

  const ErrorImages diag = images_of(diagonal_errors, c0, c1, gamma);
  report.nondegenerate = true;
  for (std::size_t i = 0; i < diagonal_errors.size(); ++i) {
    const double n0 = diag.zero[i].norm_squared();
    const double n1 = diag.one[i].norm_squared();
    report.max_nondeformation_violation = std::max(report.max_nondeformation_violation, std::abs(n0 - n1));
    if (!(n0 > 0.0 && n1 > 0.0)) report.nondegenerate = false;
  }

  const ErrorImages images = scope == Scope::full ? diag : images_of(pair_errors, c0, c1, gamma);
  std::vector<double> offdiag(pair_errors.size(), 0.0);
  std::vector<double> ortho(pair_errors.size(), 0.0);
  parallel_for(pair_errors.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < pair_errors.size(); ++j) {
      if (i != j) {
        offdiag[i] = std::max({offdiag[i], std::abs(images.zero[i].inner(images.zero[j])),
                               std::abs(images.one[i].inner(images.one[j]))});
      }
      ortho[i] = std::max(ortho[i], std::abs(images.zero[i].inner(images.one[j])));
    }
  });
  report.max_offdiag_violation = *std::max_element(offdiag.begin(), offdiag.end());
  report.max_ortho_violation = *std::max_element(ortho.begin(), ortho.end());
  report.pairs_checked = pair_errors.size() * pair_errors.size();
  report.permutation_invariant = permutation_invariance_check(spec, limits.permutation_samples, limits.seed);
  return report;
}

bool nondegeneracy_check(const CodeSpec& spec, double gamma, Scope scope, const OracleLimits& limits) {
  check_gamma(gamma);
  const int n = spec.n();
  const int t = spec.params.t;
  std::vector<Occupation> errors;
  if (scope == Scope::full) {
    if (checked_square(error_vector_count(n, t)) > limits.pair_cap) {
      throw std::length_error("full scope exceeds the pair cap; use the partition-reduced scope");
    }
    errors = error_vectors(n, t);
  } else {
    errors = reduced_representatives(n, t);
  }
  const SparseFockState c0 = codeword_state(spec, Logical::zero, limits.state_cap);
  const SparseFockState c1 = codeword_state(spec, Logical::one, limits.state_cap);
  const ErrorImages images = images_of(errors, c0, c1, gamma);
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(images.zero[i].norm_squared() > 0.0 && images.one[i].norm_squared() > 0.0)) return false;
  }
  return true;
}

bool is_permutation_invariant(const SparseFockState& psi, std::size_t sample_size, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(psi.modes()));
  std::iota(perm.begin(), perm.end(), 0);
  Occupation image(perm.size());
  for (std::size_t s = 0; s < sample_size; ++s) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (const auto& [basis, amp] : psi) {
      for (std::size_t i = 0; i < perm.size(); ++i) image[i] = basis[static_cast<std::size_t>(perm[i])];
      if (psi.amplitude(image) != amp) return false;
    }
  }
  return true;
}

bool permutation_invariance_check(const CodeSpec& spec, std::size_t sample_size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return is_permutation_invariant(codeword_state(spec, Logical::zero), sample_size, rng) &&
         is_permutation_invariant(codeword_state(spec, Logical::one), sample_size, rng);
}

double prop_identity_check(std::span<const int> x, int kappa, double gamma, std::size_t cap) {
  const int n = static_cast<int>(x.size());
  if (binomial(n + kappa - 1, kappa) > cap) {
    throw std::length_error("K_{n,kappa} exceeds the enumeration cap");
  }
  const int chi = weight(x);
  double lhs = 0.0;
  for_each_weak_composition(n, kappa, [&](const Occupation& k) {
    double term = 1.0;
    for (int i = 0; i < n; ++i) {
      SparseFockState mode(1);
      mode.add({x[i]}, 1.0);
      term *= apply_ad(std::span<const int>(&k[i], 1), mode, gamma).norm_squared();
    }
    lhs += term;
  });
  const double rhs =
      std::pow(1.0 - gamma, chi - kappa) * std::pow(gamma, kappa) * binomial(chi, kappa).convert_to<double>();
  return std::abs(lhs - rhs);
}

double entanglement_fidelity(const CodeSpec& spec, double gamma, const OracleLimits& limits) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::domain_error("gamma must lie in [0, 1]");
  const int n = spec.n();
  if (n > limits.fidelity_max_modes) {
    throw std::length_error("explicit recovery needs n <= " + std::to_string(limits.fidelity_max_modes));
  }
  const SparseFockState code[2] = {codeword_state(spec, Logical::zero, limits.state_cap),
                                   codeword_state(spec, Logical::one, limits.state_cap)};

  // Orthonormalized error images; recovery R_x = sum_i |i_L><e_{x,i}|, and
  // the orthogonal complement is sent to |0_L>.
  struct RecoveryVector {
    std::size_t syndrome;
    int logical;
    SparseFockState e;
  };
  std::vector<RecoveryVector> recovery;
  const auto correctable = error_vectors(n, spec.params.t);
  for (std::size_t x = 0; x < correctable.size(); ++x) {
    for (int i = 0; i < 2; ++i) {
      SparseFockState v = apply_ad(correctable[x], code[i], gamma);
      for (const auto& r : recovery) v.add_scaled(r.e, -r.e.inner(v));
      const double norm = std::sqrt(v.norm_squared());
      if (norm < 1e-12) continue;
      recovery.push_back({x, i, v.scaled(1.0 / norm)});
    }
  }

  // Weight above N annihilates every codeword.
  const auto kraus = error_vectors(n, spec.total_excitation());
  std::vector<double> contribution(kraus.size(), 0.0);
  parallel_for(kraus.size(), [&](std::size_t k) {
    const SparseFockState image[2] = {apply_ad(kraus[k], code[0], gamma), apply_ad(kraus[k], code[1], gamma)};
    if (image[0].empty() && image[1].empty()) return;
    std::vector<double> trace(correctable.size(), 0.0);
    double captured0 = 0.0;
    for (const auto& r : recovery) {
      trace[r.syndrome] += r.e.inner(image[r.logical]);
      const double overlap0 = r.e.inner(image[0]);
      captured0 += overlap0 * overlap0;
    }
    double total = 0.0;
    for (double tr : trace) total += 0.25 * tr * tr;
    total += 0.25 * std::max(0.0, image[0].norm_squared() - captured0);
    contribution[k] = total;
  });
  return std::accumulate(contribution.begin(), contribution.end(), 0.0);
}

}  // namespace picodes
