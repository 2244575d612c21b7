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

#ifndef PICODES_ORACLE_HPP
#define PICODES_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "picodes/partitions.hpp"
#include "picodes/synthesis.hpp"

namespace picodes {

/// Real superposition of Fock basis states of a fixed number of modes.
/// Zero amplitudes are never stored.
class SparseFockState {
 public:
  using Map = std::map<Occupation, double>;

  SparseFockState() = default;
  explicit SparseFockState(int modes) : modes_(modes) {}

  int modes() const { return modes_; }
  std::size_t size() const { return amplitudes_.size(); }
  bool empty() const { return amplitudes_.empty(); }

  /// Adds to the amplitude of `basis`; drops the entry if it becomes zero.
  void add(const Occupation& basis, double amplitude);
  double amplitude(const Occupation& basis) const;

  double norm_squared() const;
  double inner(const SparseFockState& other) const;

  /// Mode i of the result holds mode perm[i] of this state.
  SparseFockState permuted(std::span<const int> perm) const;

  SparseFockState scaled(double factor) const;

  /// this += factor * other.
  SparseFockState& add_scaled(const SparseFockState& other, double factor);

  Map::const_iterator begin() const { return amplitudes_.begin(); }
  Map::const_iterator end() const { return amplitudes_.end(); }

  friend bool operator==(const SparseFockState&, const SparseFockState&) = default;

 private:
  int modes_ = 0;
  Map amplitudes_;
};

/// Uniform superposition over the orbit of q. Throws std::length_error when
/// the orbit is larger than `cap`.
SparseFockState dicke_state(std::span<const int> q, std::size_t cap = 2000000);

enum class Logical { zero, one };

/// sum_j sqrt(weight_j) |D(q_j)>. Throws std::length_error when the expanded
/// support exceeds `cap`.
SparseFockState codeword_state(const CodeSpec& spec, Logical which, std::size_t cap = 2000000);

/// <m-k|A_k|m> for one mode, read off the Kraus operator definition.
double kraus_element(int m, int k, double gamma);

/// <m|A_k^dagger A_k|m> for one mode in closed form:
/// C(m,k) (1-gamma)^(m-k) gamma^k.
double damping_diagonal(int m, int k, double gamma);

/// A_k = A_{k_1} x ... x A_{k_n} applied to psi.
SparseFockState apply_ad(std::span<const int> k, const SparseFockState& psi, double gamma);

/// Calls fn for every length-n non-negative vector of total weight `weight`,
/// in lexicographically decreasing order.
void for_each_weak_composition(int n, int weight, const std::function<void(const Occupation&)>& fn);

/// All vectors of length n with weight 0..max_weight, weight ascending.
std::vector<Occupation> error_vectors(int n, int max_weight);

/// |K_{n,0}| + ... + |K_{n,t}|, saturating at SIZE_MAX.
std::size_t error_vector_count(int n, int t);

enum class Scope { full, partition_reduced };

std::string scope_name(Scope scope);
Scope parse_scope(const std::string& name);

struct OracleLimits {
  std::size_t pair_cap = 100000;          // full scope: |errors|^2
  std::size_t state_cap = 2000000;        // expanded codeword support
  std::size_t sampled_errors = 24;        // partition-reduced orthogonality
  std::size_t permutation_samples = 16;
  int fidelity_max_modes = 6;
  std::uint64_t seed = 0x5eed'c0de'2019ULL;
};

struct VerificationReport {
  Scope scope = Scope::full;
  double gamma = 0.0;
  std::size_t pairs_checked = 0;
  double max_nondeformation_violation = 0.0;
  double max_offdiag_violation = 0.0;
  double max_ortho_violation = 0.0;
  bool nondegenerate = false;
  bool permutation_invariant = false;

  double max_violation() const;
  bool passed(double tolerance) const { return max_violation() < tolerance; }
};

/// Knill-Laflamme check by direct evaluation. Full scope compares every pair
/// of error vectors of weight <= t and throws std::length_error above
/// limits.pair_cap. Partition-reduced scope checks non-deformation on one
/// representative per error class and orthogonality on a seeded random
/// sample of error vectors.
VerificationReport kl_verify(const CodeSpec& spec, double gamma, Scope scope,
                             const OracleLimits& limits = {});

/// True iff every in-scope error leaves both codewords with positive norm.
bool nondegeneracy_check(const CodeSpec& spec, double gamma, Scope scope = Scope::full,
                         const OracleLimits& limits = {});

/// Applies `sample_size` uniformly random mode permutations and compares
/// the permuted state with the original exactly.
bool is_permutation_invariant(const SparseFockState& psi, std::size_t sample_size,
                              std::mt19937_64& rng);

bool permutation_invariance_check(const CodeSpec& spec, std::size_t sample_size,
                                  std::uint64_t seed = OracleLimits{}.seed);

/// |sum_{k in K_{n,kappa}} <x|A_k^dagger A_k|x> - (1-gamma)^(chi-kappa)
/// gamma^kappa C(chi, kappa)| by brute force, each term evaluated from the
/// single-mode Kraus action. Throws std::length_error above `cap` terms.
double prop_identity_check(std::span<const int> x, int kappa, double gamma,
                           std::size_t cap = 1000000);

/// Entanglement fidelity of the code under the full per-mode damping channel
/// followed by the canonical measure-and-correct recovery for errors of
/// weight <= t. Throws std::length_error when n > limits.fidelity_max_modes.
double entanglement_fidelity(const CodeSpec& spec, double gamma, const OracleLimits& limits = {});

}  // namespace picodes

#endif  // PICODES_ORACLE_HPP
