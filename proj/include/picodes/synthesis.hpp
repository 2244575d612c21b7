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

#ifndef PICODES_SYNTHESIS_HPP
#define PICODES_SYNTHESIS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "picodes/exact.hpp"
#include "picodes/partitions.hpp"
#include "picodes/rational.hpp"

namespace picodes {

/// Inputs of the construction. The code lives on n = u * w modes with total
/// excitation n.
struct SynthesisParams {
  int t = 1;
  int w = 1;
  int u = 2;
  /// Subset of P(w) the code may use. Empty means all of P(w).
  std::vector<Partition> q_subset;

  int n() const { return u * w; }

  /// Throws std::invalid_argument on t < 1, w < 1, u < 2 or a subset element
  /// that is not a partition of w.
  void validate() const;

  /// The subset actually used: q_subset, or P(w) when empty, in
  /// descending-lex order.
  std::vector<Partition> effective_q() const;

  /// w defaults to t and u to t + 1.
  static SynthesisParams with_defaults(int t, std::optional<int> w = std::nullopt,
                                       std::optional<int> u = std::nullopt);
};

/// Column labels of the constraint matrix: u*q padded to n for each q, in
/// descending-lex order of q, then the all-ones vector.
struct DickeBasis {
  std::vector<Occupation> labels;
  int n = 0;

  std::size_t size() const { return labels.size(); }
};

DickeBasis build_qu(const SynthesisParams& params);

/// Normalized expectation of A_tau^dagger A_tau in the Dicke state of q, with
/// the gamma dependence divided out. Exact and gamma-free.
Rational matrix_element(const Partition& tau, std::span<const int> q);

struct ConstraintMatrix {
  RationalMatrix a;
  std::vector<ErrorLabel> rows;
  DickeBasis columns;
  int t = 0;

  int n() const { return columns.n; }
};

/// Thrown when a built matrix violates an identity it satisfies by
/// construction; always an implementation bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rows for every error class of weight <= params.t, columns for build_qu.
/// Entries are evaluated in parallel. Throws ConsistencyError if the
/// per-weight row-sum identity fails.
ConstraintMatrix build_matrix(const SynthesisParams& params);

/// Same as above for an explicit basis (all labels must have weight n).
ConstraintMatrix build_matrix(int t, const DickeBasis& basis);

/// For every k <= t: sum over weight-k rows of orbit_size(tau) * row equals
/// C(n, k) times the ones vector. Exact.
bool row_sum_identity_holds(const ConstraintMatrix& m);

/// Checks C(n-h, w_err-h) * b[last weight-h row] == sum over weight-w_err rows
/// of b_i * e_h(tau_i), column by column, with b_i = orbit_size(tau_i) * a_i.
/// Requires 1 <= h < w_err <= t.
bool row_dependence_check(const ConstraintMatrix& m, int h, int w_err);

/// Minimum Manhattan distance over the union of the orbits of the labels.
/// Throws std::domain_error for a basis with a single constant label.
int min_distance(const DickeBasis& basis);

/// Same quantity by expanding every orbit and comparing all pairs. Throws
/// std::length_error when the expanded union exceeds `cap` vectors.
int min_distance_bruteforce(const DickeBasis& basis, std::size_t cap = 100000);

struct WeightedLabel {
  Occupation label;
  Rational weight;
};

/// A synthesized code: squared amplitudes of the two codewords over Dicke
/// states, kept exact.
struct CodeSpec {
  SynthesisParams params;
  DickeBasis basis;
  RationalVector x;  // integer nullspace element, sums to zero
  std::vector<WeightedLabel> zero_weights;  // x_i^+ / x, basis order
  std::vector<WeightedLabel> one_weights;   // x_i^- / x, basis order
  int distance = 0;
  int nullity = 0;

  int n() const { return basis.n; }
  int total_excitation() const { return basis.n; }
};

/// Splits x into positive and negative parts and normalizes each. Throws
/// std::invalid_argument if x is zero, its entries do not sum to zero, or its
/// size does not match the basis.
CodeSpec code_from_vector(const SynthesisParams& params, const DickeBasis& basis,
                          const RationalVector& x, int distance, int nullity);

struct SynthesisFailure {
  enum class Reason { distance, nullity };
  Reason reason;
  int distance = 0;
  int required_distance = 0;
  int nullity = 0;

  std::string reason_name() const { return reason == Reason::distance ? "distance" : "nullity"; }
};

using SynthesisResult = std::variant<CodeSpec, SynthesisFailure>;

/// Distance check, matrix, nullspace, then the first canonical nullspace
/// vector oriented so the all-ones coefficient is non-negative.
SynthesisResult synthesize(const SynthesisParams& params);

/// Sum_{k=0..t} C(N,k) gamma^k (1-gamma)^(N-k). Throws std::domain_error for
/// gamma outside [0, 1] or t outside [0, N].
double fidelity_lower_bound(int total_excitation, int t, double gamma);

enum class SearchMode { inequality, exact };

struct SearchResult {
  SearchMode mode = SearchMode::inequality;
  int t = 0;
  int w = 0;
  int u = 0;
  int N = 0;
  std::optional<CodeSpec> certificate;  // exact mode only
  std::vector<std::string> scan_log;
};

class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& what, std::vector<std::string> log)
      : std::runtime_error(what), scan_log(std::move(log)) {}
  std::vector<std::string> scan_log;
};

/// Inequality mode: smallest w >= 2 with p(w) + C(t,2) >= p(1)+...+p(t),
/// N = w(t+1). Exact mode: smallest N admitting a factorization N = u*w,
/// u >= 2, 1 <= w <= w_max, for which synthesize succeeds.
SearchResult search_min_excitation(int t, SearchMode mode, int w_max = 12);

/// Counting lower bound p(w) + 1 - (p(1)+...+p(t) - C(t,2)) on the
/// nullity when Q = P(w) and u = t + 1. May be negative.
long nullity_lower_bound(int t, int w);

}  // namespace picodes

#endif  // PICODES_SYNTHESIS_HPP
