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

#ifndef PICODES_PARTITIONS_HPP
#define PICODES_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "picodes/rational.hpp"

namespace picodes {

/// Occupation numbers of n bosonic modes, one entry per mode.
using Occupation = std::vector<int>;

int weight(std::span<const int> occupation);

/// Comma-joined entries, e.g. "3,0,0".
std::string occupation_key(std::span<const int> occupation);
Occupation parse_occupation_key(std::string_view key);

/// An integer partition: positive parts in non-increasing order.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// Parts followed by zeros up to `size` entries. Throws if size < length().
  Occupation padded(int size) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in descending-lexicographic order. Empty for n == 0.
std::vector<Partition> enumerate_partitions(int n);

/// p(n), with p(0) == 1. Throws std::out_of_range when p(n) would not fit in
/// 64 bits (n > 400).
std::uint64_t partition_count(int n);

/// p(1) + ... + p(t).
std::uint64_t cumulative_partition_count(int t);

/// One class of amplitude-damping error: a partition of the number of lost
/// photons, acting on the leading modes.
struct ErrorLabel {
  Partition partition;
  int weight = 0;
  int index = 0;  // 1-based position in the global ordering
};

/// Error classes of weight 1..t: weight ascending, descending-lex within a
/// weight.
std::vector<ErrorLabel> error_labels(int t);

/// Number of distinct permutations of the entries: n! / prod(multiplicity!).
BigInt orbit_size(std::span<const int> occupation);

/// e_h of the parts. e_0 == 1; zero when h exceeds the number of parts.
BigInt elementary_symmetric(const Partition& partition, int h);

}  // namespace picodes

#endif  // PICODES_PARTITIONS_HPP
