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

#include "picodes/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace picodes {

int weight(std::span<const int> occupation) {
  return std::accumulate(occupation.begin(), occupation.end(), 0);
}

std::string occupation_key(std::span<const int> occupation) {
  std::string out;
  for (std::size_t i = 0; i < occupation.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(occupation[i]);
  }
  return out;
}

Occupation parse_occupation_key(std::string_view key) {
  Occupation out;
  while (!key.empty()) {
    const auto comma = key.find(',');
    const auto field = key.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
      throw std::invalid_argument("bad occupation entry '" + std::string(field) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    key.remove_prefix(comma + 1);
  }
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be non-increasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Occupation Partition::padded(int size) const {
  if (size < length()) throw std::invalid_argument("padding shorter than partition");
  Occupation out(parts_.begin(), parts_.end());
  out.resize(static_cast<std::size_t>(size), 0);
  return out;
}

std::string Partition::to_string() const { return "(" + occupation_key(parts_) + ")"; }

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  if (n > 400) throw std::out_of_range("partition_count: n > 400 overflows 64 bits");
  // Coin-change recurrence over part sizes.
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) p[total] += p[total - part];
  }
  return p[static_cast<std::size_t>(n)];
}

std::uint64_t cumulative_partition_count(int t) {
  std::uint64_t total = 0;
  for (int k = 1; k <= t; ++k) total += partition_count(k);
  return total;
}

std::vector<ErrorLabel> error_labels(int t) {
  std::vector<ErrorLabel> out;
  for (int k = 1; k <= t; ++k) {
    for (auto& partition : enumerate_partitions(k)) {
      const int index = static_cast<int>(out.size()) + 1;
      out.push_back({std::move(partition), k, index});
    }
  }
  return out;
}

BigInt orbit_size(std::span<const int> occupation) {
  std::map<int, int> multiplicity;
  for (int v : occupation) ++multiplicity[v];
  BigInt out = factorial(static_cast<int>(occupation.size()));
  for (const auto& [value, count] : multiplicity) out /= factorial(count);
  return out;
}

BigInt elementary_symmetric(const Partition& partition, int h) {
  if (h < 0) return 0;
  // coeffs[j] holds e_j of the parts seen so far.
  std::vector<BigInt> coeffs(static_cast<std::size_t>(h) + 1, BigInt(0));
  coeffs[0] = 1;
  for (int part : partition.parts()) {
    for (int j = h; j >= 1; --j) coeffs[j] += coeffs[j - 1] * part;
  }
  return coeffs[static_cast<std::size_t>(h)];
}

}  // namespace picodes
