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

#ifndef PICODES_RATIONAL_HPP
#define PICODES_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace picodes {

/// Arbitrary-precision integer. Expression templates are off so values mix
/// cleanly with Eigen's own expression machinery.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Exact rational, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Serializes as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Inverse of to_string. Accepts an optional sign, "p" or "p/q".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// C(a, b) with the falling-factorial convention: zero when b < 0 or b > a >= 0.
BigInt binomial(long a, long b);

/// Rational matrix from row-major "p/q" strings; rows must be rectangular.
RationalMatrix rational_matrix(const std::vector<std::vector<std::string>>& rows);

RationalVector rational_vector(const std::vector<std::string>& entries);

}  // namespace picodes

#endif  // PICODES_RATIONAL_HPP
