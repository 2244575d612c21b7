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

#include "picodes/exact.hpp"

#include <random>

#include "gtest/gtest.h"
#include "printed_examples.hpp"

namespace picodes {
namespace {

using testing::printed_example;

RationalMatrix printed_matrix(int number) { return rational_matrix(printed_example(number).matrix); }

std::vector<RationalVector> printed_nullspace(int number) {
  std::vector<RationalVector> out;
  for (const auto& v : printed_example(number).nullspace) out.push_back(rational_vector(v));
  return out;
}

bool is_zero(const RationalVector& v) {
  for (const auto& e : v) {
    if (e != 0) return false;
  }
  return true;
}

RationalMatrix random_rational_matrix(std::mt19937& rng, int rows, int cols, int rank_cap) {
  // Product of two random integer factors so the rank is usually rank_cap.
  std::uniform_int_distribution<int> entry(-4, 4);
  RationalMatrix left(rows, rank_cap), right(rank_cap, cols);
  for (auto& e : left.reshaped()) e = entry(rng);
  for (auto& e : right.reshaped()) e = entry(rng);
  return left * right;
}

TEST(exact, parse_and_print_rationals) {
  EXPECT_EQ(parse_rational("5/2"), Rational(5, 2));
  EXPECT_EQ(parse_rational("-21/32"), Rational(-21, 32));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(rational_matrix({{"1", "2"}, {"3"}}), std::invalid_argument);
}

TEST(exact, binomials) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(16, 8), 12870);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
}

TEST(exact, rank_examples) {
  EXPECT_EQ(rank(printed_matrix(3)), 3);
  EXPECT_EQ(rank(printed_matrix(4)), 5);
  EXPECT_EQ(rank(printed_matrix(2)), 2);

  RationalMatrix identity = RationalMatrix::Identity(2, 2);
  EXPECT_EQ(rank(identity), 2);
  EXPECT_TRUE(nullspace(identity).vectors.empty());
}

TEST(exact, nullspace_examples) {
  for (int number : {1, 2, 3, 4, 6}) {
    const auto basis = nullspace(printed_matrix(number));
    EXPECT_TRUE(same_span(basis.vectors, printed_nullspace(number))) << "Example " << number;
  }

  const auto ex3 = nullspace(printed_matrix(3));
  ASSERT_EQ(ex3.nullity(), 1);
  EXPECT_EQ(ex3.vectors[0], rational_vector({"-21", "99", "-110", "32"}));
}

TEST(exact, matvec_examples) {
  const auto ex2 = matvec(printed_matrix(2), rational_vector({"2/5", "-1", "3/5"}));
  EXPECT_TRUE(is_zero(ex2));
  const auto ex3 = matvec(printed_matrix(3), rational_vector({"-21/32", "99/32", "-55/16", "1"}));
  EXPECT_TRUE(is_zero(ex3));
  EXPECT_EQ(matvec(printed_matrix(2), rational_vector({"1", "0", "0"})),
            rational_vector({"1", "5/2", "0"}));
  EXPECT_THROW(matvec(printed_matrix(2), rational_vector({"1", "2"})), std::invalid_argument);
}

TEST(exact, canonical_integer_vector) {
  EXPECT_EQ(canonical_integer_vector(rational_vector({"2/5", "-1", "3/5"})),
            rational_vector({"2", "-5", "3"}));
  EXPECT_EQ(canonical_integer_vector(rational_vector({"4", "0", "-6"})), rational_vector({"-2", "0", "3"}));
  EXPECT_EQ(canonical_integer_vector(rational_vector({"0", "0"})), rational_vector({"0", "0"}));
}

TEST(exact, span_relations) {
  const std::vector<RationalVector> plane{rational_vector({"1", "0", "1"}), rational_vector({"0", "1", "1"})};
  EXPECT_TRUE(in_span(plane, rational_vector({"2", "3", "5"})));
  EXPECT_FALSE(in_span(plane, rational_vector({"1", "1", "1"})));
  EXPECT_TRUE(same_span(plane, {rational_vector({"1", "1", "2"}), rational_vector({"1", "-1", "0"})}));
  EXPECT_FALSE(same_span(plane, {rational_vector({"1", "1", "2"})}));
}

TEST(exact, rank_nullity_and_products) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 7);
    const int r = 1 + static_cast<int>(rng() % 5);
    const RationalMatrix m = random_rational_matrix(rng, rows, cols, r);
    const auto basis = nullspace(m);
    EXPECT_EQ(basis.rank + basis.nullity(), cols);
    for (const auto& v : basis.vectors) {
      EXPECT_TRUE(is_zero(matvec(m, v)));
      EXPECT_EQ(canonical_integer_vector(v), v);
      BigInt g = 0;
      for (const auto& e : v) {
        EXPECT_EQ(boost::multiprecision::denominator(e), 1);
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(e));
      }
      EXPECT_EQ(g, 1);
    }
    // Basis vectors are independent.
    if (basis.nullity() > 0) {
      RationalMatrix stacked(cols, basis.nullity());
      for (Eigen::Index i = 0; i < basis.nullity(); ++i) stacked.col(i) = basis.vectors[static_cast<std::size_t>(i)];
      EXPECT_EQ(rank(stacked), basis.nullity());
    }
  }
}

TEST(exact, rank_agrees_with_floating_svd) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 2 + static_cast<int>(rng() % 6);
    const int cols = 2 + static_cast<int>(rng() % 6);
    const int r = 1 + static_cast<int>(rng() % 4);
    const RationalMatrix m = random_rational_matrix(rng, rows, cols, r);
    Eigen::MatrixXd d(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) d(i, j) = m(i, j).convert_to<double>();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
    svd.setThreshold(1e-9);
    EXPECT_EQ(rank(m), svd.rank());
  }
}

TEST(exact, row_echelon_is_reduced) {
  const auto e = row_echelon(printed_matrix(4));
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
    const auto c = e.pivot_columns[r];
    for (Eigen::Index i = 0; i < e.reduced.rows(); ++i) {
      EXPECT_EQ(e.reduced(i, c), i == static_cast<Eigen::Index>(r) ? Rational(1) : Rational(0));
    }
  }
  for (Eigen::Index i = e.rank(); i < e.reduced.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.reduced.cols(); ++j) EXPECT_EQ(e.reduced(i, j), 0);
  }
}

TEST(exact, double_scalar_instantiation) {
  Eigen::MatrixXd m(2, 3);
  m << 1, 2, 3, 2, 4, 6;
  EXPECT_EQ(rank(m), 1);
}

}  // namespace
}  // namespace picodes
