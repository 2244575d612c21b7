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

#include <cctype>

namespace picodes {

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("empty integer");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("bad integer '" + std::string(text) + "'");
    }
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  const BigInt num = parse_integer(text.substr(0, slash), true);
  const BigInt den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt out = 1;
  for (long i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

RationalMatrix rational_matrix(const std::vector<std::vector<std::string>>& rows) {
  const Eigen::Index cols = rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size());
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != cols) {
      throw std::invalid_argument("ragged rational matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), c) = parse_rational(rows[r][static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

RationalVector rational_vector(const std::vector<std::string>& entries) {
  RationalVector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = parse_rational(entries[i]);
  }
  return v;
}

RationalVector canonical_integer_vector(const RationalVector& v) {
  BigInt lcm_den = 1;
  for (const auto& entry : v) {
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(entry));
  }
  BigInt gcd_num = 0;
  for (const auto& entry : v) {
    gcd_num = boost::multiprecision::gcd(gcd_num, boost::multiprecision::numerator(entry * lcm_den));
  }
  if (gcd_num == 0) return v;

  Rational scale(lcm_den, gcd_num);
  for (Eigen::Index i = v.size(); i-- > 0;) {
    if (v(i) != 0) {
      if (v(i) < 0) scale = -scale;
      break;
    }
  }
  return v * scale;
}

NullspaceBasis nullspace(const RationalMatrix& m) {
  const auto echelon = row_echelon(m);
  NullspaceBasis out;
  out.rank = echelon.rank();

  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : echelon.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RationalVector v = RationalVector::Zero(m.cols());
    v(free) = 1;
    for (std::size_t r = 0; r < echelon.pivot_columns.size(); ++r) {
      v(echelon.pivot_columns[r]) = -echelon.reduced(static_cast<Eigen::Index>(r), free);
    }
    v = canonical_integer_vector(v);
    const RationalVector product = matvec(m, v);
    for (const auto& entry : product) {
      if (entry != 0) throw std::logic_error("nullspace vector does not annihilate the matrix");
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

RationalVector matvec(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) {
    throw std::invalid_argument("matvec: " + std::to_string(m.cols()) + " columns vs vector of " +
                                std::to_string(v.size()));
  }
  RationalVector out(m.rows());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Rational acc = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) acc += m(r, c) * v(c);
    out(r) = acc;
  }
  return out;
}

bool in_span(const std::vector<RationalVector>& spanning, const RationalVector& v) {
  if (spanning.empty()) {
    for (const auto& entry : v) {
      if (entry != 0) return false;
    }
    return true;
  }
  RationalMatrix basis(v.size(), static_cast<Eigen::Index>(spanning.size()));
  for (std::size_t j = 0; j < spanning.size(); ++j) {
    basis.col(static_cast<Eigen::Index>(j)) = spanning[j];
  }
  RationalMatrix augmented(v.size(), basis.cols() + 1);
  augmented << basis, v;
  return rank(basis) == rank(augmented);
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  for (const auto& v : a) {
    if (!in_span(b, v)) return false;
  }
  for (const auto& v : b) {
    if (!in_span(a, v)) return false;
  }
  return true;
}

}  // namespace picodes
