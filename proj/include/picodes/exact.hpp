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

#ifndef PICODES_EXACT_HPP
#define PICODES_EXACT_HPP

#include <stdexcept>
#include <vector>

#include "picodes/rational.hpp"

namespace picodes {

/// Reduced row-echelon form of a matrix over an exact field, with the pivot
/// column of each nonzero row.
template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Eigen::Index> pivot_columns;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_columns.size()); }
};

/// Gauss-Jordan elimination. The pivot is the first nonzero entry scanning
/// columns left to right, so the result is deterministic. Scalar must be an
/// exact field (comparison with zero is taken literally).
template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  out.reduced = input;
  Matrix<Scalar>& m = out.reduced;
  const Scalar zero(0);

  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == zero) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));

    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == zero) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Right nullspace basis.
struct NullspaceBasis {
  std::vector<RationalVector> vectors;
  Eigen::Index rank = 0;

  Eigen::Index nullity() const { return static_cast<Eigen::Index>(vectors.size()); }
};

/// Scales v to coprime integers with a positive last nonzero entry. The zero
/// vector is returned unchanged.
RationalVector canonical_integer_vector(const RationalVector& v);

/// Free-variable basis read off the RREF, one vector per free column in
/// increasing column order, each put in canonical_integer_vector form.
/// Every vector is checked to multiply to exact zero before returning;
/// a nonzero product throws std::logic_error.
NullspaceBasis nullspace(const RationalMatrix& m);

/// Exact M * v. Throws std::invalid_argument on a dimension mismatch.
RationalVector matvec(const RationalMatrix& m, const RationalVector& v);

/// True iff v lies in the column span of the given vectors (exact).
bool in_span(const std::vector<RationalVector>& spanning, const RationalVector& v);

/// True iff the two families span the same subspace (exact, both directions).
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

}  // namespace picodes

#endif  // PICODES_EXACT_HPP
