// Copyright 2026 The SEB Toolkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seb/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "Eigen/SVD"

namespace seb {

int NumericalRank(const Matrix& columns, double tol) {
  if (columns.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(columns);
  const Vector& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  if (!(sigma_max > 0.0)) return 0;
  const double dim =
      static_cast<double>(std::max(columns.rows(), columns.cols()));
  const double threshold = tol * sigma_max * dim;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold) ++rank;
  }
  return rank;
}

int NumericalRank(const std::vector<Vector>& vectors, double tol) {
  if (vectors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "rank of an empty list");
  }
  const Eigen::Index n = vectors.front().size();
  Matrix columns(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "vectors differ in length");
    }
    columns.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return NumericalRank(columns, tol);
}

AffineSolutionSet SolveAffine(const Matrix& a, const Vector& b, double tol,
                              double rank_tol) {
  if (a.rows() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "system has mismatched row count");
  }
  if (!a.allFinite() || !b.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite system");
  }
  const Eigen::Index n = a.cols();
  AffineSolutionSet out;
  out.particular = Vector::Zero(n);

  int rank = 0;
  Matrix v = Matrix::Identity(n, n);
  if (a.size() > 0) {
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Vector& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    const double threshold =
        rank_tol * sigma_max * static_cast<double>(std::max(a.rows(), n));
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma_max > 0.0 && sigma(i) > threshold) ++rank;
    }
    const Matrix& u = svd.matrixU();
    v = svd.matrixV();
    for (int i = 0; i < rank; ++i) {
      out.particular += (u.col(i).dot(b) / sigma(i)) * v.col(i);
    }
  }
  out.nullspace_basis = v.rightCols(n - rank);
  out.residual = (a * out.particular - b).norm();
  out.consistent = out.residual <= tol * (1.0 + b.norm());
  return out;
}

AffineMinimum MinQuadraticOnAffine(const UnitQuadratic& q,
                                   const AffineSolutionSet& set) {
  if (!set.consistent) {
    throw Error(ErrorCode::kInvalidArgument, "inconsistent affine set");
  }
  if (set.particular.size() != q.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "affine set and quadratic differ in dimension");
  }
  AffineMinimum out;
  const Matrix& basis = set.nullspace_basis;
  if (basis.cols() == 0) {
    out.argmin = set.particular;
  } else {
    const Vector t = basis.transpose() * (q.a() - set.particular);
    out.argmin = set.particular + basis * t;
  }
  out.value = q(out.argmin);
  return out;
}

PsdVerdict ArrowheadPsd(double alpha, const Vector& b, double beta,
                        double tol) {
  const double b2 = b.squaredNorm();
  PsdVerdict out;
  out.residual = std::max({0.0, -alpha, -beta, b2 - alpha * beta});
  out.psd = alpha >= -tol && beta >= -tol &&
            b2 <= (alpha + tol) * (beta + tol) + tol;
  return out;
}

}  // namespace seb
