// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>
#include <complex>

#include "gapmor/errors.hpp"

namespace gapmor {

using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;
using Complex = std::complex<double>;

inline void require_finite(const Matrix& m, const char* name) {
    if (!m.allFinite()) raise(ErrorCode::InvalidArgument, std::string(name) + " has non-finite entries");
}

inline void require_square(const Matrix& m, const char* name) {
    if (m.rows() != m.cols())
        raise(ErrorCode::DimensionMismatch, std::string(name) + " must be square");
}

/// Solves A X = RHS by partial-pivot LU, refusing nearly singular systems.
template <typename Scalar, typename Rhs>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> solve_linear(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A,
    const Eigen::MatrixBase<Rhs>& RHS, double rcond_tol = 1e-14) {
    if (A.rows() != A.cols()) raise(ErrorCode::DimensionMismatch, "solve_linear: A must be square");
    if (A.rows() != RHS.rows())
        raise(ErrorCode::DimensionMismatch, "solve_linear: RHS row count mismatch");
    Eigen::PartialPivLU<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> lu(A);
    if (!(lu.rcond() > rcond_tol))
        raise(ErrorCode::SingularMatrix, "solve_linear: matrix is singular to working precision");
    return lu.solve(RHS.derived());
}

}  // namespace gapmor
