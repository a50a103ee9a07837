// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Eigenvalues>

#include "gapmor/matrix.hpp"

namespace gapmor {

/// Eigendecomposition with the transpose (not conjugate-transpose) left
/// eigenvector convention: W^T A = Lambda W^T, A V = V Lambda, W^T V = I.
/// Conjugate eigenvalue pairs are stored adjacently, +Im first, and the
/// second member of each pair is the exact conjugate of the first.
struct Eigendecomposition {
    ComplexVector eigenvalues;
    ComplexMatrix rightVectors;  // V
    ComplexMatrix leftVectors;   // W = V^{-T}
};

inline Eigendecomposition eig(const Matrix& A, double defect_tol = 1e-8) {
    require_square(A, "eig");
    require_finite(A, "eig input");
    const Index n = A.rows();
    Eigen::EigenSolver<Matrix> es(A);
    if (es.info() != Eigen::Success)
        raise(ErrorCode::ConvergenceFailure, "eigenvalue iteration did not converge");

    ComplexVector lam = es.eigenvalues();
    ComplexMatrix V = es.eigenvectors();
    // enforce structural conjugate closure
    for (Index i = 0; i < n; ++i) {
        if (lam(i).imag() == 0.0) continue;
        if (i + 1 >= n || std::abs(lam(i + 1) - std::conj(lam(i))) >
                              1e-8 * (1.0 + std::abs(lam(i))))
            raise(ErrorCode::ConvergenceFailure, "eig: conjugate pair not adjacent");
        if (lam(i).imag() < 0.0) {
            lam.row(i).swap(lam.row(i + 1));
            V.col(i).swap(V.col(i + 1));
        }
        lam(i + 1) = std::conj(lam(i));
        V.col(i + 1) = V.col(i).conjugate();
        ++i;
    }

    Eigen::FullPivLU<ComplexMatrix> lu(V.transpose());
    if (!lu.isInvertible())
        raise(ErrorCode::DefectiveMatrix, "eigenvector matrix is numerically singular");
    ComplexMatrix W = lu.solve(ComplexMatrix::Identity(n, n));  // W = V^{-T}
    const double cond = V.norm() * W.norm() / static_cast<double>(n);
    if (cond > 1.0 / defect_tol)
        raise(ErrorCode::DefectiveMatrix,
              "eigenvector condition estimate " + std::to_string(cond) +
                  " exceeds 1/defect_tol; matrix is not reliably semi-simple");
    // keep the pair/real structure exact in W as well
    for (Index i = 0; i < n; ++i) {
        if (lam(i).imag() > 0.0) {
            W.col(i + 1) = W.col(i).conjugate();
            ++i;
        } else {
            W.col(i) = W.col(i).real().cast<Complex>();
        }
    }
    return {std::move(lam), std::move(V), std::move(W)};
}

}  // namespace gapmor
