// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gapmor/linalg/lyapunov.hpp"
#include "gapmor/linalg/schur.hpp"

namespace gapmor {

namespace detail {

inline double filter_riccati_residual_scale(const Matrix& A, const Matrix& B, const Matrix& C,
                                            const Matrix& P) {
    const double nA = A.norm(), nP = P.norm();
    return 2.0 * nA * nP + (P * C.transpose()).squaredNorm() + (B * B.transpose()).norm() +
           std::numeric_limits<double>::min();
}

inline Matrix filter_riccati_residual(const Matrix& A, const Matrix& B, const Matrix& C,
                                      const Matrix& P) {
    Matrix R = A * P + P * A.transpose() + B * B.transpose();
    R.noalias() -= (P * C.transpose()) * (C * P);
    return R;
}

}  // namespace detail

/// Stabilizing solution of A P + P A^T - P C^T C P + B B^T = 0.
///
/// Computed from the stable invariant subspace of the Hamiltonian
/// [[A^T, -C^T C], [-B B^T, -A]] via a reordered real Schur form (balanced
/// first), then symmetrized. A Newton defect-correction step runs when the
/// relative residual exceeds 1e-9.
inline Matrix solve_filter_care(const Matrix& A, const Matrix& B, const Matrix& C) {
    require_square(A, "solve_filter_care A");
    const Index n = A.rows();
    if (B.rows() != n || C.cols() != n)
        raise(ErrorCode::DimensionMismatch, "solve_filter_care: B or C has wrong shape");

    Matrix H(2 * n, 2 * n);
    H.topLeftCorner(n, n) = A.transpose();
    H.topRightCorner(n, n).noalias() = -C.transpose() * C;
    H.bottomLeftCorner(n, n).noalias() = -B * B.transpose();
    H.bottomRightCorner(n, n) = -A;

    Matrix Hb = H;
    const Vector d = detail::balance_in_place(Hb);
    auto [Q, T] = real_schur(Hb);
    const Index k =
        detail::reorder_schur(T, Q, [](Complex lam) { return lam.real() < 0.0; });
    if (k != n)
        raise(ErrorCode::SubspaceDimension,
              "Hamiltonian stable subspace has dimension " + std::to_string(k) +
                  ", expected " + std::to_string(n));

    Matrix Z = d.asDiagonal() * Q.leftCols(n);
    const Matrix Z1t = Z.topRows(n).transpose();
    Eigen::FullPivLU<Matrix> lu(Z1t);
    if (!lu.isInvertible())
        raise(ErrorCode::NotStabilizing,
              "stable subspace is not a graph: no stabilizing solution");
    Matrix P = lu.solve(Z.bottomRows(n).transpose()).transpose();
    P = 0.5 * (P + P.transpose()).eval();

    const Matrix R = detail::filter_riccati_residual(A, B, C, P);
    if (R.norm() > 1e-9 * detail::filter_riccati_residual_scale(A, B, C, P)) {
        const Matrix AF = A - P * C.transpose() * C;
        P += solve_lyapunov(AF, R);
        P = 0.5 * (P + P.transpose()).eval();
    }

    if (spectral_abscissa(A - P * C.transpose() * C) >= 0.0)
        raise(ErrorCode::NotStabilizing, "closed-loop matrix is not asymptotically stable");
    return P;
}

/// Stabilizing solution of A^T Q + Q A - Q B B^T Q + C^T C = 0 (dual form).
inline Matrix solve_control_care(const Matrix& A, const Matrix& B, const Matrix& C) {
    return solve_filter_care(A.transpose(), C.transpose(), B.transpose());
}

}  // namespace gapmor
