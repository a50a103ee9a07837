// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gapmor/linalg/schur.hpp"

namespace gapmor {

namespace detail {

/// Solves S Y + Y R^T + C = 0 in place of C, where S and R are quasi upper
/// triangular (real Schur forms). Back substitution over the block grid.
inline void quasi_triangular_sylvester(const Matrix& S, const Matrix& R, Matrix& C) {
    const auto sb = schur_blocks(S);
    const auto rb = schur_blocks(R);
    const Index ns = S.rows(), nr = R.rows();
    for (Index bi = static_cast<Index>(sb.size()) - 1; bi >= 0; --bi) {
        const auto [is, p] = sb[bi];
        for (Index bj = static_cast<Index>(rb.size()) - 1; bj >= 0; --bj) {
            const auto [js, q] = rb[bj];
            Matrix rhs = -C.block(is, js, p, q);
            if (is + p < ns)
                rhs.noalias() -=
                    S.block(is, is + p, p, ns - is - p) * C.block(is + p, js, ns - is - p, q);
            if (js + q < nr)
                rhs.noalias() -= C.block(is, js + q, p, nr - js - q) *
                                 R.block(js, js + q, q, nr - js - q).transpose();
            // small Kronecker system (I ⊗ S_II + R_JJ ⊗ I) vec(Y) = vec(rhs)
            Matrix K = Matrix::Zero(p * q, p * q);
            for (Index jj = 0; jj < q; ++jj)
                for (Index ii = 0; ii < p; ++ii) {
                    const Index row = jj * p + ii;
                    for (Index kk = 0; kk < p; ++kk) K(row, jj * p + kk) += S(is + ii, is + kk);
                    for (Index kk = 0; kk < q; ++kk) K(row, kk * p + ii) += R(js + jj, js + kk);
                }
            Vector v(p * q);
            for (Index jj = 0; jj < q; ++jj)
                for (Index ii = 0; ii < p; ++ii) v(jj * p + ii) = rhs(ii, jj);
            Eigen::FullPivLU<Matrix> lu(K);
            const double scale =
                std::max(S.block(is, is, p, p).cwiseAbs().maxCoeff(),
                         R.block(js, js, q, q).cwiseAbs().maxCoeff());
            if (!lu.isInvertible() || lu.rcond() < 1e-14 / std::max(scale, 1.0))
                raise(ErrorCode::SpectrumCollision,
                      "Sylvester recursion: eigenvalue pair sums to zero");
            const Vector y = lu.solve(v);
            for (Index jj = 0; jj < q; ++jj)
                for (Index ii = 0; ii < p; ++ii) C(is + ii, js + jj) = y(jj * p + ii);
        }
    }
}

}  // namespace detail

/// Solves A X + X B + C = 0 (Bartels-Stewart).
inline Matrix solve_sylvester(const Matrix& A, const Matrix& B, const Matrix& C) {
    require_square(A, "solve_sylvester A");
    require_square(B, "solve_sylvester B");
    if (C.rows() != A.rows() || C.cols() != B.rows())
        raise(ErrorCode::DimensionMismatch, "solve_sylvester: C has wrong shape");
    const auto [Ua, Sa] = real_schur(A);
    const auto [Ub, Rb] = real_schur(B.transpose());
    Matrix Y = Ua.transpose() * C * Ub;
    detail::quasi_triangular_sylvester(Sa, Rb, Y);
    return Ua * Y * Ub.transpose();
}

/// Solves A X + X A^T + Q = 0 for symmetric Q; the result is symmetrized.
inline Matrix solve_lyapunov(const Matrix& A, const Matrix& Qsym) {
    require_square(A, "solve_lyapunov A");
    if (Qsym.rows() != A.rows() || Qsym.cols() != A.rows())
        raise(ErrorCode::DimensionMismatch, "solve_lyapunov: Q has wrong shape");
    const auto [U, S] = real_schur(A);
    Matrix Y = U.transpose() * Qsym * U;
    detail::quasi_triangular_sylvester(S, S, Y);
    Matrix X = U * Y * U.transpose();
    X = 0.5 * (X + X.transpose()).eval();
    return X;
}

}  // namespace gapmor
