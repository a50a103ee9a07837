// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/SVD>

#include "gapmor/linalg/riccati.hpp"
#include "gapmor/lti/state_space.hpp"

namespace gapmor {

/// Which pair of positive semidefinite matrices gets balanced: the closed-loop
/// Gramians (P, Q(I+PQ)^{-1}) or the raw Riccati pair (P, Q).
enum class BalanceKind { LqgGramians, RiccatiPair };

struct LqgBtResult {
    StateSpace rom;
    Vector characteristicValues;  // nonincreasing, in [0, 1) for LqgGramians
    double errorBound;            // 2 * sum_{i>r} sigma_i
};

namespace detail {

inline Matrix psd_sqrt_factor(const Matrix& M) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (M + M.transpose()));
    if (es.info() != Eigen::Success)
        raise(ErrorCode::ConvergenceFailure, "symmetric eigendecomposition failed");
    Vector w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * w.asDiagonal();
}

}  // namespace detail

/// Square-root balanced truncation of the closed-loop system: factor both
/// Gramians, SVD the cross product, project with the truncated balancing
/// transformations. Characteristic values sigma_i drive the 2*sum tail bound.
inline LqgBtResult lqgbt(const StateSpace& sys, Index r,
                         BalanceKind kind = BalanceKind::LqgGramians) {
    if (!sys.strictly_proper())
        raise(ErrorCode::NonzeroFeedthrough, "lqgbt requires D = 0");
    if (r < 1 || r > sys.order())
        raise(ErrorCode::InvalidArgument, "lqgbt: need 1 <= r <= n");
    const Matrix P = solve_filter_care(sys.A, sys.B, sys.C);
    const Matrix Q = solve_control_care(sys.A, sys.B, sys.C);
    const Index n = sys.order();
    Matrix Lo;
    if (kind == BalanceKind::LqgGramians) {
        // L_o = Q (I + P Q)^{-1}, symmetric up to rounding
        const Matrix IPQ = Matrix::Identity(n, n) + P * Q;
        Lo = solve_linear<double>(Matrix(IPQ.transpose()), Matrix(Q.transpose())).transpose();
        Lo = 0.5 * (Lo + Lo.transpose()).eval();
    } else {
        Lo = Q;
    }
    const Matrix Zc = detail::psd_sqrt_factor(P);
    const Matrix Zo = detail::psd_sqrt_factor(Lo);
    Eigen::BDCSVD<Matrix> svd(Zo.transpose() * Zc, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector sigma = svd.singularValues();
    if (sigma(0) <= 0.0 || sigma(r - 1) <= 1e-13 * sigma(0))
        raise(ErrorCode::RankDeficient, "lqgbt: r exceeds the numerical rank of the balanced product");
    const Vector si = sigma.head(r).cwiseSqrt().cwiseInverse();
    const Matrix Tl = Zo * svd.matrixU().leftCols(r) * si.asDiagonal();
    const Matrix Tr = Zc * svd.matrixV().leftCols(r) * si.asDiagonal();
    LqgBtResult res;
    res.rom = StateSpace(Tl.transpose() * sys.A * Tr, Tl.transpose() * sys.B, sys.C * Tr);
    res.characteristicValues = sigma;
    res.errorBound = 2.0 * sigma.tail(n - r).sum();
    return res;
}

}  // namespace gapmor
