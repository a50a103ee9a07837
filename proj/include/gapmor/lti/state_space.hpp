// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gapmor/linalg/schur.hpp"
#include "gapmor/matrix.hpp"

namespace gapmor {

/// Finite-dimensional LTI realization (A, B, C, D) with transfer function
/// G(s) = C (sI - A)^{-1} B + D. D defaults to zero.
struct StateSpace {
    Matrix A, B, C, D;

    StateSpace() = default;
    StateSpace(Matrix A_, Matrix B_, Matrix C_)
        : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)) {
        D = Matrix::Zero(C.rows(), B.cols());
        validate();
    }
    StateSpace(Matrix A_, Matrix B_, Matrix C_, Matrix D_)
        : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)), D(std::move(D_)) {
        validate();
    }

    Index order() const { return A.rows(); }
    Index inputs() const { return B.cols(); }
    Index outputs() const { return C.rows(); }

    bool strictly_proper(double tol = 0.0) const {
        return D.size() == 0 || D.cwiseAbs().maxCoeff() <= tol;
    }

    void validate() const {
        require_square(A, "StateSpace A");
        if (B.rows() != A.rows())
            raise(ErrorCode::DimensionMismatch, "StateSpace: B row count != state dimension");
        if (C.cols() != A.rows())
            raise(ErrorCode::DimensionMismatch, "StateSpace: C column count != state dimension");
        if (D.rows() != C.rows() || D.cols() != B.cols())
            raise(ErrorCode::DimensionMismatch, "StateSpace: D shape mismatch");
        require_finite(A, "A");
        require_finite(B, "B");
        require_finite(C, "C");
        require_finite(D, "D");
    }
};

/// G(s) = D + C (sI - A)^{-1} B at a non-pole s.
inline ComplexMatrix transfer_eval(const StateSpace& sys, Complex s) {
    const Index n = sys.order();
    ComplexMatrix M = -sys.A.cast<Complex>();
    M.diagonal().array() += s;
    const ComplexMatrix X = solve_linear<Complex>(M, sys.B.cast<Complex>());
    return sys.D.cast<Complex>() + sys.C.cast<Complex>() * X;
}

/// Difference system G1 - G2 for systems with equal I/O dimensions and equal
/// feedthrough: block-diagonal states, output [C1, -C2], zero feedthrough.
inline StateSpace error_system(const StateSpace& g1, const StateSpace& g2) {
    if (g1.inputs() != g2.inputs() || g1.outputs() != g2.outputs())
        raise(ErrorCode::DimensionMismatch, "error_system: input/output dimensions differ");
    if ((g1.D - g2.D).cwiseAbs().maxCoeff() != 0.0)
        raise(ErrorCode::DimensionMismatch, "error_system: feedthrough terms differ");
    const Index n = g1.order(), r = g2.order();
    Matrix A = Matrix::Zero(n + r, n + r);
    A.topLeftCorner(n, n) = g1.A;
    A.bottomRightCorner(r, r) = g2.A;
    Matrix B(n + r, g1.inputs());
    B.topRows(n) = g1.B;
    B.bottomRows(r) = g2.B;
    Matrix C(g1.outputs(), n + r);
    C.leftCols(n) = g1.C;
    C.rightCols(r) = -g2.C;
    return {std::move(A), std::move(B), std::move(C)};
}

}  // namespace gapmor
