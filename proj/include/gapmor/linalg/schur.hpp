// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "gapmor/matrix.hpp"

namespace gapmor {

struct RealSchurResult {
    Matrix Q;  // orthogonal
    Matrix T;  // quasi upper triangular, Q^T A Q = T
};

/// Q^T A Q = T with 1x1 / 2x2 diagonal blocks.
inline RealSchurResult real_schur(const Matrix& A) {
    require_square(A, "real_schur");
    require_finite(A, "real_schur input");
    Eigen::RealSchur<Matrix> schur(A);
    if (schur.info() != Eigen::Success)
        raise(ErrorCode::ConvergenceFailure, "real Schur iteration did not converge");
    return {schur.matrixU(), schur.matrixT()};
}

namespace detail {

/// Diagonal similarity balancing with exact powers of two (Parlett-Reinsch,
/// no permutation phase). Returns d with B = D^{-1} A D, D = diag(d).
inline Vector balance_in_place(Matrix& A) {
    const Index n = A.rows();
    Vector d = Vector::Ones(n);
    const double radix = 2.0;
    bool done = false;
    while (!done) {
        done = true;
        for (Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(A(j, i));
                r += std::abs(A(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            const double s = c + r;
            double g = r / radix;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                d(i) *= f;
                A.row(i) /= f;
                A.col(i) *= f;
            }
        }
    }
    return d;
}

/// Diagonal block positions of a quasi-triangular T: (start, size) pairs.
inline std::vector<std::pair<Index, Index>> schur_blocks(const Matrix& T) {
    std::vector<std::pair<Index, Index>> blocks;
    const Index n = T.rows();
    Index i = 0;
    while (i < n) {
        if (i + 1 < n && T(i + 1, i) != 0.0) {
            blocks.emplace_back(i, 2);
            i += 2;
        } else {
            blocks.emplace_back(i, 1);
            i += 1;
        }
    }
    return blocks;
}

inline Complex block_eigenvalue(const Matrix& T, Index start, Index size) {
    if (size == 1) return Complex(T(start, start), 0.0);
    // 2x2 block from a real Schur form carries a conjugate pair.
    const double a = T(start, start), b = T(start, start + 1);
    const double c = T(start + 1, start), dd = T(start + 1, start + 1);
    const double re = 0.5 * (a + dd);
    const double disc = 0.25 * (a - dd) * (a - dd) + b * c;
    const double im = disc < 0.0 ? std::sqrt(-disc) : 0.0;
    return Complex(re, im);
}

/// Eigenvalues of a quasi-triangular T, conjugate pairs adjacent (+Im first).
inline ComplexVector quasi_triangular_eigenvalues(const Matrix& T) {
    ComplexVector ev(T.rows());
    for (auto [start, size] : schur_blocks(T)) {
        const Complex lam = block_eigenvalue(T, start, size);
        ev(start) = lam;
        if (size == 2) ev(start + 1) = std::conj(lam);
    }
    return ev;
}

/// Swaps the adjacent diagonal blocks at (i1, p) and (i1+p, q) of the Schur
/// form T by an orthogonal similarity, accumulating it into Q.
inline void swap_schur_blocks(Matrix& T, Matrix& Q, Index i1, Index p, Index q) {
    const Index n = T.rows();
    const Index w = p + q;
    if (p == 1 && q == 1) {
        const double t11 = T(i1, i1), t12 = T(i1, i1 + 1), t22 = T(i1 + 1, i1 + 1);
        if (t11 == t22) return;  // equal eigenvalues, order immaterial
        Eigen::JacobiRotation<double> rot;
        rot.makeGivens(t12, t22 - t11);
        T.applyOnTheLeft(i1, i1 + 1, rot.adjoint());
        T.applyOnTheRight(i1, i1 + 1, rot);
        Q.applyOnTheRight(i1, i1 + 1, rot);
        T(i1 + 1, i1) = 0.0;
        return;
    }
    // invariant subspace of [[A11,A12],[0,A22]] for sigma(A22): [X; I] with
    // A11 X - X A22 = -A12
    const Matrix A11 = T.block(i1, i1, p, p);
    const Matrix A22 = T.block(i1 + p, i1 + p, q, q);
    const Matrix A12 = T.block(i1, i1 + p, p, q);
    Matrix K = Matrix::Zero(p * q, p * q);
    for (Index jj = 0; jj < q; ++jj)
        for (Index ii = 0; ii < p; ++ii) {
            const Index row = jj * p + ii;
            for (Index kk = 0; kk < p; ++kk) K(row, jj * p + kk) += A11(ii, kk);
            for (Index kk = 0; kk < q; ++kk) K(row, kk * p + ii) -= A22(kk, jj);
        }
    Vector rhs(p * q);
    for (Index jj = 0; jj < q; ++jj)
        for (Index ii = 0; ii < p; ++ii) rhs(jj * p + ii) = -A12(ii, jj);
    Eigen::FullPivLU<Matrix> lu(K);
    if (!lu.isInvertible())
        raise(ErrorCode::SpectrumCollision, "Schur block swap: eigenvalues too close");
    const Vector x = lu.solve(rhs);
    Matrix Z(w, q);
    for (Index jj = 0; jj < q; ++jj) {
        for (Index ii = 0; ii < p; ++ii) Z(ii, jj) = x(jj * p + ii);
        for (Index ii = 0; ii < q; ++ii) Z(p + ii, jj) = (ii == jj) ? 1.0 : 0.0;
    }
    Eigen::HouseholderQR<Matrix> qr(Z);
    const Matrix Qw = qr.householderQ() * Matrix::Identity(w, w);
    T.middleRows(i1, w) = Qw.transpose() * T.middleRows(i1, w);
    T.middleCols(i1, w) = T.middleCols(i1, w) * Qw;
    Q.middleCols(i1, w) = Q.middleCols(i1, w) * Qw;
    T.block(i1 + q, i1, p, q).setZero();
}

/// Reorders a real Schur form so that all blocks satisfying `select` come
/// first. Returns the dimension of the leading invariant subspace.
template <typename Select>
Index reorder_schur(Matrix& T, Matrix& Q, Select select) {
    Index inserted = 0;  // rows already holding selected blocks
    while (true) {
        const auto blocks = schur_blocks(T);
        // first block at or after the insertion point
        Index bi = 0;
        while (bi < static_cast<Index>(blocks.size()) && blocks[bi].first < inserted) ++bi;
        Index src = -1;
        for (Index k = bi; k < static_cast<Index>(blocks.size()); ++k) {
            if (select(block_eigenvalue(T, blocks[k].first, blocks[k].second))) {
                src = k;
                break;
            }
        }
        if (src < 0) break;
        const Index moving_size = blocks[src].second;
        for (Index k = src; k > bi; --k)
            swap_schur_blocks(T, Q, blocks[k - 1].first, blocks[k - 1].second, moving_size);
        inserted += moving_size;
    }
    return inserted;
}

}  // namespace detail

/// Eigenvalues of a real square matrix without eigenvectors (Schur based).
inline ComplexVector eigenvalues_only(const Matrix& A) {
    require_square(A, "eigenvalues_only");
    Eigen::RealSchur<Matrix> schur(A, /*computeU=*/false);
    if (schur.info() != Eigen::Success)
        raise(ErrorCode::ConvergenceFailure, "real Schur iteration did not converge");
    return detail::quasi_triangular_eigenvalues(schur.matrixT());
}

/// Largest real part of the spectrum.
inline double spectral_abscissa(const Matrix& A) {
    const ComplexVector ev = eigenvalues_only(A);
    double m = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < ev.size(); ++i) m = std::max(m, ev(i).real());
    return m;
}

}  // namespace gapmor
