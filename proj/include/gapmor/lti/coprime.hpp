// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "gapmor/linalg/eig.hpp"
#include "gapmor/linalg/riccati.hpp"
#include "gapmor/lti/state_space.hpp"

namespace gapmor {

/// Left-coprime factorization G = M^{-1} N built from the stabilizing filter
/// gain F = P C^T. `gf` realizes the stacked stable system [M, N] with state
/// matrix A_F = A - P C^T C, inputs [-F, B], output C and feedthrough [I, 0].
struct ClosedLoopFactorization {
    StateSpace base;
    Matrix P;
    Matrix F;
    StateSpace gf;
};

/// Pole-residue form of a closed-loop pair [M, N]: at each pole lambda_i the
/// residue is c_i [f_i^T, b_i^T]. The first p entries of the stacked input
/// direction belong to the M part, the trailing m to the N part.
struct PoleResidueForm {
    ComplexVector poles;
    std::vector<ComplexVector> leftDirections;  // c_i (p)
    std::vector<ComplexVector> fDirections;     // f_i (p)
    std::vector<ComplexVector> bDirections;     // b_i (m)
    Matrix feedthrough;                         // [I_p, 0]

    Index size() const { return poles.size(); }

    /// Stacked input direction [f_i; b_i].
    ComplexVector stackedDirection(Index i) const {
        ComplexVector g(fDirections[i].size() + bDirections[i].size());
        g << fDirections[i], bDirections[i];
        return g;
    }

    /// Resummation: feedthrough + sum_i c_i [f_i^T, b_i^T] / (s - lambda_i).
    ComplexMatrix eval(Complex s) const {
        ComplexMatrix G = feedthrough.cast<Complex>();
        for (Index i = 0; i < size(); ++i) {
            const ComplexVector g = stackedDirection(i);
            G.noalias() += (leftDirections[i] * g.transpose()) / (s - poles(i));
        }
        return G;
    }
};

inline ClosedLoopFactorization coprime_factorize(const StateSpace& sys) {
    if (!sys.strictly_proper())
        raise(ErrorCode::NonzeroFeedthrough, "coprime_factorize requires D = 0");
    Matrix P = solve_filter_care(sys.A, sys.B, sys.C);
    Matrix F = P * sys.C.transpose();
    const Index n = sys.order(), m = sys.inputs(), p = sys.outputs();
    Matrix AF = sys.A - F * sys.C;
    Matrix Bgf(n, p + m);
    Bgf.leftCols(p) = -F;
    Bgf.rightCols(m) = sys.B;
    Matrix Dgf = Matrix::Zero(p, p + m);
    Dgf.leftCols(p) = Matrix::Identity(p, p);
    StateSpace gf(std::move(AF), std::move(Bgf), sys.C, std::move(Dgf));
    return {sys, std::move(P), std::move(F), std::move(gf)};
}

/// Pole-residue data of G_F from one eigendecomposition of A_F with the
/// W^T V = I normalization: b_i = B^T w_i, f_i = -F^T w_i, c_i = C v_i.
inline PoleResidueForm closed_loop_pole_residue(const ClosedLoopFactorization& clf,
                                                double defect_tol = 1e-8) {
    const Eigendecomposition ed = eig(clf.gf.A, defect_tol);
    const Index n = clf.gf.order();
    PoleResidueForm pr;
    pr.poles = ed.eigenvalues;
    pr.leftDirections.reserve(n);
    pr.fDirections.reserve(n);
    pr.bDirections.reserve(n);
    const ComplexMatrix Bt = clf.base.B.transpose().cast<Complex>();
    const ComplexMatrix Ft = clf.F.transpose().cast<Complex>();
    const ComplexMatrix C = clf.base.C.cast<Complex>();
    for (Index i = 0; i < n; ++i) {
        pr.bDirections.push_back(Bt * ed.leftVectors.col(i));
        pr.fDirections.push_back(-(Ft * ed.leftVectors.col(i)));
        pr.leftDirections.push_back(C * ed.rightVectors.col(i));
    }
    pr.feedthrough = clf.gf.D;
    return pr;
}

/// Pole-residue data of a plain system: residue of C (sI-A)^{-1} B at
/// lambda_i is (C v_i)(B^T w_i)^T. Packed with empty f-directions.
inline PoleResidueForm pole_residue(const StateSpace& sys, double defect_tol = 1e-8) {
    const Eigendecomposition ed = eig(sys.A, defect_tol);
    const Index n = sys.order();
    PoleResidueForm pr;
    pr.poles = ed.eigenvalues;
    const ComplexMatrix Bt = sys.B.transpose().cast<Complex>();
    const ComplexMatrix C = sys.C.cast<Complex>();
    for (Index i = 0; i < n; ++i) {
        pr.bDirections.push_back(Bt * ed.leftVectors.col(i));
        pr.fDirections.push_back(ComplexVector::Zero(0));
        pr.leftDirections.push_back(C * ed.rightVectors.col(i));
    }
    pr.feedthrough = sys.D;
    return pr;
}

}  // namespace gapmor
