// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/SVD>
#include <algorithm>
#include <vector>

#include "gapmor/norms/h2.hpp"

namespace gapmor {

namespace detail {

inline double sigma_max_at(const StateSpace& sys, double omega) {
    const ComplexMatrix G = transfer_eval(sys, Complex(0.0, omega));
    return Eigen::JacobiSVD<ComplexMatrix>(G).singularValues()(0);
}

/// Hamiltonian-type test matrix for level gamma (Bruinsma-Steinbuch form):
/// i*omega is an eigenvalue iff gamma is a singular value of G(i omega).
inline Matrix linf_test_matrix(const StateSpace& sys, double gamma) {
    const Index n = sys.order(), m = sys.inputs(), p = sys.outputs();
    const Matrix R = gamma * gamma * Matrix::Identity(m, m) - sys.D.transpose() * sys.D;
    Eigen::PartialPivLU<Matrix> Rlu(R);
    const Matrix RinvDtC = Rlu.solve(sys.D.transpose() * sys.C);
    const Matrix RinvBt = Rlu.solve(sys.B.transpose());
    const Matrix Abar = sys.A + sys.B * RinvDtC;
    Matrix H(2 * n, 2 * n);
    H.topLeftCorner(n, n) = Abar;
    H.topRightCorner(n, n).noalias() = sys.B * RinvBt;
    H.bottomLeftCorner(n, n).noalias() =
        -sys.C.transpose() * (Matrix::Identity(p, p) + sys.D * Rlu.solve(sys.D.transpose())) *
        sys.C;
    H.bottomRightCorner(n, n) = -Abar.transpose();
    return H;
}

/// Imaginary-axis eigenvalue frequencies of the level test matrix.
inline std::vector<double> imaginary_crossings(const Matrix& H) {
    const ComplexVector ev = eigenvalues_only(H);
    const double axis_tol = 1e-9 * std::max(1.0, H.norm());
    std::vector<double> om;
    for (Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev(i).real()) <= axis_tol && ev(i).imag() > 0.0)
            om.push_back(ev(i).imag());
    std::sort(om.begin(), om.end());
    return om;
}

}  // namespace detail

/// L-infinity norm sup_w sigma_max(G(iw)) by gamma bisection with the
/// imaginary-eigenvalue level test, bracketed from log-spaced samples and
/// refined at crossing-interval midpoints.
inline NormResult linf_norm(const StateSpace& sys, double rel_tol = 1e-6) {
    const ComplexVector evA = eigenvalues_only(sys.A);
    double min_redist = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < evA.size(); ++i)
        min_redist = std::min(min_redist, std::abs(evA(i).real()));
    if (sys.order() > 0 && min_redist <= 1e-12 * std::max(1.0, sys.A.norm()))
        raise(ErrorCode::ImaginaryAxisPole, "linf_norm: eigenvalue on the imaginary axis");

    const double sigD =
        sys.D.size() == 0 || sys.D.cwiseAbs().maxCoeff() == 0.0
            ? 0.0
            : Eigen::JacobiSVD<Matrix>(sys.D).singularValues()(0);

    // initial bracket from samples at omega = 0 and log-spaced 1e-4..1e4
    double lo = sigD, peak = 0.0;
    {
        const double s0 = detail::sigma_max_at(sys, 0.0);
        if (s0 > lo) lo = s0, peak = 0.0;
        for (int k = 0; k < 49; ++k) {
            const double w = std::pow(10.0, -4.0 + 8.0 * k / 48.0);
            const double s = detail::sigma_max_at(sys, w);
            if (s > lo) lo = s, peak = w;
        }
    }
    if (lo == 0.0) return {0.0, NormMethod::Bisection, 0.0};

    const double floor_gamma = sigD * (1.0 + 1e-12);
    double hi = std::max(2.0 * lo, floor_gamma * (1.0 + 1e-6));
    for (int k = 0; k < 80; ++k) {
        if (detail::imaginary_crossings(detail::linf_test_matrix(sys, hi)).empty()) break;
        if (k == 79)
            raise(ErrorCode::ConvergenceFailure, "linf_norm: no finite upper bound found");
        hi *= 4.0;
    }

    while (hi - lo > rel_tol * lo) {
        double gamma = 0.5 * (lo + hi);
        if (gamma <= floor_gamma) {
            lo = std::max(lo, floor_gamma);
            break;
        }
        const auto om = detail::imaginary_crossings(detail::linf_test_matrix(sys, gamma));
        if (om.empty()) {
            hi = gamma;
            continue;
        }
        // gamma is attained somewhere; probe midpoints to push the bound up
        double best = gamma;
        for (std::size_t i = 0; i + 1 < om.size(); ++i) {
            const double wm = 0.5 * (om[i] + om[i + 1]);
            const double s = detail::sigma_max_at(sys, wm);
            if (s > best) best = s, peak = wm;
        }
        if (om.size() == 1) {
            const double s = detail::sigma_max_at(sys, om[0]);
            if (s > best) best = s, peak = om[0];
        }
        lo = best;
    }
    return {0.5 * (lo + hi), NormMethod::Bisection, peak};
}

}  // namespace gapmor
