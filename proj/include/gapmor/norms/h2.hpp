// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "gapmor/linalg/lyapunov.hpp"
#include "gapmor/lti/coprime.hpp"
#include "gapmor/lti/state_space.hpp"

namespace gapmor {

enum class NormMethod { Gramian, PoleResidue, Bisection, Theorem1 };

struct NormResult {
    double value = 0.0;
    NormMethod method = NormMethod::Gramian;
    std::optional<double> peakFrequency;  // L-infinity only
};

/// H2 norm via the controllability Gramian: sqrt(trace(C X C^T)) with
/// A X + X A^T + B B^T = 0. Requires a stable A and zero feedthrough.
inline NormResult h2_norm_gramian(const StateSpace& sys) {
    if (!sys.strictly_proper())
        raise(ErrorCode::NonzeroFeedthrough, "h2_norm_gramian requires D = 0");
    if (spectral_abscissa(sys.A) >= 0.0)
        raise(ErrorCode::Unstable, "h2_norm_gramian requires an asymptotically stable A");
    const Matrix X = solve_lyapunov(sys.A, sys.B * sys.B.transpose());
    const double tr = (sys.C * X * sys.C.transpose()).trace();
    return {std::sqrt(std::max(tr, 0.0)), NormMethod::Gramian, std::nullopt};
}

/// H2 norm of the strictly proper part from pole-residue data:
/// ||H||^2 = sum_k h_k^T H(-mu_k) g_k, H re-evaluated from the residue sum.
inline NormResult h2_norm_pole_residue(const PoleResidueForm& pr) {
    const Index n = pr.size();
    if (n == 0) return {0.0, NormMethod::PoleResidue, std::nullopt};
    for (Index i = 0; i < n; ++i)
        if (pr.poles(i).real() >= 0.0)
            raise(ErrorCode::UnstablePole, "h2_norm_pole_residue: pole in the closed right half-plane");
    Complex total(0.0, 0.0);
    for (Index k = 0; k < n; ++k) {
        const ComplexVector gk = pr.stackedDirection(k);
        ComplexVector acc = ComplexVector::Zero(pr.leftDirections[k].size());
        for (Index i = 0; i < n; ++i) {
            const ComplexVector gi = pr.stackedDirection(i);
            acc += pr.leftDirections[i] * (gi.transpose() * gk)(0) / (-pr.poles(k) - pr.poles(i));
        }
        total += (pr.leftDirections[k].transpose() * acc)(0);
    }
    const double re = total.real();
    if (std::abs(total.imag()) > 1e-10 * std::max(1.0, std::abs(re)))
        raise(ErrorCode::ConvergenceFailure,
              "h2_norm_pole_residue: non-negligible imaginary residue");
    return {std::sqrt(std::max(re, 0.0)), NormMethod::PoleResidue, std::nullopt};
}

}  // namespace gapmor
