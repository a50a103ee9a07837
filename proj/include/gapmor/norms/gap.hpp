// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gapmor/norms/linf.hpp"

namespace gapmor {

namespace detail {

inline void check_mirror_disjoint(const ComplexVector& a, const ComplexVector& b) {
    for (Index i = 0; i < a.size(); ++i)
        for (Index j = 0; j < b.size(); ++j)
            if (std::abs(a(i) + b(j)) < 1e-10 * std::max(std::abs(a(i)), 1.0))
                raise(ErrorCode::MirrorCollision,
                      "pole sets collide with their mirror images");
}

inline void check_stable_poles(const ComplexVector& p, const char* who) {
    for (Index i = 0; i < p.size(); ++i)
        if (p(i).real() >= 0.0)
            raise(ErrorCode::UnstablePole, std::string(who) + ": closed-loop pole not in C-");
}

}  // namespace detail

/// H2-gap ||[M,N] - [Mr,Nr]||_H2 via coprime factorization of both systems,
/// the error system, and its controllability Gramian.
inline NormResult h2_gap(const StateSpace& G, const StateSpace& Gr) {
    const auto clf = coprime_factorize(G);
    const auto clfr = coprime_factorize(Gr);
    NormResult res = h2_norm_gramian(error_system(clf.gf, clfr.gf));
    res.method = NormMethod::Gramian;
    return res;
}

/// H2-gap from the two closed-loop pole-residue forms:
/// sum_i c_i^T (G_F - Gr_F)(-lam_i) [f_i; b_i]
///   + sum_j cr_j^T (Gr_F - G_F)(-lamr_j) [fr_j; br_j].
inline NormResult h2_gap_pole_residue(const PoleResidueForm& prF, const PoleResidueForm& prFr) {
    detail::check_stable_poles(prF.poles, "h2_gap_pole_residue");
    detail::check_stable_poles(prFr.poles, "h2_gap_pole_residue (reduced)");
    detail::check_mirror_disjoint(prF.poles, prF.poles);
    detail::check_mirror_disjoint(prF.poles, prFr.poles);
    detail::check_mirror_disjoint(prFr.poles, prFr.poles);
    Complex total(0.0, 0.0);
    for (Index i = 0; i < prF.size(); ++i) {
        const Complex s = -prF.poles(i);
        const ComplexMatrix diff = prF.eval(s) - prFr.eval(s);
        total += (prF.leftDirections[i].transpose() * diff * prF.stackedDirection(i))(0);
    }
    for (Index j = 0; j < prFr.size(); ++j) {
        const Complex s = -prFr.poles(j);
        const ComplexMatrix diff = prFr.eval(s) - prF.eval(s);
        total += (prFr.leftDirections[j].transpose() * diff * prFr.stackedDirection(j))(0);
    }
    const double re = total.real();
    if (std::abs(total.imag()) > 1e-9 * std::max(1.0, std::abs(re)))
        raise(ErrorCode::ConvergenceFailure,
              "h2_gap_pole_residue: non-negligible imaginary residue");
    return {std::sqrt(std::max(re, 0.0)), NormMethod::PoleResidue, std::nullopt};
}

/// H2-gap evaluated from G, Gr, M, Mr only (plus closed-loop residue data):
/// sum_i c_i^T Mr(-lam_i) (G - Gr)(-lam_i) b_i
///   + sum_j cr_j^T M(-lamr_j) (Gr - G)(-lamr_j) br_j.
/// Returns the squared contributions through `firstSum`/`secondSum` when
/// requested (both real parts).
inline NormResult h2_gap_theorem1(const StateSpace& G, const StateSpace& Gr,
                                  double* firstSum = nullptr, double* secondSum = nullptr) {
    const auto clf = coprime_factorize(G);
    const auto clfr = coprime_factorize(Gr);
    const PoleResidueForm prF = closed_loop_pole_residue(clf);
    const PoleResidueForm prFr = closed_loop_pole_residue(clfr);
    detail::check_stable_poles(prF.poles, "h2_gap_theorem1");
    detail::check_stable_poles(prFr.poles, "h2_gap_theorem1 (reduced)");
    detail::check_mirror_disjoint(prF.poles, prFr.poles);

    const Index p = G.outputs();
    // M(s) = I - C (sI - A_F)^{-1} F from the closed-loop realization
    const auto eval_m = [p](const ClosedLoopFactorization& c, Complex s) -> ComplexMatrix {
        ComplexMatrix M = -c.gf.A.cast<Complex>();
        M.diagonal().array() += s;
        const ComplexMatrix X = solve_linear<Complex>(M, c.F.cast<Complex>());
        return ComplexMatrix::Identity(p, p) - c.base.C.cast<Complex>() * X;
    };

    Complex first(0.0, 0.0), second(0.0, 0.0);
    for (Index i = 0; i < prF.size(); ++i) {
        const Complex s = -prF.poles(i);
        const ComplexMatrix diff = transfer_eval(G, s) - transfer_eval(Gr, s);
        first += (prF.leftDirections[i].transpose() * eval_m(clfr, s) * diff *
                  prF.bDirections[i])(0);
    }
    for (Index j = 0; j < prFr.size(); ++j) {
        const Complex s = -prFr.poles(j);
        const ComplexMatrix diff = transfer_eval(Gr, s) - transfer_eval(G, s);
        second += (prFr.leftDirections[j].transpose() * eval_m(clf, s) * diff *
                   prFr.bDirections[j])(0);
    }
    const Complex total = first + second;
    if (firstSum) *firstSum = first.real();
    if (secondSum) *secondSum = second.real();
    const double re = total.real();
    if (std::abs(total.imag()) > 1e-9 * std::max(1.0, std::abs(re)))
        raise(ErrorCode::ConvergenceFailure, "h2_gap_theorem1: non-negligible imaginary residue");
    return {std::sqrt(std::max(re, 0.0)), NormMethod::Theorem1, std::nullopt};
}

/// L-infinity norm of the (stable) closed-loop error system [M,N] - [Mr,Nr].
inline NormResult linf_gap(const StateSpace& G, const StateSpace& Gr, double rel_tol = 1e-6) {
    const auto clf = coprime_factorize(G);
    const auto clfr = coprime_factorize(Gr);
    NormResult res = linf_norm(error_system(clf.gf, clfr.gf), rel_tol);
    return res;
}

/// Upper bound ||Mr^{-1}||_Linf (1 + ||G||_Linf) ||G - Gr||_H2-gap on the
/// L2 error between the transfer functions.
inline double l2_error_bound(const StateSpace& G, const StateSpace& Gr) {
    const auto clfr = coprime_factorize(Gr);
    // Mr^{-1}(s) = I + Cr (sI - Ar)^{-1} Fr
    const Index p = Gr.outputs();
    StateSpace minv(Gr.A, clfr.F, Gr.C, Matrix::Identity(p, p));
    const double nminv = linf_norm(minv).value;
    const double ng = linf_norm(G).value;
    const double gap = h2_gap(G, Gr).value;
    return nminv * (1.0 + ng) * gap;
}

}  // namespace gapmor
