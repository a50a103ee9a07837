// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/QR>
#include <random>
#include <vector>

#include "gapmor/lti/state_space.hpp"

namespace gapmor {

/// Tangential interpolation data: shifts with right directions (inputs) and
/// left directions (outputs), closed under conjugation as a set of triples.
struct InterpolationData {
    ComplexVector shifts;
    std::vector<ComplexVector> rightDirections;  // m-vectors
    std::vector<ComplexVector> leftDirections;   // p-vectors

    Index size() const { return shifts.size(); }
};

namespace detail {

struct InterpTriple {
    Complex shift;  // representative: real, or Im > 0
    ComplexVector rdir, ldir;
    bool pair = false;
};

inline bool nearly_real(Complex z) { return std::abs(z.imag()) <= 1e-13 * std::max(1.0, std::abs(z)); }

/// Groups shift/direction triples into ordered canonical items: real shifts
/// single, complex shifts as conjugate pairs with the +Im member leading.
inline std::vector<InterpTriple> canonical_triples(const InterpolationData& data) {
    const Index r = data.size();
    if (static_cast<Index>(data.rightDirections.size()) != r ||
        static_cast<Index>(data.leftDirections.size()) != r)
        raise(ErrorCode::DimensionMismatch, "interpolation data: direction count != shift count");
    std::vector<bool> used(r, false);
    std::vector<InterpTriple> items;
    for (Index i = 0; i < r; ++i) {
        if (used[i]) continue;
        used[i] = true;
        const Complex s = data.shifts(i);
        if (nearly_real(s)) {
            ComplexVector rd = data.rightDirections[i], ld = data.leftDirections[i];
            const double rimag = rd.imag().norm() + ld.imag().norm();
            if (rimag > 1e-8 * (rd.norm() + ld.norm() + 1e-300))
                raise(ErrorCode::InvalidArgument,
                      "interpolation data: complex directions at a real shift");
            items.push_back({Complex(s.real(), 0.0), rd.real().cast<Complex>(),
                             ld.real().cast<Complex>(), false});
            continue;
        }
        Index partner = -1;
        for (Index j = i + 1; j < r; ++j) {
            if (used[j]) continue;
            if (std::abs(data.shifts(j) - std::conj(s)) <= 1e-8 * (1.0 + std::abs(s))) {
                partner = j;
                break;
            }
        }
        if (partner < 0)
            raise(ErrorCode::InvalidArgument,
                  "interpolation data: shift set not closed under conjugation");
        used[partner] = true;
        const Index rep = s.imag() > 0.0 ? i : partner;
        items.push_back({data.shifts(rep), data.rightDirections[rep], data.leftDirections[rep],
                         true});
    }
    std::sort(items.begin(), items.end(), [](const InterpTriple& a, const InterpTriple& b) {
        if (a.shift.real() != b.shift.real()) return a.shift.real() < b.shift.real();
        return a.shift.imag() < b.shift.imag();
    });
    return items;
}

inline InterpolationData emit_canonical(const std::vector<InterpTriple>& items) {
    Index r = 0;
    for (const auto& it : items) r += it.pair ? 2 : 1;
    InterpolationData out;
    out.shifts.resize(r);
    out.rightDirections.reserve(r);
    out.leftDirections.reserve(r);
    Index k = 0;
    for (const auto& it : items) {
        out.shifts(k) = it.shift;
        out.rightDirections.push_back(it.rdir);
        out.leftDirections.push_back(it.ldir);
        ++k;
        if (it.pair) {
            out.shifts(k) = std::conj(it.shift);
            out.rightDirections.push_back(it.rdir.conjugate());
            out.leftDirections.push_back(it.ldir.conjugate());
            ++k;
        }
    }
    return out;
}

}  // namespace detail

/// Deterministic canonical ordering: conjugate pairs adjacent (+Im first),
/// items sorted by (Re, Im); exact conjugacy enforced.
inline InterpolationData canonicalize(const InterpolationData& data) {
    return detail::emit_canonical(detail::canonical_triples(data));
}

/// Default starting data: r shifts log-spaced on [1e-1, 1e2] (midpoint for
/// r = 1) with seeded unit-norm real directions.
inline InterpolationData default_init(const StateSpace& sys, Index r, std::uint64_t seed) {
    if (r < 1) raise(ErrorCode::InvalidArgument, "default_init: r must be >= 1");
    InterpolationData data;
    data.shifts.resize(r);
    if (r == 1) {
        data.shifts(0) = Complex(std::pow(10.0, 0.5), 0.0);
    } else {
        for (Index k = 0; k < r; ++k)
            data.shifts(k) =
                Complex(std::pow(10.0, -1.0 + 3.0 * double(k) / double(r - 1)), 0.0);
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto unit_vec = [&](Index len) {
        Vector v(len);
        for (Index i = 0; i < len; ++i) v(i) = gauss(rng);
        const double nv = v.norm();
        if (nv == 0.0) v(0) = 1.0;
        else v /= nv;
        return v;
    };
    for (Index k = 0; k < r; ++k) {
        data.rightDirections.push_back(unit_vec(sys.inputs()).cast<Complex>());
        data.leftDirections.push_back(unit_vec(sys.outputs()).cast<Complex>());
    }
    return canonicalize(data);
}

/// Rational Krylov bases: complex columns (sI - A)^{-1} B r and
/// (sI - A^T)^{-1} C^T l, realified per conjugate pair as (Re, Im) columns.
inline std::pair<Matrix, Matrix> build_bases(const StateSpace& sys,
                                             const InterpolationData& data) {
    const auto items = detail::canonical_triples(data);
    const Index n = sys.order();
    Index r = 0;
    for (const auto& it : items) r += it.pair ? 2 : 1;
    if (r >= n) raise(ErrorCode::InvalidArgument, "build_bases: r must be < n");
    Matrix V(n, r), W(n, r);
    Index col = 0;
    for (const auto& it : items) {
        if (!it.pair) {
            Matrix M = -sys.A;
            M.diagonal().array() += it.shift.real();
            V.col(col) = solve_linear<double>(M, Vector(sys.B * it.rdir.real()));
            Matrix Mt = -sys.A.transpose();
            Mt.diagonal().array() += it.shift.real();
            W.col(col) = solve_linear<double>(Mt, Vector(sys.C.transpose() * it.ldir.real()));
            ++col;
        } else {
            ComplexMatrix M = -sys.A.cast<Complex>();
            M.diagonal().array() += it.shift;
            const ComplexVector v =
                solve_linear<Complex>(M, ComplexVector(sys.B.cast<Complex>() * it.rdir));
            ComplexMatrix Mt = -sys.A.transpose().cast<Complex>();
            Mt.diagonal().array() += it.shift;
            const ComplexVector w = solve_linear<Complex>(
                Mt, ComplexVector(sys.C.transpose().cast<Complex>() * it.ldir));
            V.col(col) = v.real();
            V.col(col + 1) = v.imag();
            W.col(col) = w.real();
            W.col(col + 1) = w.imag();
            col += 2;
        }
    }
    if (Eigen::ColPivHouseholderQR<Matrix>(V).rank() < r)
        raise(ErrorCode::RankDeficient, "build_bases: V columns are numerically dependent");
    if (Eigen::ColPivHouseholderQR<Matrix>(W).rank() < r)
        raise(ErrorCode::RankDeficient, "build_bases: W columns are numerically dependent");
    return {std::move(V), std::move(W)};
}

/// Basis change W <- W (V^T W)^{-1} so that W^T V = I.
inline std::pair<Matrix, Matrix> biorthogonalize(Matrix V, Matrix W) {
    if (V.rows() != W.rows() || V.cols() != W.cols())
        raise(ErrorCode::DimensionMismatch, "biorthogonalize: shape mismatch");
    const Matrix M = V.transpose() * W;
    Eigen::FullPivLU<Matrix> lu(M.transpose());
    if (!lu.isInvertible() || lu.rcond() < 1e-13)
        raise(ErrorCode::SingularMatrix,
              "biorthogonalize: oblique projection is numerically degenerate");
    W = lu.solve(W.transpose()).transpose();
    return {std::move(V), std::move(W)};
}

/// Petrov-Galerkin projection (W^T A V, W^T B, C V); expects W^T V = I.
inline StateSpace project(const StateSpace& sys, const Matrix& V, const Matrix& W) {
    return {W.transpose() * sys.A * V, W.transpose() * sys.B, sys.C * V};
}

}  // namespace gapmor
