// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "gapmor/lti/coprime.hpp"
#include "gapmor/reduce/interpolation.hpp"

namespace gapmor {

struct IrkaOptions {
    double tol = 1e-6;
    int maxIter = 100;
    std::optional<InterpolationData> init;
    std::uint64_t seed = 0;
    double defectTol = 1e-8;
};

struct ReductionResult {
    StateSpace rom;
    std::string method;
    int iterations = 0;
    bool converged = false;
    std::vector<ComplexVector> shiftHistory;  // canonical shift set per iteration
    std::vector<double> shiftChanges;         // max relative change per iteration
    InterpolationData finalInterp;            // data whose projection produced rom
};

namespace detail {

inline double max_relative_shift_change(const ComplexVector& olds, const ComplexVector& news) {
    double ch = 0.0;
    for (Index i = 0; i < olds.size(); ++i)
        ch = std::max(ch, std::abs(news(i) - olds(i)) / std::max(std::abs(olds(i)), 1e-300));
    return ch;
}

inline InterpolationData perturb_shifts(const InterpolationData& data, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto items = canonical_triples(data);
    for (auto& it : items) it.shift *= 1.0 + 0.01 * gauss(rng);
    return emit_canonical(items);
}

/// Keeps shifts off the imaginary axis so the InterpolationData invariant and
/// the mirrored-pole solves stay well posed.
inline void nudge_off_axis(InterpolationData& data) {
    bool touched = false;
    for (Index i = 0; i < data.size(); ++i) {
        Complex s = data.shifts(i);
        if (std::abs(s.real()) <= 1e-12 * std::max(1.0, std::abs(s))) {
            data.shifts(i) = Complex(s.real() + 1e-8 * std::max(1.0, std::abs(s)), s.imag());
            touched = true;
        }
    }
    if (touched) data = canonicalize(data);
}

template <bool GapVariant>
ReductionResult irka_loop(const StateSpace& sys, Index r, const IrkaOptions& opts,
                          const char* name) {
    if (r < 1 || r >= sys.order())
        raise(ErrorCode::InvalidArgument, std::string(name) + ": need 1 <= r < n");
    InterpolationData data =
        opts.init ? canonicalize(*opts.init) : default_init(sys, r, opts.seed);
    if (data.size() != r)
        raise(ErrorCode::DimensionMismatch, std::string(name) + ": init data size != r");
    std::mt19937_64 retry_rng(opts.seed ^ 0x9e3779b97f4a7c15ull);

    ReductionResult res;
    res.method = name;
    for (int it = 1; it <= opts.maxIter; ++it) {
        StateSpace rom;
        InterpolationData next;
        int attempts = 0;
        while (true) {
            try {
                auto [V, W] = build_bases(sys, data);
                std::tie(V, W) = biorthogonalize(std::move(V), std::move(W));
                rom = project(sys, V, W);
                InterpolationData upd;
                upd.shifts.resize(r);
                if constexpr (GapVariant) {
                    const auto clfr = coprime_factorize(rom);
                    const PoleResidueForm pr = closed_loop_pole_residue(clfr, opts.defectTol);
                    for (Index j = 0; j < r; ++j) {
                        upd.shifts(j) = -pr.poles(j);
                        upd.rightDirections.push_back(pr.bDirections[j]);
                        upd.leftDirections.push_back(pr.leftDirections[j]);
                    }
                } else {
                    const Eigendecomposition ed = eig(rom.A, opts.defectTol);
                    const ComplexMatrix Bt = rom.B.transpose().cast<Complex>();
                    const ComplexMatrix Cc = rom.C.cast<Complex>();
                    for (Index j = 0; j < r; ++j) {
                        upd.shifts(j) = -ed.eigenvalues(j);
                        upd.rightDirections.push_back(Bt * ed.leftVectors.col(j));
                        upd.leftDirections.push_back(Cc * ed.rightVectors.col(j));
                    }
                }
                next = canonicalize(upd);
                nudge_off_axis(next);
                break;
            } catch (const Error& e) {
                const bool retryable = e.code() == ErrorCode::SingularMatrix ||
                                       e.code() == ErrorCode::RankDeficient ||
                                       e.code() == ErrorCode::NotStabilizing ||
                                       e.code() == ErrorCode::SubspaceDimension;
                if (!retryable || ++attempts > 3)
                    throw Error(e.code(), std::string(name) + " iteration " +
                                              std::to_string(it) + ": " + e.what());
                data = perturb_shifts(data, retry_rng);
            }
        }
        const double change = max_relative_shift_change(data.shifts, next.shifts);
        res.rom = std::move(rom);
        res.finalInterp = data;
        res.iterations = it;
        res.shiftHistory.push_back(next.shifts);
        res.shiftChanges.push_back(change);
        if (change <= opts.tol) {
            res.converged = true;
            return res;
        }
        data = std::move(next);
    }
    res.converged = false;
    return res;
}

}  // namespace detail

/// Classic IRKA fixed point: shifts move to the mirrored reduced poles,
/// directions to the reduced residue directions.
inline ReductionResult irka(const StateSpace& sys, Index r, const IrkaOptions& opts = {}) {
    return detail::irka_loop<false>(sys, r, opts, "irka");
}

/// Same fixed-point structure, but shifts and directions come from the
/// pole-residue data of the reduced closed-loop system [Mr, Nr]; only the
/// r x r filter Riccati equation is ever solved.
inline ReductionResult gap_irka(const StateSpace& sys, Index r, const IrkaOptions& opts = {}) {
    return detail::irka_loop<true>(sys, r, opts, "gap-irka");
}

}  // namespace gapmor
