// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/QR>
#include <random>

#include "gapmor/lti/state_space.hpp"

namespace gapmor {

/// Seeded test-system generator: A is an orthogonal similarity of a block
/// diagonal with a stable part (real entries and 2x2 spiral blocks) and
/// nUnstable real unstable entries; B, C are dense Gaussian, which makes
/// stabilizability and detectability generic. Deterministic per seed.
inline StateSpace random_stabilizable(Index n, Index m, Index p, Index nUnstable,
                                      std::uint64_t seed) {
    if (n < 1 || m < 1 || p < 1)
        raise(ErrorCode::InvalidArgument, "random_stabilizable: dimensions must be positive");
    if (nUnstable < 0 || nUnstable > n)
        raise(ErrorCode::InvalidArgument, "random_stabilizable: need 0 <= nUnstable <= n");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> stable(-2.5, -0.5);
    std::uniform_real_distribution<double> unstable(0.3, 1.3);
    std::uniform_real_distribution<double> freq(0.4, 2.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    Matrix D = Matrix::Zero(n, n);
    Index k = 0;
    const Index nStable = n - nUnstable;
    while (k < nStable) {
        if (k + 1 < nStable && coin(rng) < 0.5) {
            const double a = stable(rng), w = freq(rng);
            D(k, k) = a;
            D(k, k + 1) = w;
            D(k + 1, k) = -w;
            D(k + 1, k + 1) = a;
            k += 2;
        } else {
            D(k, k) = stable(rng);
            k += 1;
        }
    }
    for (; k < n; ++k) D(k, k) = unstable(rng);

    Matrix G(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) G(i, j) = gauss(rng);
    const Matrix Q = Eigen::HouseholderQR<Matrix>(G).householderQ() * Matrix::Identity(n, n);
    Matrix A = Q.transpose() * D * Q;

    Matrix B(n, m), C(p, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < m; ++j) B(i, j) = gauss(rng);
    for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < n; ++j) C(i, j) = gauss(rng);
    return {std::move(A), std::move(B), std::move(C)};
}

}  // namespace gapmor
