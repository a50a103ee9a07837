// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "gapmor/linalg/schur.hpp"
#include "gapmor/matrix.hpp"

namespace testutil {

using gapmor::Index;
using gapmor::Matrix;
using gapmor::Vector;

inline Matrix random_matrix(Index rows, Index cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix M(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) M(i, j) = gauss(rng);
    return M;
}

/// Random matrix with spectrum shifted into the open left half-plane.
inline Matrix random_stable_matrix(Index n, std::uint64_t seed) {
    Matrix A = random_matrix(n, n, seed);
    A -= (gapmor::spectral_abscissa(A) + 0.5) * Matrix::Identity(n, n);
    return A;
}

}  // namespace testutil
