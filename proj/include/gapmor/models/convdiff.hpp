// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "gapmor/lti/state_space.hpp"

namespace gapmor {

struct Rectangle {
    double x0, x1, y0, y1;
    bool contains(double x, double y) const { return x0 <= x && x <= x1 && y0 <= y && y <= y1; }
};

/// How the single output row is scaled over the observation rectangle.
enum class ObsScaling {
    Indicator,       // entries 1 at observed grid points
    CellQuadrature,  // entries h^2 (composite midpoint rule for the integral)
};

/// Controlled convection-diffusion-reaction benchmark on the unit square,
///   v_t = diffusion * Lap(v) - convectionCoeff * sin(x) * v_x + reaction * v
///        + chi_control * u(t),
/// Dirichlet boundary, nx-by-nx interior grid, h = 1/(nx+1), five-point
/// Laplacian and central differences for the convection term. The output
/// samples the observation rectangle. Rectangles are inclusive of their
/// boundaries; grid point (i, j) sits at (i*h, j*h).
struct ConvDiffConfig {
    Index nx = 20;
    double diffusion = 1.0;
    double convectionCoeff = 20.0;
    double reaction = 50.0;
    Rectangle controlDomain{0.2, 0.3, 0.2, 0.3};
    // The output integrates dx over [0.7, 0.9] (inner integral) and dy over
    // [0.5, 0.7] (outer integral).
    Rectangle obsDomain{0.7, 0.9, 0.5, 0.7};
    ObsScaling obsScaling = ObsScaling::Indicator;
};

inline StateSpace convection_diffusion(const ConvDiffConfig& cfg) {
    if (cfg.nx < 3) raise(ErrorCode::InvalidArgument, "convection_diffusion: nx must be >= 3");
    const auto inside_unit = [](const Rectangle& r) {
        return 0.0 < r.x0 && r.x0 <= r.x1 && r.x1 < 1.0 && 0.0 < r.y0 && r.y0 <= r.y1 &&
               r.y1 < 1.0;
    };
    if (!inside_unit(cfg.controlDomain) || !inside_unit(cfg.obsDomain))
        raise(ErrorCode::InvalidArgument, "convection_diffusion: rectangles must lie in (0,1)^2");
    const Index nx = cfg.nx;
    const Index n = nx * nx;
    const double h = 1.0 / double(nx + 1);
    const double ih2 = cfg.diffusion / (h * h);
    Matrix A = Matrix::Zero(n, n);
    Matrix B = Matrix::Zero(n, 1);
    Matrix C = Matrix::Zero(1, n);
    const double cweight = cfg.obsScaling == ObsScaling::Indicator ? 1.0 : h * h;
    const auto idx = [nx](Index i, Index j) { return (j - 1) * nx + (i - 1); };
    for (Index j = 1; j <= nx; ++j) {
        for (Index i = 1; i <= nx; ++i) {
            const Index k = idx(i, j);
            const double x = i * h, y = j * h;
            A(k, k) += -4.0 * ih2 + cfg.reaction;
            if (i > 1) A(k, idx(i - 1, j)) += ih2;
            if (i < nx) A(k, idx(i + 1, j)) += ih2;
            if (j > 1) A(k, idx(i, j - 1)) += ih2;
            if (j < nx) A(k, idx(i, j + 1)) += ih2;
            const double c = cfg.convectionCoeff * std::sin(x);  // of -c * v_x
            if (i > 1) A(k, idx(i - 1, j)) += c / (2.0 * h);
            if (i < nx) A(k, idx(i + 1, j)) += -c / (2.0 * h);
            if (cfg.controlDomain.contains(x, y)) B(k, 0) = 1.0;
            if (cfg.obsDomain.contains(x, y)) C(0, k) = cweight;
        }
    }
    return {std::move(A), std::move(B), std::move(C)};
}

}  // namespace gapmor
