// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "gapmor/linalg/eig.hpp"
#include "gapmor/linalg/lyapunov.hpp"
#include "gapmor/linalg/riccati.hpp"
#include "gapmor/linalg/schur.hpp"
#include "testutil.hpp"

using namespace gapmor;
using testutil::random_matrix;
using testutil::random_stable_matrix;

TEST_CASE("solve_linear basics") {
    const Matrix I3 = Matrix::Identity(3, 3);
    const Matrix M = random_matrix(3, 2, 1);
    REQUIRE((solve_linear<double>(I3, M) - M).norm() == 0.0);

    Matrix A(2, 2);
    A << 2, 0, 0, 4;
    Matrix rhs(2, 1);
    rhs << 1, 1;
    const Matrix X = solve_linear<double>(A, rhs);
    REQUIRE(X(0, 0) == Catch::Approx(0.5));
    REQUIRE(X(1, 0) == Catch::Approx(0.25));

    SECTION("residual on seeded 8x8") {
        const Matrix A8 = random_matrix(8, 8, 42);
        const Matrix B8 = random_matrix(8, 3, 43);
        const Matrix X8 = solve_linear<double>(A8, B8);
        REQUIRE((A8 * X8 - B8).norm() < 1e-12 * A8.norm() * X8.norm());
    }
    SECTION("singular matrix rejected") {
        Matrix S(2, 2);
        S << 1, 2, 2, 4;
        REQUIRE_THROWS_MATCHES(solve_linear<double>(S, rhs), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) {
                                   return e.code() == ErrorCode::SingularMatrix;
                               }));
    }
}

TEST_CASE("eig diagonal and rotation") {
    Matrix D(2, 2);
    D << -1, 0, 0, -2;
    const auto ed = eig(D);
    REQUIRE(ed.eigenvalues(0).real() == Catch::Approx(-1.0).margin(1e-14));
    REQUIRE(ed.eigenvalues(1).real() == Catch::Approx(-2.0).margin(1e-14));
    REQUIRE((ed.leftVectors.transpose() * ed.rightVectors - ComplexMatrix::Identity(2, 2))
                .norm() < 1e-13);

    Matrix R(2, 2);
    R << 0, 1, -1, 0;
    const auto er = eig(R);
    REQUIRE(er.eigenvalues(0).imag() == Catch::Approx(1.0));
    REQUIRE(er.eigenvalues(1) == std::conj(er.eigenvalues(0)));
}

TEST_CASE("eig left eigenvector residual, seeded 6x6") {
    const Matrix A = random_matrix(6, 6, 7);
    const auto ed = eig(A);
    const ComplexMatrix Ac = A.cast<Complex>();
    double worst = 0.0;
    for (Index i = 0; i < 6; ++i) {
        const ComplexVector resid = ed.leftVectors.col(i).transpose() * Ac -
                                    ed.eigenvalues(i) * ed.leftVectors.col(i).transpose();
        worst = std::max(worst, resid.norm() / ed.leftVectors.col(i).norm());
    }
    REQUIRE(worst < 1e-10 * A.norm());
    REQUIRE((ed.leftVectors.transpose() * ed.rightVectors - ComplexMatrix::Identity(6, 6))
                .norm() < 1e-12);
}

TEST_CASE("eig refuses defective matrices") {
    Matrix J(2, 2);
    J << 1, 1, 0, 1;  // Jordan block
    REQUIRE_THROWS_MATCHES(eig(J), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::DefectiveMatrix;
                           }));
}

TEST_CASE("real_schur") {
    SECTION("upper triangular input is a fixed point") {
        Matrix A(3, 3);
        A << 1, 2, 3, 0, 4, 5, 0, 0, 6;
        const auto [Q, T] = real_schur(A);
        REQUIRE((Q - Matrix::Identity(3, 3)).norm() < 1e-12);
        REQUIRE((T - A).norm() < 1e-12);
    }
    SECTION("symmetric input diagonalizes") {
        Matrix A = random_matrix(5, 5, 11);
        A = (A + A.transpose()).eval();
        const auto [Q, T] = real_schur(A);
        Matrix offdiag = T;
        offdiag.diagonal().setZero();
        REQUIRE(offdiag.norm() < 1e-12 * A.norm());
    }
    SECTION("seeded 10x10 residuals") {
        const Matrix A = random_matrix(10, 10, 12);
        const auto [Q, T] = real_schur(A);
        REQUIRE((Q.transpose() * A * Q - T).norm() < 1e-12 * A.norm());
        REQUIRE((Q.transpose() * Q - Matrix::Identity(10, 10)).norm() < 1e-13);
    }
}

TEST_CASE("schur reordering moves stable eigenvalues first") {
    const Matrix A = random_matrix(9, 9, 100);
    auto [Q, T] = real_schur(A);
    const ComplexVector before = detail::quasi_triangular_eigenvalues(T);
    const Index k = detail::reorder_schur(T, Q, [](Complex l) { return l.real() < 0.0; });
    REQUIRE((Q.transpose() * A * Q - T).norm() < 1e-11 * A.norm());
    REQUIRE((Q.transpose() * Q - Matrix::Identity(9, 9)).norm() < 1e-12);
    const ComplexVector after = detail::quasi_triangular_eigenvalues(T);
    Index nStable = 0;
    for (Index i = 0; i < 9; ++i)
        if (before(i).real() < 0.0) ++nStable;
    REQUIRE(k == nStable);
    for (Index i = 0; i < k; ++i) REQUIRE(after(i).real() < 0.0);
    for (Index i = k; i < 9; ++i) REQUIRE(after(i).real() >= 0.0);
    // spectrum preserved
    auto sorted = [](ComplexVector v) {
        std::sort(v.data(), v.data() + v.size(), [](Complex a, Complex b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        return v;
    };
    REQUIRE((sorted(before) - sorted(after)).norm() < 1e-10 * A.norm());
}

TEST_CASE("solve_lyapunov") {
    SECTION("scalar") {
        Matrix A(1, 1), Q(1, 1);
        A << -1;
        Q << 1;
        REQUIRE(solve_lyapunov(A, Q)(0, 0) == Catch::Approx(0.5));
    }
    SECTION("zero rhs") {
        const Matrix A = random_stable_matrix(5, 21);
        REQUIRE(solve_lyapunov(A, Matrix::Zero(5, 5)).norm() == 0.0);
    }
    SECTION("seeded stable 7x7 residual") {
        const Matrix A = random_stable_matrix(7, 22);
        Matrix Q = random_matrix(7, 7, 23);
        Q = (Q + Q.transpose()).eval();
        const Matrix X = solve_lyapunov(A, Q);
        REQUIRE((A * X + X * A.transpose() + Q).norm() <
                1e-11 * (A.norm() * X.norm() + Q.norm()));
    }
    SECTION("matches solve_sylvester(A, A^T, Q)") {
        const Matrix A = random_stable_matrix(6, 24);
        Matrix Q = random_matrix(6, 6, 25);
        Q = (Q + Q.transpose()).eval();
        const Matrix X1 = solve_lyapunov(A, Q);
        const Matrix X2 = solve_sylvester(A, A.transpose(), Q);
        REQUIRE((X1 - X2).norm() < 1e-11 * X1.norm());
    }
    SECTION("spectrum collision rejected") {
        Matrix A(2, 2);
        A << 1, 0, 0, -1;  // 1 + (-1) = 0
        REQUIRE_THROWS_MATCHES(solve_lyapunov(A, Matrix::Identity(2, 2)), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) {
                                   return e.code() == ErrorCode::SpectrumCollision;
                               }));
    }
}

TEST_CASE("solve_sylvester") {
    SECTION("scalar") {
        Matrix A(1, 1), B(1, 1), C(1, 1);
        A << 1;
        B << 1;
        C << -2;
        REQUIRE(solve_sylvester(A, B, C)(0, 0) == Catch::Approx(1.0));
    }
    SECTION("zero rhs") {
        const Matrix A = random_stable_matrix(4, 31);
        const Matrix B = random_stable_matrix(3, 32);
        REQUIRE(solve_sylvester(A, B, Matrix::Zero(4, 3)).norm() == 0.0);
    }
    SECTION("seeded residual, rectangular") {
        const Matrix A = random_stable_matrix(6, 33);
        const Matrix B = random_stable_matrix(4, 34);
        const Matrix C = random_matrix(6, 4, 35);
        const Matrix X = solve_sylvester(A, B, C);
        REQUIRE((A * X + X * B + C).norm() <
                1e-11 * ((A.norm() + B.norm()) * X.norm() + C.norm()));
    }
}

namespace {

double filter_relres(const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& P) {
    const Matrix R = A * P + P * A.transpose() -
                     P * C.transpose() * C * P + B * B.transpose();
    const double scale = 2 * A.norm() * P.norm() +
                         (P * C.transpose() * C * P).norm() + (B * B.transpose()).norm();
    return R.norm() / scale;
}

}  // namespace

TEST_CASE("solve_filter_care scalar cases") {
    Matrix A(1, 1), B(1, 1), C(1, 1);
    A << 1;
    B << 1;
    C << 1;
    const Matrix P = solve_filter_care(A, B, C);
    REQUIRE(P(0, 0) == Catch::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
    REQUIRE(spectral_abscissa(A - P * C.transpose() * C) ==
            Catch::Approx(-std::sqrt(2.0)).epsilon(1e-12));

    A << -1;
    B << 0;
    C << 1;
    REQUIRE(solve_filter_care(A, B, C)(0, 0) == Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("solve_control_care scalar and duality") {
    Matrix A(1, 1), B(1, 1), C(1, 1);
    A << 1;
    B << 1;
    C << 1;
    REQUIRE(solve_control_care(A, B, C)(0, 0) ==
            Catch::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));

    Matrix As = random_stable_matrix(4, 41);
    Matrix Bs = random_matrix(4, 2, 42);
    REQUIRE(solve_control_care(As, Bs, Matrix::Zero(1, 4)).norm() < 1e-12);

    const Matrix A6 = random_matrix(6, 6, 43);
    const Matrix B6 = random_matrix(6, 2, 44);
    const Matrix C6 = random_matrix(2, 6, 45);
    const Matrix Q1 = solve_control_care(A6, B6, C6);
    const Matrix Q2 = solve_filter_care(A6.transpose(), C6.transpose(), B6.transpose());
    REQUIRE((Q1 - Q2).norm() <= 1e-12 * std::max(1.0, Q1.norm()));
}

TEST_CASE("filter care on seeded instances: residual, stability, psd") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Matrix A = random_matrix(7, 7, 1000 + seed);
        const Matrix B = random_matrix(7, 2, 2000 + seed);
        const Matrix C = random_matrix(2, 7, 3000 + seed);
        const Matrix P = solve_filter_care(A, B, C);
        CAPTURE(seed);
        REQUIRE(filter_relres(A, B, C, P) < 1e-10);
        REQUIRE(spectral_abscissa(A - P * C.transpose() * C) < 0.0);
        Eigen::SelfAdjointEigenSolver<Matrix> es(P);
        REQUIRE(es.eigenvalues().minCoeff() >= -1e-10 * P.norm());
    }
}
