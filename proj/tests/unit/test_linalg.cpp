#include <heatcouple/errors.hpp>
#include <heatcouple/linalg.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace heatcouple;
using heatcouple::testing::dense_matvec;
using heatcouple::testing::dense_solve;
using heatcouple::testing::max_abs_diff;
using heatcouple::testing::random_dominant_system;
using heatcouple::testing::random_vector;
using heatcouple::testing::to_dense;

namespace {

TridiagonalSystem identity(std::size_t m) {
    return TridiagonalSystem(std::vector<double>(m - 1, 0.0), std::vector<double>(m, 1.0),
                             std::vector<double>(m - 1, 0.0));
}

}  // namespace

TEST(VectorNorm, ThreeFourFive) {
    const std::vector<double> v{3.0, -4.0};
    EXPECT_EQ(vector_norm(v, NormKind::One), 7.0);
    EXPECT_EQ(vector_norm(v, NormKind::Two), 5.0);
    EXPECT_EQ(vector_norm(v, NormKind::Infinity), 4.0);
}

TEST(VectorNorm, ZeroEmptyAndSingleton) {
    const std::vector<double> zero(4, 0.0), empty, single{-2.5};
    for (NormKind k : {NormKind::One, NormKind::Two, NormKind::Infinity}) {
        EXPECT_EQ(vector_norm(zero, k), 0.0);
        EXPECT_EQ(vector_norm(empty, k), 0.0);
        EXPECT_EQ(vector_norm(single, k), 2.5);
    }
}

TEST(VectorNorm, OrderingAndScaling) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> c(-10.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        auto v = random_vector(rng, 1 + i % 40, -5.0, 5.0);
        const double one = vector_norm(v, NormKind::One);
        const double two = vector_norm(v, NormKind::Two);
        const double inf = vector_norm(v, NormKind::Infinity);
        EXPECT_LE(inf, two * (1 + 1e-15));
        EXPECT_LE(two, one * (1 + 1e-15));

        const double s = c(rng);
        std::vector<double> w = v;
        for (double& x : w) x *= s;
        for (NormKind k : {NormKind::One, NormKind::Two, NormKind::Infinity}) {
            const double expect = std::abs(s) * vector_norm(v, k);
            EXPECT_NEAR(vector_norm(w, k), expect, 1e-13 * (1 + expect));
        }
    }
}

TEST(TridiagonalMatvec, IdentityAndRowSums) {
    const std::vector<double> v{1.5, -2.0, 3.0};
    EXPECT_EQ(tridiagonal_matvec(identity(3), v), v);

    const TridiagonalSystem ones({1, 1}, {1, 1, 1}, {1, 1});
    EXPECT_EQ(tridiagonal_matvec(ones, std::vector<double>{1, 1, 1}), (std::vector<double>{2, 3, 2}));
}

TEST(TridiagonalMatvec, MatchesDenseProductExactly) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const std::size_t m = 2 + i % 15;
        const auto sys = random_dominant_system(rng, m);
        const auto v = random_vector(rng, m);
        // Three-term sums evaluated in the same order; the zero terms of the
        // dense product do not change the floating-point result.
        EXPECT_EQ(tridiagonal_matvec(sys, v), dense_matvec(to_dense(sys), v));
    }
}

TEST(ThomasSolve, IdentityReturnsRhs) {
    const std::vector<double> r{4.0, -1.0, 0.5, 2.0};
    EXPECT_EQ(thomas_solve(identity(4), r), r);
}

TEST(ThomasSolve, ConstantSolutionOfSymmetricSystem) {
    const TridiagonalSystem sys({1.0}, {2.0, 2.0}, {1.0});
    const auto x = thomas_solve(sys, std::vector<double>{3.0, 3.0});
    EXPECT_DOUBLE_EQ(x[0], 1.0);
    EXPECT_DOUBLE_EQ(x[1], 1.0);
}

TEST(ThomasSolve, MatchesDenseOracleOnRandomDominantSystems) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const std::size_t m = i == 0 ? 8 : 1 + i % 16;
        const auto sys = random_dominant_system(rng, m);
        const auto rhs = random_vector(rng, m, -3.0, 3.0);
        EXPECT_LE(max_abs_diff(thomas_solve(sys, rhs), dense_solve(to_dense(sys), rhs)), 1e-12);
    }
}

TEST(ThomasSolve, RoundTripResidual) {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        const std::size_t m = 1 + i % 60;
        const auto sys = random_dominant_system(rng, m);
        const auto rhs = random_vector(rng, m, -3.0, 3.0);
        const auto ax = tridiagonal_matvec(sys, thomas_solve(sys, rhs));
        EXPECT_LE(max_abs_diff(ax, rhs), 1e-12 * vector_norm(rhs, NormKind::Infinity));
    }
}

TEST(ThomasSolve, ZeroPivotIsSingular) {
    const TridiagonalSystem sys({1.0}, {0.0, 1.0}, {1.0});
    EXPECT_THROW(thomas_solve(sys, std::vector<double>{1.0, 1.0}), SingularMatrixError);
    const TridiagonalSystem later({1.0}, {1.0, 1.0}, {1.0});  // second pivot 1 - 1*1 = 0
    EXPECT_THROW(thomas_solve(later, std::vector<double>{1.0, 1.0}), SingularMatrixError);
}

TEST(ThomasSolve, RejectsLengthMismatch) {
    EXPECT_THROW(thomas_solve(identity(3), std::vector<double>{1.0}), ValidationError);
    EXPECT_THROW(TridiagonalSystem({1.0, 2.0}, {1.0, 1.0}, {0.0}), ValidationError);
}

TEST(BicgstabSolve, IdentityInOneIteration) {
    const std::vector<double> r{1.0, 2.0, -3.0, 4.0};
    const auto sol = bicgstab_solve(identity(4), r, std::vector<double>(4, 0.0), 1e-12);
    EXPECT_LE(sol.iterations, 1u);
    EXPECT_LE(max_abs_diff(sol.x, r), 1e-12);
}

TEST(BicgstabSolve, ExactInitialGuessTakesZeroIterations) {
    std::mt19937_64 rng(23);
    const auto sys = random_dominant_system(rng, 10);
    const auto x = random_vector(rng, 10);
    const auto rhs = tridiagonal_matvec(sys, x);
    const auto sol = bicgstab_solve(sys, rhs, x, 1e-7);
    EXPECT_EQ(sol.iterations, 0u);
    EXPECT_EQ(sol.x, x);
}

TEST(BicgstabSolve, ZeroRhsUsesAbsoluteResidual) {
    std::mt19937_64 rng(29);
    const auto sys = random_dominant_system(rng, 6);
    const auto sol = bicgstab_solve(sys, std::vector<double>(6, 0.0), random_vector(rng, 6), 1e-10);
    EXPECT_LE(vector_norm(tridiagonal_matvec(sys, sol.x), NormKind::Two), 1e-10);
}

TEST(BicgstabSolve, MeetsRelativeResidualContract) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const std::size_t m = 1 + i % 16;
        const auto sys = random_dominant_system(rng, m);
        const auto rhs = random_vector(rng, m, -3.0, 3.0);
        const auto sol = bicgstab_solve(sys, rhs, std::vector<double>(m, 0.0), 1e-10);
        auto r = tridiagonal_matvec(sys, sol.x);
        for (std::size_t k = 0; k < m; ++k) r[k] = rhs[k] - r[k];
        EXPECT_LE(vector_norm(r, NormKind::Two), 1e-10 * vector_norm(rhs, NormKind::Two));
        EXPECT_LE(max_abs_diff(sol.x, dense_solve(to_dense(sys), rhs)), 1e-9);
    }
}

TEST(BicgstabSolve, ReportsNonConvergence) {
    std::mt19937_64 rng(37);
    const auto sys = random_dominant_system(rng, 40);
    const auto rhs = random_vector(rng, 40);
    EXPECT_THROW(bicgstab_solve(sys, rhs, std::vector<double>(40, 0.0), 1e-14, 1),
                 NonConvergenceError);
}

TEST(BicgstabSolve, ReportsBreakdown) {
    // Skew-symmetric A gives <r, A r> = 0 on the first iteration.
    const TridiagonalSystem skew({-1.0}, {0.0, 0.0}, {1.0});
    EXPECT_THROW(bicgstab_solve(skew, std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 0.0}, 1e-8),
                 BreakdownError);
}
