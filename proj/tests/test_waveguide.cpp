#include <cmath>

#include <gtest/gtest.h>

#include "qtem/mesh.hpp"
#include "qtem/waveguide.hpp"

using namespace qtem;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST(AnalyticCutoffTest, TwoByOneRectangle) {
    const std::vector<double> te = analytic_cutoffs(2.0, 1.0, ModeType::te, 5);
    ASSERT_EQ(te.size(), 5u);
    EXPECT_NEAR(te[0], kPi / 2.0, 1e-13);
    EXPECT_NEAR(te[1], kPi, 1e-13);
    EXPECT_NEAR(te[2], kPi, 1e-13);
    EXPECT_NEAR(te[3], kPi * std::sqrt(5.0) / 2.0, 1e-13);
    EXPECT_NEAR(te[4], kPi * std::sqrt(2.0), 1e-13);

    const std::vector<double> tm = analytic_cutoffs(2.0, 1.0, ModeType::tm, 5);
    ASSERT_EQ(tm.size(), 5u);
    EXPECT_NEAR(tm[0], kPi * std::sqrt(5.0) / 2.0, 1e-13);
    EXPECT_NEAR(tm[1], kPi * std::sqrt(2.0), 1e-13);
    EXPECT_NEAR(tm[2], kPi * std::sqrt(13.0) / 2.0, 1e-13);
    EXPECT_NEAR(tm[3], kPi * std::sqrt(17.0) / 2.0, 1e-13);
    EXPECT_NEAR(tm[4], kPi * std::sqrt(5.0), 1e-13);
}

TEST(AnalyticCutoffTest, RejectsNonPositiveSides) {
    EXPECT_THROW(analytic_cutoffs(0.0, 1.0, ModeType::te, 3),
                 InvalidDimensions);
    EXPECT_THROW(analytic_cutoffs(1.0, -2.0, ModeType::tm, 3),
                 InvalidDimensions);
}

TEST(WaveguideTest, UnitSquareTmFundamental) {
    const Mesh mesh = gen_rect_mesh(1.0, 1.0, 4, 4);
    const CutoffResult res = waveguide_cutoffs(mesh, ModeType::tm, 3);
    ASSERT_EQ(res.kc.size(), 3u);
    EXPECT_NEAR(res.lambda[0], 2.0 * kPi * kPi, 0.01 * 2.0 * kPi * kPi);
    EXPECT_NEAR(res.kc[0], kPi * std::sqrt(2.0), 0.005 * kPi * std::sqrt(2.0));
    for (double r : res.residuals) EXPECT_LT(r, 1e-10);
}

TEST(WaveguideTest, UnitSquareTeSkipsConstantSolution) {
    const Mesh mesh = gen_rect_mesh(1.0, 1.0, 4, 4);
    const CutoffResult res = waveguide_cutoffs(mesh, ModeType::te, 2);
    ASSERT_EQ(res.kc.size(), 2u);
    // lowest te cutoff is pi, nothing near zero survives the filter
    EXPECT_NEAR(res.kc[0], kPi, 0.01 * kPi);
    EXPECT_NEAR(res.kc[1], kPi, 0.01 * kPi);
    EXPECT_GT(res.lambda[0], 1.0);
}

TEST(WaveguideTest, DegeneratePairConvergesToSharedCutoff) {
    // the second and third modes of the unit square share the analytic
    // eigenvalue; their discrete values split only by discretization error,
    // which lands them on opposite sides of the shared limit
    const Mesh mesh = gen_rect_mesh(1.0, 1.0, 8, 8);
    const CutoffResult res = waveguide_cutoffs(mesh, ModeType::tm, 3);
    ASSERT_EQ(res.lambda.size(), 3u);
    const double exact = 5.0 * kPi * kPi;
    EXPECT_NEAR(res.lambda[1], exact, 5e-3 * exact);
    EXPECT_NEAR(res.lambda[2], exact, 5e-3 * exact);
    EXPECT_LT(std::abs(res.lambda[1] - res.lambda[2]), 5e-3 * exact);
}

TEST(WaveguideTest, ThrowsWhenEveryUnknownIsEliminated) {
    Mesh mesh;
    mesh.nodes = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0},
                  {0.5, 0.0}, {0.5, 0.5}, {0.0, 0.5}};
    mesh.elements.push_back({0, 1, 2, 3, 4, 5});
    mesh.boundary = {0, 1, 2, 3, 4, 5};
    validate_mesh(mesh);
    EXPECT_THROW(waveguide_cutoffs(mesh, ModeType::tm, 1), InvalidDimensions);
}

TEST(ConvergenceTest, ErrorDropsAtFourthOrderInEigenvalue) {
    const ConvergenceStudy st = convergence_study(ModeType::tm, 2, 2);
    EXPECT_NEAR(st.exact_lambda, 2.0 * kPi * kPi, 1e-12);
    ASSERT_EQ(st.levels.size(), 2u);
    ASSERT_EQ(st.orders.size(), 1u);
    EXPECT_EQ(st.levels[0].cells, 2);
    EXPECT_EQ(st.levels[1].cells, 4);
    EXPECT_LT(st.levels[1].rel_err, st.levels[0].rel_err);
    EXPECT_GT(st.orders[0], 2.5);
}

TEST(ConvergenceTest, CoarsestLevelReproducesDirectCutoffSolve) {
    const ConvergenceStudy st = convergence_study(ModeType::tm, 1, 4);
    const Mesh mesh = gen_rect_mesh(1.0, 1.0, 4, 4);
    const CutoffResult res = waveguide_cutoffs(mesh, ModeType::tm, 1);
    ASSERT_EQ(st.levels.size(), 1u);
    ASSERT_EQ(res.lambda.size(), 1u);
    EXPECT_EQ(st.levels[0].lambda1, res.lambda[0]);
    EXPECT_EQ(st.levels[0].n_dofs, res.n_dofs);
}

TEST(ConvergenceTest, RejectsBadArguments) {
    EXPECT_THROW(convergence_study(ModeType::tm, 0), InvalidDimensions);
    EXPECT_THROW(convergence_study(ModeType::te, 2, 0), InvalidDimensions);
}
