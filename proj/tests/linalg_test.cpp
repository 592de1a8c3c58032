#include "wigner/linalg.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace wigner {
namespace {

TEST(Expm, ZeroIsIdentity)
{
    EXPECT_EQ(expm(CMatrix4(CMatrix4::Zero())), CMatrix4(CMatrix4::Identity()));
}

TEST(Expm, MatchesSeriesForModerateArguments)
{
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 0.7);
    for (int trial = 0; trial < 50; ++trial) {
        CMatrix4 a;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                a(i, j) = complex(gauss(rng), gauss(rng));
            }
        }
        const CMatrix4 expected = test::exp_series<4>(a, 60);
        EXPECT_LT(max_abs(expm(a) - expected), 1e-12 * std::max(1.0, max_abs(expected)));
    }
}

TEST(Expm, HyperbolicBlockAtLargeArgument)
{
    // exp of [[0, x], [x, 0]] in closed form, well outside the series' comfort zone.
    for (double x : {5.0, 10.0, 20.0}) {
        RMatrix<2> a;
        a << 0, x, x, 0;
        const RMatrix<2> e = expm(a);
        EXPECT_NEAR(e(0, 0) / std::cosh(x), 1.0, 1e-13);
        EXPECT_NEAR(e(0, 1) / std::sinh(x), 1.0, 1e-13);
    }
}

TEST(Expm, InverseIsExpOfNegative)
{
    CMatrix3 a;
    a << 0.3, -1.2, 0.5, 2.0, 0.1, -0.7, 0.4, 0.9, -0.2;
    EXPECT_LT(max_abs(expm(a) * expm(CMatrix3(-a)) - CMatrix3::Identity()), 1e-13);
}

TEST(Commutator, Antisymmetric)
{
    CMatrix3 a = CMatrix3::Random();
    CMatrix3 b = CMatrix3::Random();
    EXPECT_LT(max_abs(commutator(a, b) + commutator(b, a)), 1e-15);
    EXPECT_EQ(max_abs(commutator(a, a)), 0.0);
}

}  // namespace
}  // namespace wigner
