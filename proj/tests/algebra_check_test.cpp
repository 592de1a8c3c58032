#include "wigner/algebra_check.hpp"

#include <gtest/gtest.h>

namespace wigner {
namespace {

TEST(AlgebraCheck, StandardGeneratorsPass)
{
    const AlgebraReport report = run_algebra_check();
    EXPECT_GE(report.relations.size(), 18u);
    EXPECT_TRUE(report.passed());
    for (const auto& r : report.relations) {
        EXPECT_LE(r.residual, r.tolerance) << r.relation;
    }
}

TEST(AlgebraCheck, ReportNamesTheIsomorphism)
{
    const AlgebraReport report = run_algebra_check();
    bool found = false;
    for (const auto& r : report.relations) {
        found = found || r.relation == "f{J3,N1,N2} = f{L,Px,Py}";
    }
    EXPECT_TRUE(found);
}

TEST(AlgebraCheck, CorruptedGeneratorFails)
{
    GeneratorSet broken = standard_generators();
    broken.rotation[0](0, 1) += 1e-6;
    const AlgebraReport report = run_algebra_check(broken);
    EXPECT_FALSE(report.passed());
    bool jj_failed = false;
    for (const auto& r : report.relations) {
        if (r.relation == "[J1,J2] = iJ3") {
            jj_failed = !r.passed();
        }
    }
    EXPECT_TRUE(jj_failed);
}

TEST(AlgebraCheck, SignFlippedBoostStillCloses)
{
    // K -> -K leaves every bracket intact but moves the massless little
    // group to the -z light cone, which the invariance checks catch.
    GeneratorSet flipped = standard_generators();
    for (auto& k : flipped.boost) {
        k = -k;
    }
    for (const auto& r : lorentz_relations(flipped)) {
        if (r.relation.starts_with("[J") || r.relation.starts_with("[K")) {
            EXPECT_TRUE(r.passed()) << r.relation;
        }
    }
    EXPECT_FALSE(run_algebra_check(flipped).passed());
}

}  // namespace
}  // namespace wigner
