#include <gtest/gtest.h>

#include "flopcalc/errors.hpp"
#include "flopcalc/pbundle.hpp"
#include "support.hpp"

namespace flopcalc::pbundle {
namespace {

using flopcalc::testing::table_of;

XLineBundle on_x(int n, int j, int k) { return {ModelVariety(n, Side::X), j, k}; }

TEST(ModelVariety, RequiresNAtLeastTwo) {
    EXPECT_THROW(ModelVariety(1), InvalidArgument);
    EXPECT_THROW(ModelVariety(0, Side::XPlus), InvalidArgument);
    EXPECT_EQ(ModelVariety(3).dimension(), 6);
    EXPECT_EQ(ModelVariety(3).other_side(), ModelVariety(3, Side::XPlus));
}

TEST(XLineBundle, Arithmetic) {
    EXPECT_EQ(on_x(2, 1, -1) + on_x(2, 2, 3), on_x(2, 3, 2));
    EXPECT_EQ(on_x(2, 1, -1) - on_x(2, 2, 3), on_x(2, -1, -4));
    EXPECT_EQ(-on_x(2, 1, -1), on_x(2, -1, 1));
    EXPECT_THROW(on_x(2, 0, 0) + on_x(3, 0, 0), VarietyMismatch);
    EXPECT_THROW((on_x(2, 0, 0) - XLineBundle(ModelVariety(2, Side::XPlus), 0, 0)), VarietyMismatch);
    EXPECT_EQ(canonical_class(ModelVariety(4)), on_x(4, -5, 0));
}

TEST(Pushforward, Branches) {
    const auto direct = pushforward(on_x(2, 1, -1));
    ASSERT_TRUE(std::holds_alternative<Direct>(direct));
    EXPECT_EQ(cohomology_sum(std::get<Direct>(direct).bundle), (CohomologyTable{{0, 3}}));
    EXPECT_EQ(std::get<Direct>(direct).twist, -1);

    for (int m = -7; m <= 7; ++m) {
        EXPECT_TRUE(std::holds_alternative<Zero>(pushforward(on_x(2, -1, m))));
    }

    const auto dual = pushforward(on_x(2, -3, 0));
    ASSERT_TRUE(std::holds_alternative<Dual>(dual));
    EXPECT_EQ(std::get<Dual>(dual).dual, on_x(2, 0, 0));
    EXPECT_EQ(std::get<Dual>(dual).shift, 4);
}

TEST(CohomologyX, Examples) {
    EXPECT_EQ(cohomology_X(on_x(2, 0, 0)), (CohomologyTable{{0, 1}}));
    EXPECT_EQ(cohomology_X(on_x(3, 1, -1)), (CohomologyTable{{0, 4}}));
    EXPECT_EQ(cohomology_X(on_x(2, -3, 0)), (CohomologyTable{{4, 1}}));
    EXPECT_TRUE(cohomology_X(on_x(2, -1, 7)).empty());
}

TEST(CohomologyX, MatchesCechOracleOnTheBase) {
    // j = 0 pushes forward to O(k), j = 1 to O(k) + T(k).
    for (int k = -5; k <= 5; ++k) {
        EXPECT_EQ(cohomology_X(on_x(2, 0, k)), table_of(cech::line(2, k))) << k;
        CohomologyTable expected = table_of(cech::line(2, k)) + table_of(cech::tangent(2, k));
        EXPECT_EQ(cohomology_X(on_x(2, 1, k)), expected) << k;
    }
}

TEST(CohomologyX, LowerFamilyVanishes) {
    // No higher cohomology for (l, m) and (l + m, -m) over the box.
    for (int n = 2; n <= 4; ++n) {
        for (int l = -n; l <= n; ++l) {
            for (int m = -n; m <= n; ++m) {
                EXPECT_TRUE(cohomology_X(on_x(n, l, m)).concentrated_in_degree_zero()) << n << " " << l << " " << m;
                EXPECT_TRUE(cohomology_X(on_x(n, l + m, -m)).concentrated_in_degree_zero())
                    << n << " " << l + m << " " << -m;
            }
        }
    }
}

TEST(CohomologyX, SerreDualityReflects) {
    for (int n = 2; n <= 4; ++n) {
        const ModelVariety v(n);
        const XLineBundle K = canonical_class(v);
        for (int j = -2 * n - 3; j <= n + 3; ++j) {
            for (int k = -n - 4; k <= n + 4; ++k) {
                const XLineBundle L(v, j, k);
                EXPECT_EQ(cohomology_X(L).reflected(2 * n), cohomology_X(K - L)) << L;
            }
        }
    }
}

TEST(CohomologyX, RangeVanishing) {
    for (int n = 2; n <= 5; ++n) {
        for (int j = -n; j <= -1; ++j) {
            for (int m = -10; m <= 10; ++m) {
                EXPECT_TRUE(cohomology_X(on_x(n, j, m)).empty());
            }
        }
    }
}

TEST(CohomologyX, SideIndependent) {
    for (int n = 2; n <= 3; ++n) {
        for (int j = -6; j <= 4; ++j) {
            for (int k = -4; k <= 4; ++k) {
                EXPECT_EQ(cohomology_X(on_x(n, j, k)), cohomology_X(XLineBundle(ModelVariety(n, Side::XPlus), j, k)));
            }
        }
    }
}

TEST(TwistedBundle, AgreesWithLineBundlePath) {
    for (int n = 2; n <= 3; ++n) {
        for (int j = -2 * n - 2; j <= 3; ++j) {
            for (int k = -4; k <= 4; ++k) {
                const XLineBundle L = on_x(n, j, k);
                EXPECT_EQ(cohomology(TwistedBundle(L)), cohomology_X(L)) << L;
                EXPECT_EQ(euler_char(TwistedBundle(L)), euler_char(L)) << L;
            }
        }
    }
}

TEST(TwistedBundle, RestrictsToBaseBundle) {
    const ModelVariety v(2, Side::XPlus);
    const TwistedBundle E(v, 3, bwb::HomogeneousBundle(2, {bwb::tangent_bundle(2)}));
    EXPECT_EQ(restrict_to_section(E), bwb::HomogeneousBundle(2, {bwb::tangent_bundle(2)}));
    EXPECT_THROW(TwistedBundle(v, 0, bwb::HomogeneousBundle(3)), InvalidArgument);
}

TEST(HomDims, Examples) {
    const XLineBundle L = on_x(3, 2, -1);
    EXPECT_EQ(hom_dims(L, L), (CohomologyTable{{0, 1}}));
    const auto h = hom_dims(on_x(2, 0, 1), on_x(2, 0, 0));
    EXPECT_TRUE(h.empty());
    EXPECT_EQ(h, table_of(cech::line(2, -1)));
    EXPECT_THROW(hom_dims(on_x(2, 0, 0), XLineBundle(ModelVariety(2, Side::XPlus), 0, 0)), VarietyMismatch);
}

TEST(EulerChar, Examples) {
    EXPECT_EQ(euler_char(on_x(2, 0, 0)), Integer(1));
    for (int m = -5; m <= 5; ++m) {
        EXPECT_EQ(euler_char(on_x(2, -1, m)), Integer(0));
    }
    EXPECT_EQ(euler_char(on_x(2, -3, 0)), Integer(1));
    EXPECT_EQ(euler_char(on_x(3, -4, 0)), Integer(1));
}

}  // namespace
}  // namespace flopcalc::pbundle
