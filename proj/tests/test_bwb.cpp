#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "flopcalc/bwb.hpp"
#include "flopcalc/errors.hpp"
#include "support.hpp"

namespace flopcalc::bwb {
namespace {

using flopcalc::testing::table_of;

// Every non-increasing lambda of length n with entries in [lo, hi].
std::vector<std::vector<int>> lambdas(int n, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int upper) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = upper; v >= lo; --v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, hi);
    return out;
}

TEST(LeviWeight, RejectsIncreasingLambda) {
    EXPECT_THROW(LeviWeight({0, 1}, 0), InvalidArgument);
    EXPECT_THROW(LeviWeight({}, 0), InvalidArgument);
    EXPECT_NO_THROW(LeviWeight({3, 3, -2}, 7));
}

TEST(LeviWeight, EqualityIgnoresOverallShift) {
    // Shifting every entry of alpha by one is the same bundle.
    EXPECT_EQ(LeviWeight({1, 1}, 1), LeviWeight({0, 0}, 0));
    EXPECT_NE(LeviWeight({1, 0}, -1), LeviWeight({1, 0}, 0));
    EXPECT_FALSE(LeviWeight({1, 1}, 1).same_representation(LeviWeight({0, 0}, 0)));
}

TEST(ParseWeight, AcceptsLiteral) {
    EXPECT_TRUE(parse_weight("1,0|-1").same_representation(LeviWeight({1, 0}, -1)));
    EXPECT_TRUE(parse_weight(" 0 , 0 , -1 | 1 ").same_representation(LeviWeight({0, 0, -1}, 1)));
}

TEST(ParseWeight, DiagnosticNamesBadToken) {
    for (const char* bad : {"1,0", "1,a|0", "0,1|0", "|3", "1,0|x", "1,,0|0"}) {
        try {
            parse_weight(bad);
            ADD_FAILURE() << bad;
        } catch (const InvalidArgument& e) {
            EXPECT_FALSE(std::string(e.what()).empty());
        }
    }
    try {
        parse_weight("1,a|0");
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos) << e.what();
    }
}

TEST(Bott, StructureSheaf) { EXPECT_EQ(bott_cohomology(LeviWeight({0, 0}, 0)), (CohomologyTable{{0, 1}})); }

TEST(Bott, PositiveTwistsCountMonomials) {
    for (int k = 0; k <= 10; ++k) {
        EXPECT_EQ(bott_cohomology(LeviWeight({0, 0}, -k)), (CohomologyTable{{0, binomial(2 + k, 2)}})) << k;
    }
}

TEST(Bott, VectorFieldsOnPlane) {
    const auto h = bott_cohomology(LeviWeight({1, 0}, -1));
    EXPECT_EQ(h, (CohomologyTable{{0, 8}}));
    EXPECT_EQ(h, table_of(cech::tangent(2, 0)));
}

TEST(Bott, OneFormsOnThreeSpace) {
    EXPECT_EQ(bott_cohomology(LeviWeight({0, 0, -1}, 1)), (CohomologyTable{{1, 1}}));
}

TEST(Bott, LargeTwistsStayExact) {
    EXPECT_EQ(bott_cohomology(line_bundle(4, 200)), (CohomologyTable{{0, binomial(204, 4)}}));
    const Integer big = binomial(1000005, 5);
    EXPECT_GT(big, Integer(std::numeric_limits<std::uint64_t>::max()));
    EXPECT_EQ(bott_cohomology(line_bundle(5, 1000000)), (CohomologyTable{{0, big}}));
}

TEST(WeylDimension, Examples) {
    EXPECT_EQ(weyl_dimension({1, 0, 0}), Integer(3));
    EXPECT_EQ(weyl_dimension({1, 0, -1}), Integer(8));
}

TEST(CohomologySum, Examples) {
    EXPECT_TRUE(cohomology_sum(HomogeneousBundle(2)).empty());
    EXPECT_EQ(cohomology_sum(HomogeneousBundle(2, {LeviWeight({0, 0}, 0), LeviWeight({0, 0}, 0)})),
              (CohomologyTable{{0, 2}}));
    const auto b = twist(sym_power_decompose(1, 2), -1);
    EXPECT_EQ(b, HomogeneousBundle(2, {line_bundle(2, -1), twist(tangent_bundle(2), -1)}));
    EXPECT_EQ(cohomology_sum(b), (CohomologyTable{{0, 3}}));
}

TEST(HomogeneousBundle, RejectsMixedRanks) { EXPECT_THROW(HomogeneousBundle(2).add(line_bundle(3, 0)), InvalidArgument); }

TEST(Twist, Examples) {
    EXPECT_TRUE(twist(line_bundle(2, 0), 5).same_representation(LeviWeight({0, 0}, -5)));
    EXPECT_TRUE(twist(tangent_bundle(2), -3).same_representation(LeviWeight({1, 0}, 2)));
    const LeviWeight w({2, -1, -1}, 4);
    EXPECT_TRUE(twist(twist(w, 7), -7).same_representation(w));
}

TEST(SerreDual, Examples) {
    EXPECT_TRUE(serre_dual(line_bundle(2, 0)).same_representation(LeviWeight({0, 0}, 3)));
    const LeviWeight w({3, 1, -2}, -4);
    EXPECT_TRUE(serre_dual(serre_dual(w)).same_representation(w));
}

TEST(SerreDual, ReflectsTablesSweep) {
    int cases = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& lambda : lambdas(n, -4, 4)) {
            for (int t = -4; t <= 4; ++t) {
                const LeviWeight w(lambda, t);
                EXPECT_EQ(bott_cohomology(serre_dual(w)), bott_cohomology(w).reflected(n)) << w;
                ++cases;
            }
        }
    }
    EXPECT_GT(cases, 1000);
}

TEST(Bott, AtMostOneNonzeroDegree) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& lambda : lambdas(n, -3, 3)) {
            for (int t = -6; t <= 6; ++t) {
                EXPECT_LE(bott_cohomology(LeviWeight(lambda, t)).dims().size(), 1u);
            }
        }
    }
}

TEST(Bott, EulerSequenceCharacteristic) {
    for (int n = 1; n <= 4; ++n) {
        for (int m = -n - 3; m <= n + 3; ++m) {
            const Integer lhs = bott_cohomology(twist(tangent_bundle(n), m)).euler_characteristic();
            const Integer rhs = Integer(n + 1) * bott_cohomology(line_bundle(n, m + 1)).euler_characteristic() -
                                bott_cohomology(line_bundle(n, m)).euler_characteristic();
            EXPECT_EQ(lhs, rhs) << "n=" << n << " m=" << m;
        }
    }
}

TEST(Bott, HodgeNumbersOfProjectiveSpace) {
    for (int n = 1; n <= 6; ++n) {
        for (int q = 0; q <= n; ++q) {
            EXPECT_EQ(bott_cohomology(omega(q, n)), (CohomologyTable{{q, 1}})) << "n=" << n << " q=" << q;
        }
    }
}

TEST(Bott, AgreesWithCechOracle) {
    for (int n = 1; n <= 2; ++n) {
        for (int k = -5; k <= 5; ++k) {
            EXPECT_EQ(bott_cohomology(line_bundle(n, k)), table_of(cech::line(n, k))) << n << " " << k;
            EXPECT_EQ(bott_cohomology(twist(tangent_bundle(n), k)), table_of(cech::tangent(n, k))) << n << " " << k;
            for (int p = 0; p <= n; ++p) {
                EXPECT_EQ(bott_cohomology(twist(omega(p, n), k)), table_of(cech::forms(p, n, k)))
                    << "p=" << p << " n=" << n << " k=" << k;
            }
        }
    }
}

TEST(SymPower, Examples) {
    EXPECT_EQ(sym_power_decompose(0, 3), HomogeneousBundle(3, {line_bundle(3, 0)}));
    EXPECT_EQ(sym_power_decompose(2, 2),
              HomogeneousBundle(2, {LeviWeight({0, 0}, 0), LeviWeight({1, 0}, -1), LeviWeight({2, 0}, -2)}));
    EXPECT_THROW(sym_power_decompose(-1, 2), InvalidArgument);
}

TEST(SymPower, RankIsBinomial) {
    for (int n = 1; n <= 5; ++n) {
        for (int l = 0; l <= 7; ++l) {
            EXPECT_EQ(sym_power_decompose(l, n).rank(), binomial(l + n, n));
        }
    }
}

TEST(ExteriorPower, Examples) {
    EXPECT_EQ(exterior_power_theta(0, 3), line_bundle(3, 0));
    EXPECT_EQ(exterior_power_theta(1, 3), tangent_bundle(3));
    EXPECT_EQ(exterior_power_theta(1, 3).rank(), Integer(3));
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(exterior_power_theta(n, n), line_bundle(n, n + 1));
        for (int p = 0; p <= n; ++p) {
            EXPECT_EQ(exterior_power_theta(p, n).rank(), binomial(n, p));
        }
    }
    EXPECT_THROW(exterior_power_theta(-1, 2), RangeError);
    EXPECT_THROW(exterior_power_theta(3, 2), RangeError);
}

TEST(Tensor, TangentTimesCotangent) {
    const auto b = tensor(tangent_bundle(2), omega(1, 2));
    EXPECT_EQ(b, HomogeneousBundle(2, {line_bundle(2, 0), LeviWeight({1, -1}, 0)}));
    EXPECT_EQ(cohomology_sum(b), (CohomologyTable{{0, 1}}));
    // 0 -> T (x) Omega -> T(-1)^3 -> T -> 0 on the plane.
    const auto chi = [](const cech::Dims& d) {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            c += (i % 2 == 0 ? 1 : -1) * d[i];
        }
        return c;
    };
    EXPECT_EQ(cohomology_sum(b).euler_characteristic(), Integer(3 * chi(cech::tangent(2, -1)) - chi(cech::tangent(2, 0))));
}

TEST(Tensor, LinesAddDegrees) {
    EXPECT_EQ(tensor(line_bundle(3, 2), line_bundle(3, -5)), HomogeneousBundle(3, {line_bundle(3, -3)}));
}

TEST(Tensor, RanksMultiplyAndOrderDoesNotMatter) {
    std::mt19937 rng(20261014);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 3;
        auto random_weight = [&] {
            std::vector<int> lambda(n);
            for (auto& x : lambda) {
                x = entry(rng);
            }
            std::sort(lambda.rbegin(), lambda.rend());
            return LeviWeight(lambda, entry(rng));
        };
        const LeviWeight a = random_weight();
        const LeviWeight b = random_weight();
        const auto ab = tensor(a, b);
        EXPECT_EQ(ab.rank(), a.rank() * b.rank()) << a << " (x) " << b;
        EXPECT_EQ(ab, tensor(b, a)) << a << " (x) " << b;
    }
}

TEST(GlWeights, CountMatchesDimension) {
    for (const auto& lambda : lambdas(3, -1, 2)) {
        EXPECT_EQ(Integer(gl_weights(lambda).size()), LeviWeight(lambda, 0).rank());
    }
}

TEST(Dual, ReversesAndNegates) {
    EXPECT_TRUE(dual(LeviWeight({2, 1, 0}, -3)).same_representation(LeviWeight({0, -1, -2}, 3)));
    EXPECT_EQ(dual(tangent_bundle(2)), omega(1, 2));
}

}  // namespace
}  // namespace flopcalc::bwb
