#include "crnkit/lp.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace crnkit;

TEST(LpFeasible, ContradictoryBounds) {
    LinearSystem sys(1);
    sys.set_lower(0, 1);
    sys.set_upper(0, 0);
    EXPECT_FALSE(lp_feasible(sys));
}

TEST(LpFeasible, Segment) {
    LinearSystem sys(2);
    sys.add_equality({1, 1}, 1);
    sys.set_lower(0, 0);
    sys.set_lower(1, 0);
    const auto point = lp_feasible(sys);
    ASSERT_TRUE(point);
    EXPECT_EQ((*point)[0] + (*point)[1], 1);
    EXPECT_GE((*point)[0], 0);
    EXPECT_GE((*point)[1], 0);
}

TEST(LpFeasible, ReversiblePairIsPositiveDependent) {
    LinearSystem sys(2);
    sys.add_equality({-1, 1}, 0);
    sys.add_equality({1, -1}, 0);
    sys.set_lower(0, 1);
    sys.set_lower(1, 1);
    const auto point = lp_feasible(sys);
    ASSERT_TRUE(point);
    EXPECT_TRUE(sys.satisfied_by(*point));
    EXPECT_EQ((*point)[0], (*point)[1]);
}

TEST(LpFeasible, AllZeroConstraintsGiveZeroPoint) {
    LinearSystem sys(3);
    sys.add_equality({0, 0, 0}, 0);
    const auto point = lp_feasible(sys);
    ASSERT_TRUE(point);
    EXPECT_EQ(*point, (RationalVector{0, 0, 0}));
}

TEST(LpFeasible, FreeVariablesAndFixing) {
    LinearSystem sys(2);
    sys.add_equality({1, -1}, -3);
    sys.fix(0, -5);
    const auto point = lp_feasible(sys);
    ASSERT_TRUE(point);
    EXPECT_EQ((*point)[0], -5);
    EXPECT_EQ((*point)[1], -2);
}

TEST(LpFeasible, InconsistentEqualities) {
    LinearSystem sys(2);
    sys.add_equality({1, 1}, 1);
    sys.add_equality({2, 2}, 3);
    EXPECT_FALSE(lp_feasible(sys));
}

TEST(LpProperty, AgreesWithEliminationOracle) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> vars(1, 3);
    std::uniform_int_distribution<std::size_t> rows(0, 2);
    std::uniform_int_distribution<long> small(-2, 2);
    std::uniform_int_distribution<int> bound_kind(0, 3);
    int feasible = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = vars(rng);
        LinearSystem sys(n);
        std::vector<oracle::Constraint> cs;
        const std::size_t m = rows(rng);
        for (std::size_t i = 0; i < m; ++i) {
            RationalVector a(n);
            for (auto& x : a) {
                x = small(rng);
            }
            const Rational b = small(rng);
            sys.add_equality(a, b);
            cs.push_back({a, b, true});
        }
        for (std::size_t j = 0; j < n; ++j) {
            const int kind = bound_kind(rng);
            RationalVector e(n);
            if (kind == 1 || kind == 3) {
                const Rational lo = small(rng);
                sys.set_lower(j, lo);
                e[j] = -1;
                cs.push_back({e, -lo, false});
            }
            if (kind == 2 || kind == 3) {
                const Rational hi = small(rng);
                sys.set_upper(j, hi);
                e[j] = 1;
                cs.push_back({e, hi, false});
            }
        }
        const auto point = lp_feasible(sys);
        EXPECT_EQ(point.has_value(), oracle::fm_feasible(cs, n)) << "trial " << trial;
        if (point) {
            ++feasible;
            EXPECT_TRUE(sys.satisfied_by(*point));
        }
    }
    EXPECT_GT(feasible, 200);
    EXPECT_LT(feasible, 1800);
}
