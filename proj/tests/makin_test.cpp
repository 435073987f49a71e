#include "crnkit/decomp.hpp"
#include "crnkit/fixtures.hpp"
#include "crnkit/makin.hpp"
#include "crnkit/transform.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace crnkit;

namespace {

double max_residual(const std::string& model, std::uint64_t seed, bool blocks) {
    const ParametrizationFixture& pf = parametrization_fixture(model);
    const Network net = fixture(pf.network);
    const Decomposition d = fid(net);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int sample = 0; sample < 100; ++sample) {
        const RateAssignment k = random_rates(net, rng);
        const Concentrations x = pf.evaluate(k, random_free_parameters(pf, rng));
        worst = std::max(worst, equilibrium_residual(net, k, x));
        if (blocks) {
            for (std::size_t b = 0; b < d.size(); ++b) {
                worst = std::max(worst, equilibrium_residual(d.block_network(b), k, x));
            }
        }
    }
    return worst;
}

}  // namespace

TEST(MassAction, Outflow) {
    const Network net = parse_network("X -> 0");
    const Concentrations f = mass_action_rhs(net, std::vector<double>{2.0}, {{"X", 3.0}});
    EXPECT_DOUBLE_EQ(f.at("X"), -6.0);
}

TEST(MassAction, InflowOutflowBalance) {
    const Network net = parse_network("0 -> X\nX -> 0");
    EXPECT_DOUBLE_EQ(mass_action_rhs(net, std::vector<double>{3.0, 1.5}, {{"X", 2.0}}).at("X"), 0.0);
    EXPECT_DOUBLE_EQ(equilibrium_residual(net, std::vector<double>{3.0, 1.5}, {{"X", 2.0}}), 0.0);
    EXPECT_NEAR(equilibrium_residual(net, std::vector<double>{3.0, 1.5}, {{"X", 4.0}}), 1.0, 1e-15);
}

TEST(MassAction, HandExpandedPolynomials) {
    const Network net = parse_network("2 A + B -> C\nC -> A\n0 -> B");
    const double k1 = 0.5, k2 = 2.0, k3 = 3.0;
    const double a = 1.5, b = 0.25, c = 4.0;
    const Concentrations f = mass_action_rhs(net, std::vector<double>{k1, k2, k3}, {{"A", a}, {"B", b}, {"C", c}});
    EXPECT_DOUBLE_EQ(f.at("A"), -2 * k1 * a * a * b + k2 * c);
    EXPECT_DOUBLE_EQ(f.at("B"), -k1 * a * a * b + k3);
    EXPECT_DOUBLE_EQ(f.at("C"), k1 * a * a * b - k2 * c);
}

TEST(MassAction, RateLookupByLabel) {
    const Network net = parse_network("A -> B @ R7\nB -> A");
    EXPECT_EQ(rate_index(net.reactions()[0], 0), 7);
    EXPECT_EQ(rate_index(net.reactions()[1], 1), 2);
    EXPECT_EQ(rates_for(net, {{7, 1.0}, {2, 3.0}}), (std::vector<double>{1.0, 3.0}));
    EXPECT_THROW(rates_for(net, {{7, 1.0}}), std::invalid_argument);
}

TEST(MassActionProperty, AgreesWithExactEvaluation) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> draw(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const Network net = oracle::random_network(rng, 4, 5);
        std::vector<Rational> kq;
        std::vector<double> kd;
        for (std::size_t j = 0; j < net.reaction_count(); ++j) {
            kq.emplace_back(draw(rng), draw(rng));
            kd.push_back(kq.back().convert_to<double>());
        }
        std::map<std::string, Rational> xq;
        Concentrations xd;
        for (const auto& s : net.species()) {
            xq[s] = Rational(draw(rng), draw(rng));
            xd[s] = xq[s].convert_to<double>();
        }
        const auto exact = KineticSystem::mass_action(net, kq).rhs(xq);
        const Concentrations approx = mass_action_rhs(net, kd, xd);
        for (const auto& s : net.species()) {
            const double e = exact.count(s) ? exact.at(s).convert_to<double>() : 0.0;
            EXPECT_NEAR(approx.at(s), e, 1e-9 * std::max(1.0, std::abs(e))) << s;
        }
    }
}

TEST(Parametrization, FixturesAndErrors) {
    EXPECT_EQ(parametrization_fixtures().size(), 3u);
    EXPECT_THROW(parametrization_fixture("lee"), std::invalid_argument);
    const ParametrizationFixture& fal = parametrization_fixture("fal");
    std::mt19937_64 rng(1);
    const RateAssignment k = random_rates(fixture("fal"), rng);
    EXPECT_THROW(fal.evaluate(k, {}), std::invalid_argument);
    FreeParameters p = random_free_parameters(fal, rng);
    p.begin()->second = -1.0;
    EXPECT_THROW(fal.evaluate(k, p), std::invalid_argument);
}

TEST(Parametrization, FreeParametersAppearDirectly) {
    std::mt19937_64 rng(2);
    const ParametrizationFixture& s = parametrization_fixture("schmitz");
    const RateAssignment ks = random_rates(fixture("schmitz"), rng);
    EXPECT_EQ(s.evaluate(ks, {{"sigma1", 1.0}, {"tau2", 0.37}}).at("A6"), 0.37);

    const ParametrizationFixture& f = parametrization_fixture("fal");
    const RateAssignment kf = random_rates(fixture("fal"), rng);
    EXPECT_DOUBLE_EQ(f.evaluate(kf, random_free_parameters(f, rng)).at("A26"), kf.at(47) / kf.at(48));

    const ParametrizationFixture& m = parametrization_fixture("maclean");
    const RateAssignment km = random_rates(fixture("maclean"), rng);
    FreeParameters pm = random_free_parameters(m, rng);
    pm["tau12"] = 2.5;
    EXPECT_EQ(m.evaluate(km, pm).at("A17"), 2.5);
}

TEST(Parametrization, CoversEverySpecies) {
    std::mt19937_64 rng(3);
    for (const auto& pf : parametrization_fixtures()) {
        const Network net = fixture(pf.network);
        const Concentrations x = pf.evaluate(random_rates(net, rng), random_free_parameters(pf, rng));
        EXPECT_EQ(x.size(), net.species_count()) << pf.name;
        for (const auto& s : net.species()) {
            ASSERT_TRUE(x.count(s)) << pf.name << " " << s;
            EXPECT_GT(x.at(s), 0.0);
        }
    }
}

TEST(Equilibria, ResidualsOnNetworksAndBlocks) {
    for (const char* model : {"schmitz", "fal", "maclean"}) {
        EXPECT_LT(max_residual(model, 1, true), 1e-9) << model;
    }
}

TEST(Equilibria, PerturbedPointIsNotAnEquilibrium) {
    std::mt19937_64 rng(4);
    for (const auto& pf : parametrization_fixtures()) {
        const Network net = fixture(pf.network);
        const RateAssignment k = random_rates(net, rng);
        Concentrations x = pf.evaluate(k, random_free_parameters(pf, rng));
        x.begin()->second *= 1.5;
        EXPECT_GT(equilibrium_residual(net, k, x), 1e-3) << pf.name;
    }
}

TEST(Acr, FalHasExactlyOneConstantSpecies) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        std::mt19937_64 rng(seed);
        const RateAssignment k = random_rates(fixture("fal"), rng);
        int constant = 0;
        for (const auto& v : acr_scan("fal", k, 100, seed)) {
            if (v.constant) {
                ++constant;
                EXPECT_EQ(v.species, "A26");
                EXPECT_NEAR(v.value, k.at(47) / k.at(48), 1e-12 * v.value);
            }
        }
        EXPECT_EQ(constant, 1);
    }
}

TEST(Acr, SchmitzAndMacleanHaveNone) {
    for (const char* model : {"schmitz", "maclean"}) {
        for (std::uint64_t seed : {1, 3, 4, 5}) {
            std::mt19937_64 rng(seed);
            const RateAssignment k = random_rates(fixture(model), rng);
            for (const auto& v : acr_scan(model, k, 100, seed)) {
                EXPECT_FALSE(v.constant) << model << " " << v.species;
            }
        }
    }
    EXPECT_THROW(acr_scan("fal", {}, 1, 1), std::invalid_argument);
}

TEST(Acr, SchmitzNearDegenerateRates) {
    // With these rates k2*C/k3 is about 2e-7, so A8 and A10 move only at second
    // order across the sampling box and the scan cannot tell them from constants.
    std::mt19937_64 rng(2);
    const RateAssignment k = random_rates(fixture("schmitz"), rng);
    std::vector<std::string> flagged;
    for (const auto& v : acr_scan("schmitz", k, 100, 2)) {
        if (v.constant) {
            flagged.push_back(v.species);
        }
    }
    EXPECT_EQ(flagged, (std::vector<std::string>{"A8", "A10"}));
    const ParametrizationFixture& pf = parametrization_fixture("schmitz");
    const double low = pf.evaluate(k, {{"sigma1", 1e-2}, {"tau2", 1.0}}).at("A8");
    const double high = pf.evaluate(k, {{"sigma1", 1e15}, {"tau2", 1.0}}).at("A8");
    EXPECT_GT(std::abs(high - low) / high, 1e-8);
}

TEST(AcrProperty, VerdictDoesNotDependOnScanSeed) {
    for (const auto& pf : parametrization_fixtures()) {
        for (std::uint64_t kseed = 1; kseed <= 5; ++kseed) {
            std::mt19937_64 rng(kseed);
            const RateAssignment k = random_rates(fixture(pf.network), rng);
            std::vector<bool> first;
            for (const auto& v : acr_scan(pf.name, k, 10, 1)) {
                first.push_back(v.constant);
            }
            for (std::uint64_t seed = 2; seed <= 5; ++seed) {
                std::vector<bool> again;
                for (const auto& v : acr_scan(pf.name, k, 10, seed)) {
                    again.push_back(v.constant);
                }
                EXPECT_EQ(again, first) << pf.name << " k seed " << kseed << " scan seed " << seed;
            }
        }
    }
}
