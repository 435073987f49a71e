#pragma once

// Mass action kinetics in binary64: right-hand sides, equilibrium residuals,
// closed-form equilibria of the Wnt models and an ACR scan.

#include "crnkit/network.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace crnkit {

/// Rate constants k_i keyed by i, where reaction "R<i>" uses k_i.
using RateAssignment = std::map<int, double>;
using Concentrations = std::map<std::string, double>;
using FreeParameters = std::map<std::string, double>;

/// i for a label "R<i>", otherwise position + 1.
int rate_index(const Reaction& reaction, std::size_t position);
/// Per-reaction constants in reaction order; throws when one is missing.
std::vector<double> rates_for(const Network& net, const RateAssignment& k);

Concentrations mass_action_rhs(const Network& net, const std::vector<double>& k, const Concentrations& x);
Concentrations mass_action_rhs(const Network& net, const RateAssignment& k, const Concentrations& x);

/// max_i |f_i| / max(1, gross production rate of i).
double equilibrium_residual(const Network& net, const std::vector<double>& k, const Concentrations& x);
double equilibrium_residual(const Network& net, const RateAssignment& k, const Concentrations& x);

struct ParametrizationFixture {
    std::string name;
    std::string network;  // fixture name of the parent network
    std::vector<std::string> freeParameters;
    std::function<Concentrations(const RateAssignment&, const FreeParameters&)> evaluate;
};

const std::vector<ParametrizationFixture>& parametrization_fixtures();
const ParametrizationFixture& parametrization_fixture(std::string_view name);
Concentrations parametrization(std::string_view name, const RateAssignment& k, const FreeParameters& free);

/// Log-uniform draw on [1e-2, 1e2].
double log_uniform(std::mt19937_64& rng);
RateAssignment random_rates(const Network& net, std::mt19937_64& rng);
FreeParameters random_free_parameters(const ParametrizationFixture& fixture, std::mt19937_64& rng);

struct AcrVerdict {
    std::string species;
    bool constant = false;
    double spread = 0.0;  // (max - min) / max |value|
    double value = 0.0;   // mean over samples
};

inline constexpr double acr_tolerance = 1e-9;

std::vector<AcrVerdict> acr_scan(std::string_view name, const RateAssignment& k, std::size_t sample_count,
                                 std::uint64_t seed);

}  // namespace crnkit
