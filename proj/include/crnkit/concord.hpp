#pragma once

// Concordance with discordance certificates, positive dependence,
// conservativity, and maximal concordant containers.

#include "crnkit/network.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace crnkit {

struct SignWitness {
    RationalVector alpha;  // over reactions
    RationalVector sigma;  // over species
};

enum class ConcordanceStatus { Concordant, Discordant, Unknown };

struct ConcordanceVerdict {
    ConcordanceStatus status = ConcordanceStatus::Unknown;
    std::optional<SignWitness> witness;
    std::uint64_t searchNodes = 0;
};

inline constexpr std::uint64_t default_node_budget = 5'000'000;

/// Budget from CRNKIT_BUDGET when set, otherwise the default.
std::uint64_t node_budget_from_env();

ConcordanceVerdict check_concordance(const Network& net, std::uint64_t node_budget = default_node_budget);
bool verify_witness(const Network& net, const SignWitness& w);

struct DependenceResult {
    bool holds = false;
    RationalVector certificate;
};

/// N alpha = 0 with every alpha_r >= 1.
DependenceResult is_positive_dependent(const Network& net);
/// N^T p = 0 with every p_i >= 1.
DependenceResult is_conservative(const Network& net);

struct M3crResult {
    Network container;
    std::vector<Reaction> discordanceSet;
    bool maximalityVerified = false;
    /// Set when the greedy pass in reverse reaction order was run.
    std::optional<bool> orderIndependent;
    std::optional<Network> alternateContainer;
};

M3crResult m3cr(const Network& net, const std::vector<Reaction>& mandatory,
                std::uint64_t node_budget = default_node_budget, bool check_alternate_order = true);

}  // namespace crnkit
