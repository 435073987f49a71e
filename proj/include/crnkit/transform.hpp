#pragma once

// Embedded networks, network operations (shifting, RV-splitting) with exact
// kinetics, and the CSEN and CORE comparisons.

#include "crnkit/network.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace crnkit {

using SpeciesSet = std::set<std::string>;
using SpeciesVector = std::map<std::string, long>;

std::vector<Reaction> restrict_reactions(const std::vector<Reaction>& reactions, const SpeciesSet& keep);
Network embedded_network(const Network& net, const SpeciesSet& keep);

Reaction shifted(const Reaction& reaction, const SpeciesVector& z);
Network shift(const Network& net, std::size_t index, const SpeciesVector& z);
Network split_by_reaction_vector(const Network& net, std::size_t index, Reaction part1, Reaction part2);

/// Power-law rate k * prod x_s^e_s.
struct RateLaw {
    Rational k;
    SpeciesVector exponents;
};

/// Reactions with one rate law each. Unlike Network, repeated reactions are
/// allowed so that intermediate states of a transformation can be held.
class KineticSystem {
public:
    KineticSystem() = default;
    KineticSystem(std::vector<Reaction> reactions, std::vector<RateLaw> rates);

    static KineticSystem mass_action(const Network& net, const std::vector<Rational>& k);

    const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
    const std::vector<RateLaw>& rates() const noexcept { return rates_; }
    std::size_t size() const noexcept { return reactions_.size(); }

    SpeciesSet species() const;
    bool is_mass_action(std::size_t index) const;
    std::size_t mass_action_count() const;
    /// Throws when two reactions coincide.
    Network network() const;

    std::map<std::string, Rational> rhs(const std::map<std::string, Rational>& x) const;

    KineticSystem shift(std::size_t index, const SpeciesVector& z) const;
    KineticSystem split(std::size_t index, Reaction part1, Reaction part2) const;

private:
    std::vector<Reaction> reactions_;
    std::vector<RateLaw> rates_;
};

/// Same species and identical right-hand sides at random positive rational
/// points, compared exactly.
bool dynamically_equivalent(const KineticSystem& a, const KineticSystem& b, std::size_t points,
                            std::uint64_t seed);

struct CsenReport {
    std::vector<std::string> commonSpecies;
    Network embedded1;
    Network embedded2;
    std::vector<Reaction> commonOriginal;
    std::vector<Reaction> embeddingDerived;
    std::vector<Reaction> unique1;
    std::vector<Reaction> unique2;
};

CsenReport csen(const Network& a, const Network& b);

struct CorePlacement {
    std::vector<std::size_t> blocks;  // FID blocks of the parent touching the core
    std::size_t unionRank = 0;
    std::size_t complementRank = 0;
    bool independent = false;         // core rank + complement rank == union rank
};

struct CoreReport {
    Network core;
    bool reversible = false;
    long deficiency = 0;
    std::size_t rank = 0;
    CorePlacement placement1;
    CorePlacement placement2;
};

CoreReport core(const Network& a, const Network& b);
CorePlacement place_in_fid(const Network& parent, const Network& sub);

}  // namespace crnkit
