#include "crnkit/scenarios.hpp"

#include "crnkit/fixtures.hpp"
#include "crnkit/structure.hpp"

#include <algorithm>
#include <random>

namespace crnkit {

namespace {

std::vector<Rational> random_constants(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> draw(1, 999);
    std::vector<Rational> k;
    for (std::size_t i = 0; i < count; ++i) {
        k.emplace_back(draw(rng), draw(rng));
    }
    return k;
}

std::size_t index_of(const KineticSystem& sys, std::string_view label) {
    for (std::size_t j = 0; j < sys.size(); ++j) {
        if (sys.reactions()[j].label == label) {
            return j;
        }
    }
    throw NetworkError("scenario: no reaction labelled " + std::string(label));
}

// Splits reactant -> product into reactant -> 0 (label a) and 0 -> product (label b).
KineticSystem split_through_zero(const KineticSystem& sys, std::string_view label, std::vector<std::string>& steps) {
    const std::size_t j = index_of(sys, label);
    const Reaction& r = sys.reactions()[j];
    Reaction out{r.reactant, Complex(), r.label + "a"};
    Reaction in{Complex(), r.product, r.label + "b"};
    steps.push_back("split " + r.label + ": " + r.to_string() + " into " + out.to_string() + " and " + in.to_string());
    return sys.split(j, out, in);
}

KineticSystem shift_by(const KineticSystem& sys, std::string_view label, const SpeciesVector& z,
                       std::vector<std::string>& steps) {
    const std::size_t j = index_of(sys, label);
    KineticSystem out = sys.shift(j, z);
    steps.push_back("shift " + std::string(label) + ": " + sys.reactions()[j].to_string() + " to " +
                    out.reactions()[j].to_string());
    return out;
}

bool same_reaction_set(const Network& a, const Network& b) {
    if (a.reaction_count() != b.reaction_count()) {
        return false;
    }
    return std::all_of(a.reactions().begin(), a.reactions().end(), [&](const Reaction& r) { return b.contains(r); });
}

ScenarioReport lee_inflow(std::size_t points, std::uint64_t seed) {
    const CsenReport rep = csen(fixture("lee"), fixture("fal"));
    ScenarioReport out;
    out.name = "lee-inflow";
    out.source = KineticSystem::mass_action(rep.embedded1, random_constants(rep.embedded1.reaction_count(), seed));
    out.target = split_through_zero(out.source, "R40E", out.steps);
    out.expected = rep.embedded2.reactions();
    out.equivalent = dynamically_equivalent(out.source, out.target, points, seed + 1);
    out.matchesExpected = same_reaction_set(out.target.network(), Network(out.expected));
    out.sourceRank = network_numbers(rep.embedded1).s;
    out.targetRank = network_numbers(out.target.network()).s;
    return out;
}

ScenarioReport schmitz_gmak(std::size_t points, std::uint64_t seed) {
    const CsenReport rep = csen(fixture("schmitz"), fixture("maclean"));
    ScenarioReport out;
    out.name = "schmitz-gmak";
    out.source = KineticSystem::mass_action(rep.embedded1, random_constants(rep.embedded1.reaction_count(), seed));
    KineticSystem sys = out.source;
    for (const char* label : {"R14", "R15", "R16", "R17"}) {
        sys = split_through_zero(sys, label, out.steps);
    }
    sys = shift_by(sys, "R17b", {{"A1", 1}}, out.steps);
    sys = shift_by(sys, "R16a", {{"A1", 1}}, out.steps);
    out.target = sys;

    std::vector<Reaction> expected;
    for (const auto& r : rep.embedded2.reactions()) {
        if (r.label != "R38" && r.label != "R39") {
            expected.push_back(r);
        }
    }
    expected.push_back(make_reaction("A1 -> 2 A1"));
    expected.push_back(make_reaction("2 A1 -> A1"));
    out.expected = std::move(expected);
    out.equivalent = dynamically_equivalent(out.source, out.target, points, seed + 1);
    out.matchesExpected = same_reaction_set(out.target.network(), Network(out.expected));
    out.sourceRank = network_numbers(rep.embedded1).s;
    out.targetRank = network_numbers(out.target.network()).s;
    return out;
}

}  // namespace

std::vector<std::string> scenario_names() {
    return {"lee-inflow", "schmitz-gmak"};
}

ScenarioReport run_scenario(std::string_view name, std::size_t points, std::uint64_t seed) {
    if (name == "lee-inflow") {
        return lee_inflow(points, seed);
    }
    if (name == "schmitz-gmak") {
        return schmitz_gmak(points, seed);
    }
    throw std::invalid_argument("unknown scenario: " + std::string(name));
}

}  // namespace crnkit
