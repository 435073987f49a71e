#pragma once

// Network numbers, linkage classes and the basic structural properties.

#include "crnkit/network.hpp"

#include <cstddef>
#include <vector>

namespace crnkit {

struct NetworkNumbers {
    std::size_t m = 0;        // species
    std::size_t n = 0;        // complexes
    std::size_t n_r = 0;      // reactant complexes
    std::size_t r_rev = 0;    // reversible pairs
    std::size_t r_irrev = 0;  // reactions without a reverse
    std::size_t r = 0;
    std::size_t l = 0;        // linkage classes
    std::size_t sl = 0;       // strong linkage classes
    std::size_t t = 0;        // terminal strong linkage classes
    std::size_t s = 0;        // rank
    std::size_t q = 0;        // reactant rank
    long delta = 0;
    long delta_p = 0;

    friend bool operator==(const NetworkNumbers&, const NetworkNumbers&) = default;
};

/// Partitions of the complex indices of build_matrices().complexIndex.
struct LinkagePartitions {
    std::vector<std::vector<std::size_t>> linkage;
    std::vector<std::vector<std::size_t>> strong;
    std::vector<std::vector<std::size_t>> terminal;
};

struct StructuralFlags {
    bool branching = false;
    bool closed = false;
    bool cycleTerminal = false;
    bool highReactantDiversity = false;
    bool maximallyClosed = false;
    bool pointTerminal = false;
    bool tMinimal = false;
    bool weaklyReversible = false;

    friend bool operator==(const StructuralFlags&, const StructuralFlags&) = default;
};

enum class Coincidence { Yes, Unknown };

struct DeficiencyZeroReport {
    bool applies = false;
    bool reversible = false;
    bool weaklyReversible = false;
    long delta = 0;
};

LinkagePartitions linkage_partitions(const Network& net);
NetworkNumbers network_numbers(const Network& net);
StructuralFlags structural_flags(const Network& net);
StructuralFlags structural_flags(const NetworkNumbers& numbers);
Coincidence kinetic_subspace_coincides(const Network& net);
DeficiencyZeroReport deficiency_zero_report(const Network& net);

bool is_reversible(const Network& net);

}  // namespace crnkit
