#pragma once

// Network decompositions and the finest independent decomposition.

#include "crnkit/network.hpp"
#include "crnkit/structure.hpp"

#include <string>
#include <vector>

namespace crnkit {

class Decomposition {
public:
    /// Blocks must partition the parent's reaction indices. They are stored
    /// sorted, ordered by their smallest reaction index.
    Decomposition(Network parent, std::vector<std::vector<std::size_t>> blocks);

    const Network& parent() const noexcept { return parent_; }
    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }

    Network block_network(std::size_t i) const;
    std::vector<std::vector<std::string>> block_labels() const;

private:
    Network parent_;
    std::vector<std::vector<std::size_t>> blocks_;
};

bool is_independent(const Decomposition& d);
bool is_incidence_independent(const Decomposition& d);
Decomposition fid(const Network& net);

/// Parent numbers first, then one entry per block.
std::vector<NetworkNumbers> decomposition_numbers(const Decomposition& d);

/// Rank of the reaction vectors picked from net.
std::size_t reaction_rank(const Network& net, const std::vector<std::size_t>& indices);

}  // namespace crnkit
