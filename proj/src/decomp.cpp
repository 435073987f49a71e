#include "crnkit/decomp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace crnkit {

Decomposition::Decomposition(Network parent, std::vector<std::vector<std::size_t>> blocks)
    : parent_(std::move(parent)), blocks_(std::move(blocks)) {
    std::vector<int> seen(parent_.reaction_count(), 0);
    for (auto& b : blocks_) {
        if (b.empty()) {
            throw NetworkError("decomposition: empty block");
        }
        std::sort(b.begin(), b.end());
        for (std::size_t i : b) {
            if (i >= seen.size()) {
                throw NetworkError("decomposition: reaction index out of range");
            }
            ++seen[i];
        }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
        throw NetworkError("decomposition: blocks do not partition the reactions");
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Network Decomposition::block_network(std::size_t i) const {
    return subnetwork(parent_, blocks_.at(i));
}

std::vector<std::vector<std::string>> Decomposition::block_labels() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& b : blocks_) {
        auto& labels = out.emplace_back();
        for (std::size_t i : b) {
            labels.push_back(parent_.reactions()[i].label);
        }
    }
    return out;
}

std::size_t reaction_rank(const Network& net, const std::vector<std::size_t>& indices) {
    return rank(stoichiometric_matrix(net).select_columns(indices));
}

bool is_independent(const Decomposition& d) {
    const RationalMatrix n = stoichiometric_matrix(d.parent());
    std::size_t sum = 0;
    for (const auto& b : d.blocks()) {
        sum += rank(n.select_columns(b));
    }
    return sum == rank(n);
}

bool is_incidence_independent(const Decomposition& d) {
    const NetworkNumbers whole = network_numbers(d.parent());
    std::size_t sum = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const NetworkNumbers k = network_numbers(d.block_network(i));
        sum += k.n - k.l;
    }
    return whole.n - whole.l == sum;
}

Decomposition fid(const Network& net) {
    const RationalMatrix n = stoichiometric_matrix(net);
    const std::size_t r = net.reaction_count();
    // Pivot columns of the RREF are the greedy basis in reaction order, and
    // each non-pivot column holds its coordinates in that basis.
    const RowEchelon e = rref(n);

    std::vector<std::size_t> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    std::vector<bool> is_pivot(r, false);
    for (std::size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    for (std::size_t j = 0; j < r; ++j) {
        if (is_pivot[j]) {
            continue;
        }
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            if (e.reduced(k, j) != 0) {
                parent[root(j)] = root(e.pivots[k]);
            }
        }
    }
    std::vector<std::vector<std::size_t>> groups(r);
    for (std::size_t j = 0; j < r; ++j) {
        groups[root(j)].push_back(j);
    }
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
    return Decomposition(net, std::move(groups));
}

std::vector<NetworkNumbers> decomposition_numbers(const Decomposition& d) {
    std::vector<NetworkNumbers> out{network_numbers(d.parent())};
    for (std::size_t i = 0; i < d.size(); ++i) {
        out.push_back(network_numbers(d.block_network(i)));
    }
    return out;
}

}  // namespace crnkit
