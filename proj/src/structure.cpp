#include "crnkit/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace crnkit {

namespace {

using Partition = std::vector<std::vector<std::size_t>>;

void canonicalize(Partition& p) {
    for (auto& block : p) {
        std::sort(block.begin(), block.end());
    }
    std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Partition undirected_components(std::size_t n, const NetworkMatrices& mats) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (std::size_t j = 0; j < mats.reactantOf.size(); ++j) {
        parent[root(mats.reactantOf[j])] = root(mats.productOf[j]);
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t c = 0; c < n; ++c) {
        groups[root(c)].push_back(c);
    }
    Partition out;
    for (auto& g : groups) {
        if (!g.empty()) {
            out.push_back(std::move(g));
        }
    }
    canonicalize(out);
    return out;
}

// Tarjan's algorithm.
Partition strong_components(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<long> index(n, -1);
    std::vector<long> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    long counter = 0;
    Partition out;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w : adj[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            out.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (index[v] < 0) {
            visit(v);
        }
    }
    canonicalize(out);
    return out;
}

}  // namespace

LinkagePartitions linkage_partitions(const Network& net) {
    const NetworkMatrices mats = build_matrices(net);
    const std::size_t n = mats.complexIndex.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t j = 0; j < mats.reactantOf.size(); ++j) {
        adj[mats.reactantOf[j]].push_back(mats.productOf[j]);
    }

    LinkagePartitions out;
    out.linkage = undirected_components(n, mats);
    out.strong = strong_components(n, adj);

    std::vector<std::size_t> class_of(n);
    for (std::size_t k = 0; k < out.strong.size(); ++k) {
        for (std::size_t c : out.strong[k]) {
            class_of[c] = k;
        }
    }
    for (std::size_t k = 0; k < out.strong.size(); ++k) {
        bool terminal = true;
        for (std::size_t c : out.strong[k]) {
            for (std::size_t d : adj[c]) {
                if (class_of[d] != k) {
                    terminal = false;
                }
            }
        }
        if (terminal) {
            out.terminal.push_back(out.strong[k]);
        }
    }
    return out;
}

NetworkNumbers network_numbers(const Network& net) {
    const NetworkMatrices mats = build_matrices(net);
    const LinkagePartitions parts = linkage_partitions(net);
    NetworkNumbers k;
    k.m = net.species_count();
    k.n = mats.complexIndex.size();
    k.n_r = std::set<std::size_t>(mats.reactantOf.begin(), mats.reactantOf.end()).size();
    k.r = net.reaction_count();
    std::size_t with_reverse = 0;
    for (const auto& r : net.reactions()) {
        if (net.contains(r.reversed())) {
            ++with_reverse;
        }
    }
    k.r_rev = with_reverse / 2;
    k.r_irrev = k.r - with_reverse;
    k.l = parts.linkage.size();
    k.sl = parts.strong.size();
    k.t = parts.terminal.size();
    k.s = rank(mats.N);
    k.q = rank(mats.NMinus);
    k.delta = static_cast<long>(k.n) - static_cast<long>(k.l) - static_cast<long>(k.s);
    k.delta_p = static_cast<long>(k.n_r) - static_cast<long>(k.q);
    return k;
}

StructuralFlags structural_flags(const NetworkNumbers& k) {
    StructuralFlags f;
    f.branching = k.n_r < k.r;
    f.closed = k.s < k.m;
    f.cycleTerminal = k.n == k.n_r;
    f.highReactantDiversity = k.n_r > k.s;
    f.maximallyClosed = k.s + 1 == k.m;
    f.pointTerminal = k.n - k.n_r == k.t;
    f.tMinimal = k.t == k.l;
    f.weaklyReversible = k.sl == k.l;
    return f;
}

StructuralFlags structural_flags(const Network& net) {
    return structural_flags(network_numbers(net));
}

Coincidence kinetic_subspace_coincides(const Network& net) {
    const LinkagePartitions parts = linkage_partitions(net);
    return parts.terminal.size() == parts.linkage.size() ? Coincidence::Yes : Coincidence::Unknown;
}

bool is_reversible(const Network& net) {
    return std::all_of(net.reactions().begin(), net.reactions().end(),
                       [&](const Reaction& r) { return net.contains(r.reversed()); });
}

DeficiencyZeroReport deficiency_zero_report(const Network& net) {
    const NetworkNumbers k = network_numbers(net);
    DeficiencyZeroReport rep;
    rep.delta = k.delta;
    rep.reversible = is_reversible(net);
    rep.weaklyReversible = k.sl == k.l;
    rep.applies = k.delta == 0 && rep.weaklyReversible;
    return rep;
}

}  // namespace crnkit
