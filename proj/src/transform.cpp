#include "crnkit/transform.hpp"

#include "crnkit/decomp.hpp"
#include "crnkit/structure.hpp"

#include <algorithm>
#include <random>

namespace crnkit {

namespace {

Complex restrict_complex(const Complex& c, const SpeciesSet& keep) {
    std::vector<Complex::Term> terms;
    for (const auto& t : c.terms()) {
        if (keep.contains(t.first)) {
            terms.push_back(t);
        }
    }
    return Complex(std::move(terms));
}

Complex add_vector(const Complex& c, const SpeciesVector& z) {
    std::vector<Complex::Term> terms;
    for (const auto& [name, coef] : c.terms()) {
        auto it = z.find(name);
        terms.emplace_back(name, coef + (it == z.end() ? 0 : it->second));
    }
    for (const auto& [name, coef] : z) {
        if (c.coefficient(name) == 0) {
            terms.emplace_back(name, coef);
        }
    }
    for (const auto& [name, coef] : terms) {
        if (coef < 0) {
            throw NetworkError("shift leaves a negative coefficient of " + name);
        }
    }
    return Complex(std::move(terms));
}

void check_split(const Reaction& original, const Reaction& part1, const Reaction& part2) {
    SpeciesVector sum = part1.reaction_vector();
    for (const auto& [name, v] : part2.reaction_vector()) {
        sum[name] += v;
    }
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    if (sum != original.reaction_vector()) {
        throw NetworkError("split parts do not add up to " + original.to_string());
    }
    for (const Reaction* p : {&part1, &part2}) {
        if (p->reactant == p->product) {
            throw NetworkError("split part " + p->to_string() + " is trivial");
        }
    }
}

Rational power(const Rational& base, long e) {
    Rational out = 1;
    for (long i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

}  // namespace

std::vector<Reaction> restrict_reactions(const std::vector<Reaction>& reactions, const SpeciesSet& keep) {
    std::vector<Reaction> out;
    std::vector<bool> changed;
    for (const auto& r : reactions) {
        Reaction e{restrict_complex(r.reactant, keep), restrict_complex(r.product, keep), r.label};
        if (e.reactant == e.product) {
            continue;
        }
        const bool is_changed = !(e.reactant.terms() == r.reactant.terms() && e.product.terms() == r.product.terms());
        if (is_changed && !e.label.empty()) {
            e.label += "E";
        }
        auto it = std::find(out.begin(), out.end(), e);
        if (it != out.end()) {
            const auto pos = static_cast<std::size_t>(it - out.begin());
            if (changed[pos] && !is_changed) {
                it->label = e.label;
                changed[pos] = false;
            }
            continue;
        }
        out.push_back(std::move(e));
        changed.push_back(is_changed);
    }
    return out;
}

Network embedded_network(const Network& net, const SpeciesSet& keep) {
    if (keep.empty()) {
        throw NetworkError("embedded network needs at least one species");
    }
    for (const auto& s : keep) {
        net.species_index(s);
    }
    return Network(restrict_reactions(net.reactions(), keep));
}

Reaction shifted(const Reaction& reaction, const SpeciesVector& z) {
    return {add_vector(reaction.reactant, z), add_vector(reaction.product, z), reaction.label};
}

Network shift(const Network& net, std::size_t index, const SpeciesVector& z) {
    std::vector<Reaction> rs = net.reactions();
    rs.at(index) = shifted(rs[index], z);
    return Network(std::move(rs));
}

Network split_by_reaction_vector(const Network& net, std::size_t index, Reaction part1, Reaction part2) {
    std::vector<Reaction> rs = net.reactions();
    check_split(rs.at(index), part1, part2);
    rs[index] = std::move(part1);
    rs.insert(rs.begin() + static_cast<std::ptrdiff_t>(index) + 1, std::move(part2));
    return Network(std::move(rs));
}

KineticSystem::KineticSystem(std::vector<Reaction> reactions, std::vector<RateLaw> rates)
    : reactions_(std::move(reactions)), rates_(std::move(rates)) {
    if (reactions_.size() != rates_.size()) {
        throw NetworkError("kinetic system: one rate law per reaction required");
    }
    for (const auto& law : rates_) {
        if (law.k <= 0) {
            throw NetworkError("kinetic system: rate constants must be positive");
        }
    }
}

KineticSystem KineticSystem::mass_action(const Network& net, const std::vector<Rational>& k) {
    if (k.size() != net.reaction_count()) {
        throw NetworkError("mass action: one rate constant per reaction required");
    }
    std::vector<RateLaw> rates;
    for (std::size_t j = 0; j < k.size(); ++j) {
        rates.push_back({k[j], net.reactions()[j].reactant.as_map()});
    }
    return KineticSystem(net.reactions(), std::move(rates));
}

SpeciesSet KineticSystem::species() const {
    SpeciesSet out;
    for (const auto& r : reactions_) {
        for (const auto& [name, coef] : r.reactant.terms()) {
            out.insert(name);
        }
        for (const auto& [name, coef] : r.product.terms()) {
            out.insert(name);
        }
    }
    return out;
}

bool KineticSystem::is_mass_action(std::size_t index) const {
    return rates_.at(index).exponents == reactions_.at(index).reactant.as_map();
}

std::size_t KineticSystem::mass_action_count() const {
    std::size_t count = 0;
    for (std::size_t j = 0; j < size(); ++j) {
        count += is_mass_action(j) ? 1 : 0;
    }
    return count;
}

Network KineticSystem::network() const {
    return Network(reactions_);
}

std::map<std::string, Rational> KineticSystem::rhs(const std::map<std::string, Rational>& x) const {
    std::map<std::string, Rational> f;
    for (const auto& s : species()) {
        f[s] = 0;
    }
    for (std::size_t j = 0; j < size(); ++j) {
        Rational rate = rates_[j].k;
        for (const auto& [name, e] : rates_[j].exponents) {
            rate *= power(x.at(name), e);
        }
        for (const auto& [name, v] : reactions_[j].reaction_vector()) {
            f[name] += rate * v;
        }
    }
    return f;
}

KineticSystem KineticSystem::shift(std::size_t index, const SpeciesVector& z) const {
    KineticSystem out = *this;
    out.reactions_.at(index) = shifted(reactions_[index], z);
    if (out.reactions_[index].reactant == out.reactions_[index].product) {
        throw NetworkError("shift produced a trivial reaction");
    }
    return out;
}

KineticSystem KineticSystem::split(std::size_t index, Reaction part1, Reaction part2) const {
    check_split(reactions_.at(index), part1, part2);
    KineticSystem out = *this;
    out.reactions_[index] = std::move(part1);
    out.reactions_.insert(out.reactions_.begin() + static_cast<std::ptrdiff_t>(index) + 1, std::move(part2));
    out.rates_.insert(out.rates_.begin() + static_cast<std::ptrdiff_t>(index) + 1, rates_[index]);
    return out;
}

bool dynamically_equivalent(const KineticSystem& a, const KineticSystem& b, std::size_t points,
                            std::uint64_t seed) {
    const SpeciesSet species = a.species();
    if (species != b.species()) {
        return false;
    }
    SpeciesSet needed = species;
    for (const auto* sys : {&a, &b}) {
        for (const auto& law : sys->rates()) {
            for (const auto& [name, e] : law.exponents) {
                needed.insert(name);
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> draw(1, 999);
    for (std::size_t p = 0; p < points; ++p) {
        std::map<std::string, Rational> x;
        for (const auto& s : needed) {
            x[s] = Rational(draw(rng), draw(rng));
        }
        if (a.rhs(x) != b.rhs(x)) {
            return false;
        }
    }
    return true;
}

CsenReport csen(const Network& a, const Network& b) {
    CsenReport rep{{}, a, b, {}, {}, {}, {}};
    SpeciesSet keep;
    for (const auto& s : a.species()) {
        if (std::find(b.species().begin(), b.species().end(), s) != b.species().end()) {
            rep.commonSpecies.push_back(s);
            keep.insert(s);
        }
    }
    if (keep.empty()) {
        throw NetworkError("csen: the networks share no species");
    }
    rep.embedded1 = embedded_network(a, keep);
    rep.embedded2 = embedded_network(b, keep);
    rep.commonOriginal = common_reactions(a, b);
    for (const auto& r : rep.embedded1.reactions()) {
        const bool original =
            std::find(rep.commonOriginal.begin(), rep.commonOriginal.end(), r) != rep.commonOriginal.end();
        if (!rep.embedded2.contains(r)) {
            rep.unique1.push_back(r);
        } else if (!original) {
            rep.embeddingDerived.push_back(r);
        }
    }
    rep.unique2 = difference(rep.embedded2, rep.embedded1);
    return rep;
}

CorePlacement place_in_fid(const Network& parent, const Network& sub) {
    const Decomposition d = fid(parent);
    std::vector<std::size_t> in_sub;
    for (const auto& r : sub.reactions()) {
        auto idx = parent.find(r);
        if (!idx) {
            throw NetworkError("core: reaction " + r.to_string() + " missing from parent");
        }
        in_sub.push_back(*idx);
    }
    CorePlacement out;
    std::vector<std::size_t> union_idx;
    for (std::size_t b = 0; b < d.size(); ++b) {
        const auto& block = d.blocks()[b];
        const bool touches = std::any_of(block.begin(), block.end(), [&](std::size_t i) {
            return std::find(in_sub.begin(), in_sub.end(), i) != in_sub.end();
        });
        if (touches) {
            out.blocks.push_back(b);
            union_idx.insert(union_idx.end(), block.begin(), block.end());
        }
    }
    std::vector<std::size_t> complement;
    for (std::size_t i : union_idx) {
        if (std::find(in_sub.begin(), in_sub.end(), i) == in_sub.end()) {
            complement.push_back(i);
        }
    }
    out.unionRank = reaction_rank(parent, union_idx);
    out.complementRank = complement.empty() ? 0 : reaction_rank(parent, complement);
    out.independent = reaction_rank(parent, in_sub) + out.complementRank == out.unionRank;
    return out;
}

CoreReport core(const Network& a, const Network& b) {
    std::vector<Reaction> common = common_reactions(a, b);
    if (common.empty()) {
        throw NetworkError("core: the networks share no reactions");
    }
    CoreReport rep{Network(std::move(common)), false, 0, 0, {}, {}};
    const NetworkNumbers k = network_numbers(rep.core);
    rep.reversible = is_reversible(rep.core);
    rep.deficiency = k.delta;
    rep.rank = k.s;
    rep.placement1 = place_in_fid(a, rep.core);
    rep.placement2 = place_in_fid(b, rep.core);
    return rep;
}

}  // namespace crnkit
