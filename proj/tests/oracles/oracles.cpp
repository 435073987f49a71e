#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oracle {

namespace {

bool all_zero(const RationalVector& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

// Scales an inequality so that its largest coefficient has absolute value 1.
void normalize(Constraint& c) {
    Rational scale = 0;
    for (const auto& x : c.a) {
        scale = std::max(scale, Rational(abs(x)));
    }
    if (scale == 0) {
        return;
    }
    for (auto& x : c.a) {
        x /= scale;
    }
    c.b /= scale;
}

std::string key_of(const RationalVector& a) {
    std::string key;
    for (const auto& x : a) {
        key += x.str() + ',';
    }
    return key;
}

}  // namespace

bool fm_feasible(std::vector<Constraint> constraints, std::size_t variables) {
    for (std::size_t j = 0; j < variables; ++j) {
        auto eq = std::find_if(constraints.begin(), constraints.end(),
                               [j](const Constraint& c) { return c.equality && c.a[j] != 0; });
        if (eq != constraints.end()) {
            const Constraint pivot = *eq;
            constraints.erase(eq);
            for (auto& c : constraints) {
                if (c.a[j] == 0) {
                    continue;
                }
                const Rational f = c.a[j] / pivot.a[j];
                for (std::size_t k = 0; k < variables; ++k) {
                    c.a[k] -= f * pivot.a[k];
                }
                c.b -= f * pivot.b;
            }
            continue;
        }
        std::vector<Constraint> pos;
        std::vector<Constraint> neg;
        std::vector<Constraint> next;
        for (auto& c : constraints) {
            if (c.a[j] > 0) {
                pos.push_back(c);
            } else if (c.a[j] < 0) {
                neg.push_back(c);
            } else {
                next.push_back(c);
            }
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                Constraint c{RationalVector(variables), 0, false};
                const Rational fp = 1 / p.a[j];
                const Rational fq = -1 / q.a[j];
                for (std::size_t k = 0; k < variables; ++k) {
                    c.a[k] = fp * p.a[k] + fq * q.a[k];
                }
                c.a[j] = 0;
                c.b = fp * p.b + fq * q.b;
                next.push_back(std::move(c));
            }
        }
        // Keep the tightest inequality per direction.
        std::map<std::string, Constraint> tightest;
        std::vector<Constraint> equalities;
        for (auto& c : next) {
            if (c.equality) {
                equalities.push_back(std::move(c));
                continue;
            }
            normalize(c);
            if (all_zero(c.a)) {
                if (c.b < 0) {
                    return false;
                }
                continue;
            }
            auto [it, inserted] = tightest.emplace(key_of(c.a), c);
            if (!inserted && c.b < it->second.b) {
                it->second = c;
            }
        }
        constraints = std::move(equalities);
        for (auto& [key, c] : tightest) {
            constraints.push_back(std::move(c));
        }
    }
    return std::all_of(constraints.begin(), constraints.end(),
                       [](const Constraint& c) { return c.equality ? c.b == 0 : c.b >= 0; });
}

std::vector<std::vector<long>> reaction_vectors(const crnkit::Network& net) {
    std::vector<std::vector<long>> out;
    for (const auto& r : net.reactions()) {
        std::vector<long> v(net.species_count(), 0);
        for (const auto& [name, coef] : r.product.terms()) {
            v[net.species_index(name)] += coef;
        }
        for (const auto& [name, coef] : r.reactant.terms()) {
            v[net.species_index(name)] -= coef;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<DiscordancePattern> brute_force_discordance(const crnkit::Network& net) {
    const std::size_t m = net.species_count();
    const std::size_t r = net.reaction_count();
    const auto vectors = reaction_vectors(net);
    std::vector<std::vector<std::size_t>> support(r);
    for (std::size_t j = 0; j < r; ++j) {
        for (const auto& [name, coef] : net.reactions()[j].reactant.terms()) {
            if (coef > 0) {
                support[j].push_back(net.species_index(name));
            }
        }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total *= 3;
    }
    std::vector<int> sigma(m);
    for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < m; ++i) {
            sigma[i] = static_cast<int>(c % 3) - 1;
            c /= 3;
        }
        if (std::all_of(sigma.begin(), sigma.end(), [](int s) { return s == 0; })) {
            continue;
        }
        // sigma = sum_j beta_j v_j with the requested signs.
        std::vector<Constraint> in_s;
        for (std::size_t i = 0; i < m; ++i) {
            RationalVector a(r);
            for (std::size_t j = 0; j < r; ++j) {
                a[j] = vectors[j][i];
            }
            if (sigma[i] == 0) {
                in_s.push_back({a, 0, true});
            } else {
                for (auto& x : a) {
                    x *= -sigma[i];
                }
                in_s.push_back({a, -1, false});
            }
        }
        if (!fm_feasible(in_s, r)) {
            continue;
        }
        std::vector<Constraint> alpha;
        for (std::size_t i = 0; i < m; ++i) {
            RationalVector a(r);
            for (std::size_t j = 0; j < r; ++j) {
                a[j] = vectors[j][i];
            }
            alpha.push_back({a, 0, true});
        }
        for (std::size_t j = 0; j < r; ++j) {
            bool plus = false;
            bool minus = false;
            for (std::size_t i : support[j]) {
                plus = plus || sigma[i] > 0;
                minus = minus || sigma[i] < 0;
            }
            if (plus && minus) {
                continue;
            }
            RationalVector a(r);
            if (!plus && !minus) {
                a[j] = 1;
                alpha.push_back({a, 0, true});
            } else {
                a[j] = plus ? -1 : 1;
                alpha.push_back({a, -1, false});
            }
        }
        if (fm_feasible(alpha, r)) {
            return DiscordancePattern{sigma};
        }
    }
    return std::nullopt;
}

crnkit::Network random_network(std::mt19937_64& rng, std::size_t max_species, std::size_t max_reactions,
                               long max_coef) {
    std::uniform_int_distribution<std::size_t> species_count(1, max_species);
    std::uniform_int_distribution<std::size_t> reaction_count(1, max_reactions);
    std::uniform_int_distribution<long> coef(0, max_coef);
    std::bernoulli_distribution present(0.4);
    const std::size_t m = species_count(rng);
    const std::size_t target = reaction_count(rng);
    auto complex = [&] {
        std::vector<crnkit::Complex::Term> terms;
        for (std::size_t i = 0; i < m; ++i) {
            if (present(rng)) {
                const long c = std::max(1L, coef(rng));
                terms.emplace_back("X" + std::to_string(i + 1), c);
            }
        }
        return crnkit::Complex(std::move(terms));
    };
    std::vector<crnkit::Reaction> reactions;
    for (int attempt = 0; attempt < 1000 && reactions.size() < target; ++attempt) {
        crnkit::Reaction r{complex(), complex(), ""};
        if (r.reactant == r.product || std::find(reactions.begin(), reactions.end(), r) != reactions.end()) {
            continue;
        }
        r.label = "R" + std::to_string(reactions.size() + 1);
        reactions.push_back(std::move(r));
    }
    return crnkit::Network(std::move(reactions));
}

std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    std::vector<std::vector<std::size_t>> current;
    auto place = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(current);
            return;
        }
        for (std::size_t b = 0; b < current.size(); ++b) {
            current[b].push_back(i);
            self(self, i + 1);
            current[b].pop_back();
        }
        current.push_back({i});
        self(self, i + 1);
        current.pop_back();
    };
    place(place, 0);
    return out;
}

std::size_t integer_rank(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) {
        return 0;
    }
    std::vector<RationalVector> a;
    for (const auto& row : rows) {
        a.emplace_back(row.begin(), row.end());
    }
    const std::size_t cols = a.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            const Rational f = a[i][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) {
                a[i][k] -= f * a[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

bool partition_independent(const crnkit::Network& net, const std::vector<std::vector<std::size_t>>& blocks) {
    const auto vectors = reaction_vectors(net);
    std::size_t sum = 0;
    for (const auto& block : blocks) {
        std::vector<std::vector<long>> rows;
        for (std::size_t j : block) {
            rows.push_back(vectors[j]);
        }
        sum += integer_rank(rows);
    }
    return sum == integer_rank(vectors);
}

bool refines(const std::vector<std::vector<std::size_t>>& fine, const std::vector<std::vector<std::size_t>>& coarse) {
    return std::all_of(fine.begin(), fine.end(), [&](const std::vector<std::size_t>& block) {
        return std::any_of(coarse.begin(), coarse.end(), [&](const std::vector<std::size_t>& big) {
            return std::all_of(block.begin(), block.end(),
                               [&](std::size_t j) { return std::find(big.begin(), big.end(), j) != big.end(); });
        });
    });
}

}  // namespace oracle
