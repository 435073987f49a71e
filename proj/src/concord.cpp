#include "crnkit/concord.hpp"

#include "crnkit/lp.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace crnkit {

std::uint64_t node_budget_from_env() {
    const char* env = std::getenv("CRNKIT_BUDGET");
    if (env == nullptr || *env == '\0') {
        return default_node_budget;
    }
    const std::string text(env);
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
        throw std::invalid_argument("CRNKIT_BUDGET must be a positive integer");
    }
    return value;
}

namespace {

// Allowed signs of alpha_r given the signs of sigma on the reactant support.
enum class Allowed { Zero, Plus, Minus, Any, Open };

Allowed allowed_signs(const std::vector<std::size_t>& support, const std::vector<int>& sign) {
    bool plus = false;
    bool minus = false;
    for (std::size_t x : support) {
        plus = plus || sign[x] > 0;
        minus = minus || sign[x] < 0;
    }
    if (plus && minus) {
        return Allowed::Any;
    }
    if (plus) {
        return Allowed::Plus;
    }
    if (minus) {
        return Allowed::Minus;
    }
    return Allowed::Zero;
}

struct BudgetExceeded {};

class SignSearch {
public:
    SignSearch(const Network& net, std::uint64_t budget)
        : net_(net), n_(stoichiometric_matrix(net)), budget_(budget) {
        const std::size_t m = net.species_count();
        const std::size_t r = net.reaction_count();
        support_.resize(r);
        std::vector<std::size_t> frequency(m, 0);
        for (std::size_t j = 0; j < r; ++j) {
            for (const auto& [name, coef] : net.reactions()[j].reactant.terms()) {
                const std::size_t x = net.species_index(name);
                support_[j].push_back(x);
                ++frequency[x];
            }
        }
        for (std::size_t x = 0; x < m; ++x) {
            if (frequency[x] > 0) {
                order_.push_back(x);
            }
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return frequency[a] > frequency[b]; });

        std::vector<std::size_t> position(m, 0);
        for (std::size_t d = 0; d < order_.size(); ++d) {
            position[order_[d]] = d;
        }
        determined_at_.resize(order_.size() + 1);
        for (std::size_t j = 0; j < r; ++j) {
            std::size_t depth = 0;
            for (std::size_t x : support_[j]) {
                depth = std::max(depth, position[x] + 1);
            }
            determined_at_[depth].push_back(j);
        }

        left_null_ = nullspace_basis(n_.transpose());
        const RowEchelon e = rref(n_);
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            auto row = e.reduced.row(k);
            kernel_rows_.emplace_back(row.begin(), row.end());
        }
        sign_.assign(m, 0);
        allowed_.assign(r, Allowed::Open);
    }

    ConcordanceVerdict run() {
        ConcordanceVerdict v;
        try {
            for (std::size_t j : determined_at_[0]) {
                allowed_[j] = Allowed::Zero;
            }
            if (visit(0, false)) {
                v.status = ConcordanceStatus::Discordant;
                v.witness = witness_;
            } else {
                v.status = ConcordanceStatus::Concordant;
            }
        } catch (const BudgetExceeded&) {
            v.status = ConcordanceStatus::Unknown;
        }
        v.searchNodes = nodes_;
        return v;
    }

private:
    std::optional<RationalVector> solve_sigma() const {
        const std::size_t m = net_.species_count();
        LinearSystem sys(m);
        for (const auto& w : left_null_) {
            sys.add_equality(w, 0);
        }
        for (std::size_t d = 0; d < depth_; ++d) {
            const std::size_t x = order_[d];
            if (sign_[x] > 0) {
                sys.set_lower(x, 1);
            } else if (sign_[x] < 0) {
                sys.set_upper(x, -1);
            } else {
                sys.fix(x, 0);
            }
        }
        return lp_feasible(sys);
    }

    std::optional<RationalVector> solve_alpha() const {
        const std::size_t r = net_.reaction_count();
        LinearSystem sys(r);
        for (const auto& row : kernel_rows_) {
            sys.add_equality(row, 0);
        }
        for (std::size_t j = 0; j < r; ++j) {
            switch (allowed_[j]) {
                case Allowed::Zero:
                    sys.fix(j, 0);
                    break;
                case Allowed::Plus:
                    sys.set_lower(j, 1);
                    break;
                case Allowed::Minus:
                    sys.set_upper(j, -1);
                    break;
                case Allowed::Any:
                case Allowed::Open:
                    break;
            }
        }
        return lp_feasible(sys);
    }

    bool forced_nonzero() const {
        return std::any_of(allowed_.begin(), allowed_.end(),
                           [](Allowed a) { return a == Allowed::Plus || a == Allowed::Minus; });
    }

    // Sign patterns whose nonzero part is empty: sigma must vanish on every
    // reactant species, and alpha = 0 is then the only choice.
    bool zero_pattern_witness() {
        std::vector<std::size_t> rows = order_;
        std::sort(rows.begin(), rows.end());
        const RationalMatrix restricted = n_.select_rows(rows);
        for (const auto& beta : nullspace_basis(restricted)) {
            RationalVector sigma = n_ * beta;
            if (!is_zero(sigma)) {
                witness_ = {RationalVector(net_.reaction_count()), std::move(sigma)};
                return true;
            }
        }
        return false;
    }

    // depth species of order_ are assigned; returns true when a witness is found.
    bool visit(std::size_t depth, bool any_nonzero) {
        if (++nodes_ > budget_) {
            throw BudgetExceeded{};
        }
        depth_ = depth;
        std::optional<RationalVector> sigma;
        if (any_nonzero) {
            sigma = solve_sigma();
            if (!sigma) {
                return false;
            }
        }
        if (depth == order_.size()) {
            if (!any_nonzero) {
                return zero_pattern_witness();
            }
            RationalVector alpha(net_.reaction_count());
            if (forced_nonzero()) {
                auto a = solve_alpha();
                if (!a) {
                    return false;
                }
                alpha = std::move(*a);
            }
            witness_ = {std::move(alpha), std::move(*sigma)};
            return true;
        }

        const std::size_t x = order_[depth];
        const int choices_nonzero[] = {1, -1, 0};
        const int choices_first[] = {1, 0};
        const std::span<const int> choices =
            any_nonzero ? std::span<const int>(choices_nonzero) : std::span<const int>(choices_first);
        for (int s : choices) {
            sign_[x] = s;
            bool constrained = false;
            for (std::size_t j : determined_at_[depth + 1]) {
                allowed_[j] = allowed_signs(support_[j], sign_);
                constrained = constrained || allowed_[j] != Allowed::Any;
            }
            bool alpha_ok = true;
            if (constrained && forced_nonzero() && depth + 1 < order_.size()) {
                alpha_ok = solve_alpha().has_value();
            }
            if (alpha_ok && visit(depth + 1, any_nonzero || s != 0)) {
                return true;
            }
            for (std::size_t j : determined_at_[depth + 1]) {
                allowed_[j] = Allowed::Open;
            }
            depth_ = depth;
        }
        sign_[x] = 0;
        return false;
    }

    const Network& net_;
    RationalMatrix n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<std::size_t>> support_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> determined_at_;
    std::vector<RationalVector> left_null_;
    std::vector<RationalVector> kernel_rows_;
    std::vector<int> sign_;
    std::vector<Allowed> allowed_;
    std::size_t depth_ = 0;
    SignWitness witness_;
};

}  // namespace

ConcordanceVerdict check_concordance(const Network& net, std::uint64_t node_budget) {
    return SignSearch(net, node_budget).run();
}

bool verify_witness(const Network& net, const SignWitness& w) {
    const RationalMatrix n = stoichiometric_matrix(net);
    if (w.alpha.size() != net.reaction_count() || w.sigma.size() != net.species_count()) {
        throw std::invalid_argument("verify_witness: dimension mismatch");
    }
    if (!is_zero(n * w.alpha) || is_zero(w.sigma)) {
        return false;
    }
    RationalMatrix augmented(n.rows(), n.cols() + 1);
    for (std::size_t i = 0; i < n.rows(); ++i) {
        for (std::size_t j = 0; j < n.cols(); ++j) {
            augmented(i, j) = n(i, j);
        }
        augmented(i, n.cols()) = w.sigma[i];
    }
    if (rank(augmented) != rank(n)) {
        return false;
    }
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
        bool plus = false;
        bool minus = false;
        bool any_nonzero = false;
        for (const auto& [name, coef] : net.reactions()[j].reactant.terms()) {
            const int s = sign(w.sigma[net.species_index(name)]);
            plus = plus || s > 0;
            minus = minus || s < 0;
            any_nonzero = any_nonzero || s != 0;
        }
        const int a = sign(w.alpha[j]);
        if (a > 0 && !plus) {
            return false;
        }
        if (a < 0 && !minus) {
            return false;
        }
        if (a == 0 && any_nonzero && !(plus && minus)) {
            return false;
        }
    }
    return true;
}

namespace {

DependenceResult positive_kernel_point(const RationalMatrix& m) {
    LinearSystem sys(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        sys.add_equality(RationalVector(row.begin(), row.end()), 0);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        sys.set_lower(j, 1);
    }
    auto point = lp_feasible(sys);
    if (!point) {
        return {};
    }
    return {true, std::move(*point)};
}

}  // namespace

DependenceResult is_positive_dependent(const Network& net) {
    return positive_kernel_point(stoichiometric_matrix(net));
}

DependenceResult is_conservative(const Network& net) {
    return positive_kernel_point(stoichiometric_matrix(net).transpose());
}

namespace {

class ContainerSearch {
public:
    ContainerSearch(const Network& net, std::uint64_t budget) : net_(net), budget_(budget) {}

    ConcordanceStatus status(const std::vector<bool>& chosen) {
        auto it = memo_.find(chosen);
        if (it != memo_.end()) {
            return it->second;
        }
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            if (chosen[j]) {
                idx.push_back(j);
            }
        }
        const ConcordanceStatus s = check_concordance(subnetwork(net_, idx), budget_).status;
        memo_.emplace(chosen, s);
        return s;
    }

    // Passes repeat until nothing is added: a reaction rejected early can fit
    // a larger container, since concordance is not inherited by subnetworks.
    std::vector<bool> grow(std::vector<bool> chosen, const std::vector<std::size_t>& sequence, bool& unknown_seen) {
        for (bool added = true; added;) {
            added = false;
            for (std::size_t j : sequence) {
                if (chosen[j]) {
                    continue;
                }
                chosen[j] = true;
                const ConcordanceStatus s = status(chosen);
                if (s == ConcordanceStatus::Unknown) {
                    unknown_seen = true;
                }
                if (s == ConcordanceStatus::Concordant) {
                    added = true;
                } else {
                    chosen[j] = false;
                }
            }
        }
        return chosen;
    }

    Network to_network(const std::vector<bool>& chosen) const {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            if (chosen[j]) {
                idx.push_back(j);
            }
        }
        return subnetwork(net_, idx);
    }

private:
    const Network& net_;
    std::uint64_t budget_;
    std::map<std::vector<bool>, ConcordanceStatus> memo_;
};

}  // namespace

M3crResult m3cr(const Network& net, const std::vector<Reaction>& mandatory, std::uint64_t node_budget,
                bool check_alternate_order) {
    if (mandatory.empty()) {
        throw NetworkError("m3cr: the mandatory reaction set is empty");
    }
    const std::size_t r = net.reaction_count();
    std::vector<bool> start(r, false);
    for (const auto& reaction : mandatory) {
        auto idx = net.find(reaction);
        if (!idx) {
            throw NetworkError("m3cr: mandatory reaction " + reaction.to_string() + " is not in the network");
        }
        start[*idx] = true;
    }
    ContainerSearch search(net, node_budget);
    const ConcordanceStatus base = search.status(start);
    if (base == ConcordanceStatus::Discordant) {
        throw NetworkError("m3cr: the mandatory subnetwork is discordant");
    }
    bool unknown_seen = base == ConcordanceStatus::Unknown;

    std::vector<std::size_t> forward(r);
    std::iota(forward.begin(), forward.end(), 0);
    const std::vector<bool> chosen = search.grow(start, forward, unknown_seen);

    bool maximal = !unknown_seen;
    std::vector<Reaction> excluded;
    for (std::size_t j = 0; j < r; ++j) {
        if (chosen[j]) {
            continue;
        }
        excluded.push_back(net.reactions()[j]);
        std::vector<bool> extended = chosen;
        extended[j] = true;
        if (search.status(extended) != ConcordanceStatus::Discordant) {
            maximal = false;
        }
    }

    M3crResult out{search.to_network(chosen), std::move(excluded), maximal, std::nullopt, std::nullopt};
    if (check_alternate_order) {
        std::vector<std::size_t> backward(forward.rbegin(), forward.rend());
        bool ignored = false;
        const std::vector<bool> other = search.grow(start, backward, ignored);
        out.orderIndependent = other == chosen;
        out.alternateContainer = search.to_network(other);
    }
    return out;
}

}  // namespace crnkit
