#include "crnkit/network.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace crnkit {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Complex::Complex(std::vector<Term> terms) {
    for (auto& [name, coef] : terms) {
        if (coef < 0) {
            throw NetworkError("negative coefficient for species " + name);
        }
        if (coef == 0) {
            continue;
        }
        auto it = std::find_if(terms_.begin(), terms_.end(),
                               [&](const Term& t) { return t.first == name; });
        if (it != terms_.end()) {
            it->second += coef;
        } else {
            terms_.emplace_back(std::move(name), coef);
        }
    }
}

long Complex::coefficient(std::string_view species) const {
    for (const auto& [name, coef] : terms_) {
        if (name == species) {
            return coef;
        }
    }
    return 0;
}

std::string Complex::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [name, coef] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        if (coef != 1) {
            out += std::to_string(coef) + " ";
        }
        out += name;
    }
    return out;
}

std::map<std::string, long> Complex::as_map() const {
    return {terms_.begin(), terms_.end()};
}

bool operator==(const Complex& a, const Complex& b) {
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    return std::all_of(a.terms_.begin(), a.terms_.end(), [&](const Complex::Term& t) {
        return b.coefficient(t.first) == t.second;
    });
}

bool operator<(const Complex& a, const Complex& b) {
    return a.as_map() < b.as_map();
}

Reaction Reaction::reversed() const {
    return {product, reactant, label};
}

std::map<std::string, long> Reaction::reaction_vector() const {
    std::map<std::string, long> v;
    for (const auto& [name, coef] : product.terms()) {
        v[name] += coef;
    }
    for (const auto& [name, coef] : reactant.terms()) {
        v[name] -= coef;
    }
    std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
    return v;
}

std::string Reaction::to_string() const {
    return reactant.to_string() + " -> " + product.to_string();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_species_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_species_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

Complex parse_complex(std::string_view text, std::size_t line) {
    text = trim(text);
    if (text == "0") {
        return {};
    }
    if (text.empty()) {
        throw ParseError(line, "empty complex");
    }
    std::vector<Complex::Term> terms;
    std::size_t start = 0;
    while (true) {
        const std::size_t plus = text.find('+', start);
        std::string_view term = trim(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start));
        if (term.empty()) {
            throw ParseError(line, "missing term in complex '" + std::string(text) + "'");
        }
        long coef = 1;
        std::size_t i = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
            ++i;
        }
        if (i > 0) {
            auto [ptr, ec] = std::from_chars(term.data(), term.data() + i, coef);
            if (ec != std::errc() || coef <= 0) {
                throw ParseError(line, "bad coefficient in '" + std::string(term) + "'");
            }
        }
        std::string_view name = trim(term.substr(i));
        if (name.empty() || !is_species_start(name.front()) ||
            !std::all_of(name.begin(), name.end(), is_species_char)) {
            throw ParseError(line, "bad species token '" + std::string(term) + "'");
        }
        terms.emplace_back(std::string(name), coef);
        if (plus == std::string_view::npos) {
            break;
        }
        start = plus + 1;
    }
    return Complex(std::move(terms));
}

void validate(const std::vector<Reaction>& reactions) {
    if (reactions.empty()) {
        throw NetworkError("a network needs at least one reaction");
    }
    for (std::size_t i = 0; i < reactions.size(); ++i) {
        if (reactions[i].reactant == reactions[i].product) {
            throw NetworkError("trivial reaction " + reactions[i].to_string());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (reactions[i] == reactions[j]) {
                throw NetworkError("duplicate reaction " + reactions[i].to_string());
            }
        }
    }
}

}  // namespace

Reaction make_reaction(std::string_view text) {
    const auto arrow = text.find("->");
    if (arrow == std::string_view::npos) {
        throw ParseError(1, "missing '->'");
    }
    return {parse_complex(text.substr(0, arrow), 1), parse_complex(text.substr(arrow + 2), 1), {}};
}

Network::Network(std::vector<Reaction> reactions) : reactions_(std::move(reactions)) {
    validate(reactions_);
    std::set<std::string> seen;
    for (const auto& r : reactions_) {
        for (const Complex* c : {&r.reactant, &r.product}) {
            for (const auto& [name, coef] : c->terms()) {
                if (seen.insert(name).second) {
                    species_.push_back(name);
                }
            }
        }
    }
}

std::size_t Network::species_index(std::string_view name) const {
    auto it = std::find(species_.begin(), species_.end(), name);
    if (it == species_.end()) {
        throw NetworkError("unknown species " + std::string(name));
    }
    return static_cast<std::size_t>(it - species_.begin());
}

std::optional<std::size_t> Network::find(const Reaction& reaction) const {
    auto it = std::find(reactions_.begin(), reactions_.end(), reaction);
    if (it == reactions_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - reactions_.begin());
}

std::optional<std::size_t> Network::find_label(std::string_view label) const {
    auto it = std::find_if(reactions_.begin(), reactions_.end(),
                           [&](const Reaction& r) { return r.label == label; });
    if (it == reactions_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - reactions_.begin());
}

bool Network::identical_to(const Network& other) const {
    if (species_ != other.species_ || reactions_.size() != other.reactions_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < reactions_.size(); ++i) {
        const auto& a = reactions_[i];
        const auto& b = other.reactions_[i];
        if (!(a == b) || a.label != b.label || a.reactant.terms() != b.reactant.terms() ||
            a.product.terms() != b.product.terms()) {
            return false;
        }
    }
    return true;
}

Network parse_network(std::string_view text) {
    std::vector<Reaction> reactions;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::string label;
        if (const auto at = line.find('@'); at != std::string_view::npos) {
            label = std::string(trim(line.substr(at + 1)));
            if (label.empty() || label.find_first_of(" \t") != std::string::npos) {
                throw ParseError(line_no, "bad label");
            }
            line = trim(line.substr(0, at));
        }
        bool reversible = false;
        std::size_t arrow = line.find("<->");
        std::size_t arrow_len = 3;
        if (arrow != std::string_view::npos) {
            reversible = true;
        } else {
            arrow = line.find("->");
            arrow_len = 2;
        }
        if (arrow == std::string_view::npos) {
            throw ParseError(line_no, "expected '->' or '<->'");
        }
        Complex lhs = parse_complex(line.substr(0, arrow), line_no);
        Complex rhs = parse_complex(line.substr(arrow + arrow_len), line_no);
        std::vector<Reaction> produced{{lhs, rhs, label}};
        if (reversible) {
            produced.push_back({rhs, lhs, label.empty() ? label : label + "_rev"});
        }
        for (auto& r : produced) {
            if (r.reactant == r.product) {
                throw ParseError(line_no, "trivial reaction " + r.to_string());
            }
            if (std::find(reactions.begin(), reactions.end(), r) != reactions.end()) {
                throw ParseError(line_no, "duplicate reaction " + r.to_string());
            }
            reactions.push_back(std::move(r));
        }
    }
    if (reactions.empty()) {
        throw ParseError(line_no, "no reactions");
    }
    return Network(std::move(reactions));
}

std::string serialize_network(const Network& net) {
    std::ostringstream os;
    for (const auto& r : net.reactions()) {
        os << r.to_string();
        if (!r.label.empty()) {
            os << " @ " << r.label;
        }
        os << '\n';
    }
    return os.str();
}

Network subnetwork(const Network& net, const std::vector<std::size_t>& indices) {
    if (indices.empty()) {
        throw NetworkError("subnetwork: empty reaction selection");
    }
    std::vector<Reaction> picked;
    std::set<std::size_t> seen;
    for (std::size_t i : indices) {
        if (i >= net.reaction_count()) {
            throw NetworkError("subnetwork: reaction index " + std::to_string(i) + " out of range");
        }
        if (!seen.insert(i).second) {
            throw NetworkError("subnetwork: repeated reaction index " + std::to_string(i));
        }
        picked.push_back(net.reactions()[i]);
    }
    return Network(std::move(picked));
}

Network union_networks(const Network& a, const Network& b) {
    std::vector<Reaction> all = a.reactions();
    for (const auto& r : b.reactions()) {
        if (!a.contains(r)) {
            all.push_back(r);
        }
    }
    return Network(std::move(all));
}

std::vector<Reaction> common_reactions(const Network& a, const Network& b) {
    std::vector<Reaction> out;
    for (const auto& r : a.reactions()) {
        if (b.contains(r)) {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<Reaction> difference(const Network& a, const Network& b) {
    std::vector<Reaction> out;
    for (const auto& r : a.reactions()) {
        if (!b.contains(r)) {
            out.push_back(r);
        }
    }
    return out;
}

NetworkMatrices build_matrices(const Network& net) {
    NetworkMatrices out;
    auto index_of = [&](const Complex& c) {
        auto it = std::find(out.complexIndex.begin(), out.complexIndex.end(), c);
        if (it != out.complexIndex.end()) {
            return static_cast<std::size_t>(it - out.complexIndex.begin());
        }
        out.complexIndex.push_back(c);
        return out.complexIndex.size() - 1;
    };
    for (const auto& r : net.reactions()) {
        out.reactantOf.push_back(index_of(r.reactant));
        out.productOf.push_back(index_of(r.product));
    }
    const std::size_t m = net.species_count();
    const std::size_t n = out.complexIndex.size();
    const std::size_t r = net.reaction_count();

    out.Y = RationalMatrix(m, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (const auto& [name, coef] : out.complexIndex[c].terms()) {
            out.Y(net.species_index(name), c) = coef;
        }
    }
    out.IaPlus = RationalMatrix(n, r);
    out.IaMinus = RationalMatrix(n, r);
    for (std::size_t j = 0; j < r; ++j) {
        out.IaPlus(out.productOf[j], j) = 1;
        out.IaMinus(out.reactantOf[j], j) = 1;
    }
    out.Ia = out.IaPlus - out.IaMinus;
    out.N = out.Y * out.Ia;
    out.NMinus = out.Y * out.IaMinus;
    return out;
}

RationalMatrix stoichiometric_matrix(const Network& net) {
    const auto& species = net.species();
    RationalMatrix n(species.size(), net.reaction_count());
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
        for (const auto& [name, v] : net.reactions()[j].reaction_vector()) {
            n(net.species_index(name), j) = v;
        }
    }
    return n;
}

}  // namespace crnkit
