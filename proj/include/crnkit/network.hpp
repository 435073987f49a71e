#pragma once

// Reaction networks: complexes, reactions, the .crn text format and
// reaction-set algebra.

#include "crnkit/ratlin.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crnkit {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class NetworkError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-negative integer combination of species. Terms keep the order in
/// which they were written; equality ignores that order.
class Complex {
public:
    using Term = std::pair<std::string, long>;

    Complex() = default;
    explicit Complex(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    long coefficient(std::string_view species) const;
    std::string to_string() const;

    std::map<std::string, long> as_map() const;

    friend bool operator==(const Complex& a, const Complex& b);
    friend bool operator<(const Complex& a, const Complex& b);

private:
    std::vector<Term> terms_;
};

struct Reaction {
    Complex reactant;
    Complex product;
    std::string label;

    Reaction reversed() const;
    /// product - reactant, keyed by species.
    std::map<std::string, long> reaction_vector() const;
    std::string to_string() const;

    /// Structural identity; labels are ignored.
    friend bool operator==(const Reaction& a, const Reaction& b) {
        return a.reactant == b.reactant && a.product == b.product;
    }
};

Reaction make_reaction(std::string_view text);

class Network {
public:
    explicit Network(std::vector<Reaction> reactions);

    const std::vector<std::string>& species() const noexcept { return species_; }
    const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
    std::size_t species_count() const noexcept { return species_.size(); }
    std::size_t reaction_count() const noexcept { return reactions_.size(); }

    std::size_t species_index(std::string_view name) const;
    std::optional<std::size_t> find(const Reaction& reaction) const;
    std::optional<std::size_t> find_label(std::string_view label) const;
    bool contains(const Reaction& reaction) const { return find(reaction).has_value(); }

    /// Same species order, reactions and labels.
    bool identical_to(const Network& other) const;

private:
    std::vector<std::string> species_;
    std::vector<Reaction> reactions_;
};

Network parse_network(std::string_view text);
std::string serialize_network(const Network& net);

Network subnetwork(const Network& net, const std::vector<std::size_t>& indices);
Network union_networks(const Network& a, const Network& b);
std::vector<Reaction> common_reactions(const Network& a, const Network& b);
/// Reactions of a that do not occur in b.
std::vector<Reaction> difference(const Network& a, const Network& b);

struct NetworkMatrices {
    RationalMatrix Y;
    RationalMatrix Ia;
    RationalMatrix IaPlus;
    RationalMatrix IaMinus;
    RationalMatrix N;
    RationalMatrix NMinus;
    std::vector<Complex> complexIndex;
    std::vector<std::size_t> reactantOf;  // complex index per reaction
    std::vector<std::size_t> productOf;
};

NetworkMatrices build_matrices(const Network& net);
RationalMatrix stoichiometric_matrix(const Network& net);

}  // namespace crnkit
