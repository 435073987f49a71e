#pragma once

// Exact linear feasibility over the rationals.

#include "crnkit/ratlin.hpp"

#include <optional>
#include <span>
#include <vector>

namespace crnkit {

struct LinearEquality {
    RationalVector coefficients;
    Rational rhs;
};

/// Equalities plus optional per-variable bounds. Strict inequalities are
/// expressed by the caller as bounds at +-1 (every cone used here is
/// scale-invariant).
class LinearSystem {
public:
    explicit LinearSystem(std::size_t variables);

    std::size_t variables() const noexcept { return lower_.size(); }

    void add_equality(RationalVector coefficients, Rational rhs);
    void set_lower(std::size_t var, Rational bound);
    void set_upper(std::size_t var, Rational bound);
    void fix(std::size_t var, const Rational& value);

    const std::vector<LinearEquality>& equalities() const noexcept { return equalities_; }
    const std::optional<Rational>& lower(std::size_t var) const { return lower_[var]; }
    const std::optional<Rational>& upper(std::size_t var) const { return upper_[var]; }

    /// Exact substitution check.
    bool satisfied_by(std::span<const Rational> point) const;

private:
    std::vector<LinearEquality> equalities_;
    std::vector<std::optional<Rational>> lower_;
    std::vector<std::optional<Rational>> upper_;
};

/// Phase-1 simplex with Bland's rule. Returns a point satisfying every
/// constraint exactly, or nullopt when the system is infeasible.
std::optional<RationalVector> lp_feasible(const LinearSystem& system);

}  // namespace crnkit
