#include "crnkit/lp.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace crnkit {

LinearSystem::LinearSystem(std::size_t variables) : lower_(variables), upper_(variables) {}

void LinearSystem::add_equality(RationalVector coefficients, Rational rhs) {
    if (coefficients.size() != variables()) {
        throw std::invalid_argument("LinearSystem: equality has wrong variable count");
    }
    equalities_.push_back({std::move(coefficients), std::move(rhs)});
}

void LinearSystem::set_lower(std::size_t var, Rational bound) {
    lower_.at(var) = std::move(bound);
}

void LinearSystem::set_upper(std::size_t var, Rational bound) {
    upper_.at(var) = std::move(bound);
}

void LinearSystem::fix(std::size_t var, const Rational& value) {
    lower_.at(var) = value;
    upper_.at(var) = value;
}

bool LinearSystem::satisfied_by(std::span<const Rational> point) const {
    if (point.size() != variables()) {
        return false;
    }
    for (std::size_t j = 0; j < variables(); ++j) {
        if (lower_[j] && point[j] < *lower_[j]) {
            return false;
        }
        if (upper_[j] && point[j] > *upper_[j]) {
            return false;
        }
    }
    for (const auto& eq : equalities_) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < variables(); ++j) {
            if (eq.coefficients[j] != 0) {
                lhs += eq.coefficients[j] * point[j];
            }
        }
        if (lhs != eq.rhs) {
            return false;
        }
    }
    return true;
}

namespace {

// How an original variable is expressed through non-negative columns.
struct Substitution {
    enum class Kind { Fixed, Shifted, Reflected, Split } kind;
    Rational offset;          // fixed value, lower bound, or upper bound
    std::size_t column = 0;   // y (or y+ for Split)
    std::size_t column2 = 0;  // y- for Split
};

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1)), basis_(rows) {}

    Rational& at(std::size_t i, std::size_t j) { return data_[i * (cols_ + 1) + j]; }
    Rational& rhs(std::size_t i) { return at(i, cols_); }
    Rational& cost(std::size_t j) { return at(rows_, j); }
    std::size_t& basis(std::size_t i) { return basis_[i]; }

    void pivot(std::size_t p, std::size_t e) {
        const std::size_t width = cols_ + 1;
        Rational* prow = &data_[p * width];
        const Rational inv = 1 / prow[e];
        for (std::size_t j = 0; j < width; ++j) {
            if (prow[j] != 0) {
                prow[j] *= inv;
            }
        }
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == p) {
                continue;
            }
            Rational* row = &data_[i * width];
            if (row[e] == 0) {
                continue;
            }
            const Rational factor = row[e];
            for (std::size_t j = 0; j < width; ++j) {
                if (prow[j] != 0) {
                    row[j] -= factor * prow[j];
                }
            }
        }
        basis_[p] = e;
    }

    // Phase 1 with Bland's rule; true when the artificial sum reaches zero.
    bool minimize_artificials() {
        while (true) {
            if (cost(cols_) == 0) {
                return true;
            }
            std::size_t entering = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (cost(j) < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == cols_) {
                return false;
            }
            std::size_t leaving = rows_;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (at(i, entering) <= 0) {
                    continue;
                }
                Rational ratio = rhs(i) / at(i, entering);
                if (leaving == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == rows_) {
                // Unbounded direction in phase 1 cannot occur: the objective is
                // bounded below by zero.
                throw std::logic_error("lp_feasible: unbounded phase-1 objective");
            }
            pivot(leaving, entering);
        }
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RationalVector> lp_feasible(const LinearSystem& system) {
    const std::size_t n = system.variables();

    std::vector<Substitution> subs(n);
    std::vector<std::pair<std::size_t, Rational>> range_rows;  // (column, upper - lower)
    std::size_t columns = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& lo = system.lower(j);
        const auto& hi = system.upper(j);
        if (lo && hi) {
            if (*lo > *hi) {
                return std::nullopt;
            }
            if (*lo == *hi) {
                subs[j] = {Substitution::Kind::Fixed, *lo};
                continue;
            }
            subs[j] = {Substitution::Kind::Shifted, *lo, columns++};
            range_rows.emplace_back(subs[j].column, *hi - *lo);
        } else if (lo) {
            subs[j] = {Substitution::Kind::Shifted, *lo, columns++};
        } else if (hi) {
            subs[j] = {Substitution::Kind::Reflected, *hi, columns++};
        } else {
            subs[j] = {Substitution::Kind::Split, Rational(0), columns, columns + 1};
            columns += 2;
        }
    }
    const std::size_t slack_base = columns;
    columns += range_rows.size();

    const std::size_t eq_rows = system.equalities().size();
    const std::size_t rows = eq_rows + range_rows.size();
    Tableau t(rows, columns);

    for (std::size_t i = 0; i < eq_rows; ++i) {
        const auto& eq = system.equalities()[i];
        Rational b = eq.rhs;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& a = eq.coefficients[j];
            if (a == 0) {
                continue;
            }
            const auto& s = subs[j];
            switch (s.kind) {
                case Substitution::Kind::Fixed:
                    b -= a * s.offset;
                    break;
                case Substitution::Kind::Shifted:
                    b -= a * s.offset;
                    t.at(i, s.column) += a;
                    break;
                case Substitution::Kind::Reflected:
                    b -= a * s.offset;
                    t.at(i, s.column) -= a;
                    break;
                case Substitution::Kind::Split:
                    t.at(i, s.column) += a;
                    t.at(i, s.column2) -= a;
                    break;
            }
        }
        if (b < 0) {
            for (std::size_t j = 0; j < columns; ++j) {
                t.at(i, j) = -t.at(i, j);
            }
            b = -b;
        }
        t.rhs(i) = std::move(b);
        // Artificial variables are implicit; their ids sort after all columns.
        t.basis(i) = columns + i;
        for (std::size_t j = 0; j < columns; ++j) {
            t.cost(j) -= t.at(i, j);
        }
        t.cost(columns) -= t.rhs(i);
    }
    for (std::size_t k = 0; k < range_rows.size(); ++k) {
        const std::size_t i = eq_rows + k;
        t.at(i, range_rows[k].first) = 1;
        t.at(i, slack_base + k) = 1;
        t.rhs(i) = range_rows[k].second;
        t.basis(i) = slack_base + k;
    }

    if (!t.minimize_artificials()) {
        return std::nullopt;
    }

    RationalVector y(columns);
    for (std::size_t i = 0; i < rows; ++i) {
        if (t.basis(i) < columns) {
            y[t.basis(i)] = t.rhs(i);
        }
    }
    RationalVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& s = subs[j];
        switch (s.kind) {
            case Substitution::Kind::Fixed:
                x[j] = s.offset;
                break;
            case Substitution::Kind::Shifted:
                x[j] = s.offset + y[s.column];
                break;
            case Substitution::Kind::Reflected:
                x[j] = s.offset - y[s.column];
                break;
            case Substitution::Kind::Split:
                x[j] = y[s.column] - y[s.column2];
                break;
        }
    }
    return x;
}

}  // namespace crnkit
