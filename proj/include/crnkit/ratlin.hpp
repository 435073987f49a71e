#pragma once

// Exact rational linear algebra: dense matrices over GMP rationals, row
// reduction, rank and nullspace.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace crnkit {

using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
    static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    std::span<Rational> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
    RationalVector column(std::size_t j) const;

    RationalMatrix transpose() const;
    /// Submatrix made of the given columns, in the given order.
    RationalMatrix select_columns(std::span<const std::size_t> columns) const;
    RationalMatrix select_rows(std::span<const std::size_t> rows) const;
    bool is_zero() const;

    std::string to_string() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);

struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RowEchelon rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Canonical free-variable basis of {v : M v = 0}, one vector per non-pivot
/// column, with a 1 in that column.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

bool is_zero(std::span<const Rational> v);
int sign(const Rational& q);
std::string to_string(const Rational& q);

}  // namespace crnkit
