#include "crnkit/ratlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace crnkit {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("RationalMatrix: ragged initializer");
        }
        for (long v : r) {
            entries_.emplace_back(v);
        }
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw std::invalid_argument("RationalMatrix::from_rows: row length mismatch");
        }
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) {
            throw std::invalid_argument("RationalMatrix::from_columns: column length mismatch");
        }
        for (std::size_t i = 0; i < rows; ++i) {
            m(i, j) = columns[j][i];
        }
    }
    return m;
}

RationalVector RationalMatrix::column(std::size_t j) const {
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> columns) const {
    RationalMatrix out(rows_, columns.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < columns.size(); ++k) {
            out(i, k) = (*this)(i, columns[k]);
        }
    }
    return out;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> rows) const {
    RationalMatrix out(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::copy(row(rows[k]).begin(), row(rows[k]).end(), out.row(k).begin());
    }
    return out;
}

bool RationalMatrix::is_zero() const {
    return crnkit::is_zero(entries_);
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j != 0) {
                os << ' ';
            }
            os << crnkit::to_string((*this)(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix difference: dimension mismatch");
    }
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) - b(i, j);
        }
    }
    return c;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    }
    RationalVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) != 0 && x[j] != 0) {
                y[i] += a(i, j) * x[j];
            }
        }
    }
    return y;
}

RowEchelon rref(RationalMatrix m) {
    RowEchelon out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < m.rows() && m(found, col) == 0) {
            ++found;
        }
        if (found == m.rows()) {
            continue;
        }
        if (found != pivot_row) {
            auto a = m.row(found);
            auto b = m.row(pivot_row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const Rational inv = 1 / m(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
            if (m(pivot_row, j) != 0) {
                m(pivot_row, j) *= inv;
            }
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, col) == 0) {
                continue;
            }
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (m(pivot_row, j) != 0) {
                    m(i, j) -= factor * m(pivot_row, j);
                }
            }
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m) {
    if (m.empty()) {
        return 0;
    }
    return rref(m).pivots.size();
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() == 0) {
        std::vector<RationalVector> basis;
        for (std::size_t j = 0; j < n; ++j) {
            RationalVector v(n);
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        RationalVector v(n);
        v[free_col] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            v[e.pivots[k]] = -e.reduced(k, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

int sign(const Rational& q) {
    return q.sign();
}

std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace crnkit
