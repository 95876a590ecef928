#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tiealg/errors.hpp"

namespace tiealg {

// Dense exact matrix over a field scalar (BigRational or RationalFunction).
// The scalar type needs T(int), +, -, *, /, == and unary negation; everything
// here is plain Gaussian elimination with exact division — no pivoting
// heuristics are needed over exact fields.
template <class T>
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const ExactMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    ExactMatrix operator*(const ExactMatrix& other) const {
        TIEALG_CHECK(cols_ == other.rows_);
        ExactMatrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) {
                    const T& b = other.at(k, j);
                    if (b == T(0)) continue;
                    out.at(i, j) = out.at(i, j) + a * b;
                }
            }
        return out;
    }

    ExactMatrix operator+(const ExactMatrix& other) const {
        TIEALG_CHECK(rows_ == other.rows_ && cols_ == other.cols_);
        ExactMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
        return out;
    }

    ExactMatrix operator-(const ExactMatrix& other) const {
        TIEALG_CHECK(rows_ == other.rows_ && cols_ == other.cols_);
        ExactMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
        return out;
    }

    ExactMatrix scaled(const T& factor) const {
        ExactMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * factor;
        return out;
    }

    ExactMatrix transposed() const {
        ExactMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    bool is_zero() const {
        for (const T& x : data_)
            if (!(x == T(0))) return false;
        return true;
    }

    T trace() const {
        TIEALG_CHECK(rows_ == cols_);
        T sum(0);
        for (std::size_t i = 0; i < rows_; ++i) sum = sum + at(i, i);
        return sum;
    }

    // Kronecker product: (A ⊗ B) acts on the tensor basis ordered A-major.
    static ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t ar = 0; ar < a.rows_; ++ar)
            for (std::size_t ac = 0; ac < a.cols_; ++ac) {
                const T& f = a.at(ar, ac);
                if (f == T(0)) continue;
                for (std::size_t br = 0; br < b.rows_; ++br)
                    for (std::size_t bc = 0; bc < b.cols_; ++bc)
                        out.at(ar * b.rows_ + br, ac * b.cols_ + bc) = f * b.at(br, bc);
            }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// Incremental row-echelon accumulator: feed rows one at a time, track rank
// and pivot columns.  Rows are stored reduced; each new row is eliminated
// against the existing pivots before a fresh pivot is extracted.
template <class T>
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    // Returns true when the row added a new pivot (was independent).
    bool add_row(std::vector<T> row) {
        TIEALG_CHECK(row.size() == cols_);
        reduce(row);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row[c] == T(0)) continue;
            const T inv = T(1) / row[c];
            for (std::size_t j = c; j < cols_; ++j) row[j] = row[j] * inv;
            pivots_.emplace(c, std::move(row));
            return true;
        }
        return false;
    }

    // Eliminates the stored pivots from `row` in place.
    void reduce(std::vector<T>& row) const {
        for (const auto& [col, pivot_row] : pivots_) {
            const T factor = row[col];
            if (factor == T(0)) continue;
            for (std::size_t j = col; j < cols_; ++j)
                row[j] = row[j] - factor * pivot_row[j];
        }
    }

    bool reduces_to_zero(std::vector<T> row) const {
        reduce(row);
        for (const T& x : row)
            if (!(x == T(0))) return false;
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }

    std::vector<std::size_t> pivot_columns() const {
        std::vector<std::size_t> cols;
        cols.reserve(pivots_.size());
        for (const auto& [col, row] : pivots_) cols.push_back(col);
        return cols;
    }

private:
    std::size_t cols_;
    std::map<std::size_t, std::vector<T>> pivots_;  // pivot column -> reduced row
};

template <class T>
std::size_t rank(const ExactMatrix<T>& m) {
    RowReducer<T> reducer(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<T> row;
        row.reserve(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        reducer.add_row(std::move(row));
    }
    return reducer.rank();
}

// Basis of { x : M x = 0 }, one vector per free column of the echelon form.
template <class T>
std::vector<std::vector<T>> nullspace(const ExactMatrix<T>& m) {
    // Reduced row echelon form.
    ExactMatrix<T> a = m;
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t found = pivot_row;
        while (found < a.rows() && a.at(found, c) == T(0)) ++found;
        if (found == a.rows()) continue;
        if (found != pivot_row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(found, j), a.at(pivot_row, j));
        const T inv = T(1) / a.at(pivot_row, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(pivot_row, j) = a.at(pivot_row, j) * inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row) continue;
            const T factor = a.at(r, c);
            if (factor == T(0)) continue;
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(r, j) = a.at(r, j) - factor * a.at(pivot_row, j);
        }
        pivot_col_of_row.push_back(c);
        ++pivot_row;
    }

    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(a.cols(), T(0));
        v[free_col] = T(1);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = T(0) - a.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves M x = rhs exactly; empty when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const ExactMatrix<T>& m, const std::vector<T>& rhs) {
    TIEALG_CHECK(rhs.size() == m.rows());
    ExactMatrix<T> a(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a.at(r, c) = m.at(r, c);
        a.at(r, m.cols()) = rhs[r];
    }
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < a.rows(); ++c) {
        std::size_t found = pivot_row;
        while (found < a.rows() && a.at(found, c) == T(0)) ++found;
        if (found == a.rows()) continue;
        if (found != pivot_row)
            for (std::size_t j = 0; j <= m.cols(); ++j) std::swap(a.at(found, j), a.at(pivot_row, j));
        const T inv = T(1) / a.at(pivot_row, c);
        for (std::size_t j = c; j <= m.cols(); ++j) a.at(pivot_row, j) = a.at(pivot_row, j) * inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row) continue;
            const T factor = a.at(r, c);
            if (factor == T(0)) continue;
            for (std::size_t j = c; j <= m.cols(); ++j)
                a.at(r, j) = a.at(r, j) - factor * a.at(pivot_row, j);
        }
        pivot_col_of_row.push_back(c);
        ++pivot_row;
    }
    // Inconsistent when a zero row has nonzero right-hand side.
    for (std::size_t r = pivot_row; r < a.rows(); ++r)
        if (!(a.at(r, m.cols()) == T(0))) return std::nullopt;
    std::vector<T> x(m.cols(), T(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        x[pivot_col_of_row[r]] = a.at(r, m.cols());
    return x;
}

}  // namespace tiealg
