#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

/// Dense matrix over exact rationals. Optional row/column labels travel with
/// the matrix so kernel bases and column selections keep their reaction and
/// species names. Labels are metadata: equality compares dimensions and
/// entries only.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<int>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw Error("ragged matrix initializer");
            for (int v : row)
                entries_.emplace_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& at(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return entries_[r * cols_ + c];
    }
    const Rational& at(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return entries_[r * cols_ + c];
    }

    std::vector<std::string>& row_labels() { return row_labels_; }
    std::vector<std::string>& col_labels() { return col_labels_; }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    std::vector<Rational> row(std::size_t r) const {
        std::vector<Rational> out(cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            out[c] = at(r, c);
        return out;
    }

    std::vector<Rational> column(std::size_t c) const {
        std::vector<Rational> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = at(r, c);
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        t.row_labels_ = col_labels_;
        t.col_labels_ = row_labels_;
        return t;
    }

    /// Selects the given columns (in the given order), labels included.
    Matrix columns(const std::vector<std::size_t>& which) const {
        Matrix out(rows_, which.size());
        out.row_labels_ = row_labels_;
        if (!col_labels_.empty())
            out.col_labels_.reserve(which.size());
        for (std::size_t j = 0; j < which.size(); ++j) {
            if (which[j] >= cols_)
                throw Error("column index out of range");
            for (std::size_t r = 0; r < rows_; ++r)
                out.at(r, j) = at(r, which[j]);
            if (!col_labels_.empty())
                out.col_labels_.push_back(col_labels_[which[j]]);
        }
        return out;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Rational& v) { return v.is_zero(); });
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw Error("matrix product dimension mismatch: " + std::to_string(a.cols_) +
                        " vs " + std::to_string(b.rows_));
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (!bkj.is_zero())
                        out.at(i, j) += aik * bkj;
                }
            }
        out.row_labels_ = a.row_labels_;
        out.col_labels_ = b.col_labels_;
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns; // strictly increasing
};

/// Gauss-Jordan elimination over exact rationals.
inline RrefResult rref(const Matrix& m) {
    RrefResult result{m, {}};
    Matrix& a = result.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t row = pivot_row;
        while (row < a.rows() && a.at(row, col).is_zero())
            ++row;
        if (row == a.rows())
            continue;
        if (row != pivot_row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(row, c), a.at(pivot_row, c));
        const Rational inv = Rational(1) / a.at(pivot_row, col);
        for (std::size_t c = col; c < a.cols(); ++c)
            a.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col).is_zero())
                continue;
            const Rational factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= factor * a.at(pivot_row, c);
        }
        result.pivot_columns.push_back(col);
        ++pivot_row;
    }
    return result;
}

inline std::size_t rank(const Matrix& m) {
    return rref(m).pivot_columns.size();
}

/// Right null-space basis in the canonical free-variable form induced by the
/// RREF: one column per free column f with x_f = 1 and the pivot coordinates
/// read off the reduced matrix. Row labels are the input's column labels.
inline Matrix kernel_basis(const Matrix& m) {
    const RrefResult rr = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t p = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (p < rr.pivot_columns.size() && rr.pivot_columns[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    Matrix basis(m.cols(), free_cols.size());
    basis.row_labels() = m.col_labels();
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t f = free_cols[j];
        basis.at(f, j) = 1;
        for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
            basis.at(rr.pivot_columns[i], j) = -rr.reduced.at(i, f);
        if (!m.col_labels().empty())
            basis.col_labels().push_back(m.col_labels()[f]);
    }
    return basis;
}

/// Horizontal concatenation. Blocks with row labels are aligned by label to
/// the first block's order; unlabeled blocks must agree on the row count.
inline Matrix hconcat(const std::vector<Matrix>& blocks) {
    if (blocks.empty())
        return {};
    const Matrix& first = blocks.front();
    const bool labeled = !first.row_labels().empty();
    std::map<std::string, std::size_t> order;
    if (labeled)
        for (std::size_t i = 0; i < first.row_labels().size(); ++i)
            order.emplace(first.row_labels()[i], i);

    std::size_t total_cols = 0;
    for (const Matrix& b : blocks) {
        if (labeled) {
            if (b.row_labels().size() != first.rows())
                throw Error("hconcat: row label sets differ");
            for (const std::string& label : b.row_labels())
                if (!order.count(label))
                    throw Error("hconcat: unknown row label '" + label + "'");
        } else if (b.rows() != first.rows()) {
            throw Error("hconcat: row count mismatch");
        }
        total_cols += b.cols();
    }

    Matrix out(first.rows(), total_cols);
    out.row_labels() = first.row_labels();
    std::size_t offset = 0;
    for (const Matrix& b : blocks) {
        for (std::size_t c = 0; c < b.cols(); ++c)
            for (std::size_t r = 0; r < b.rows(); ++r) {
                const std::size_t target = labeled ? order.at(b.row_labels()[r]) : r;
                out.at(target, offset + c) = b.at(r, c);
            }
        offset += b.cols();
    }
    return out;
}

/// True iff the column spans of the blocks form a direct sum, i.e. the block
/// ranks add up to the rank of the concatenation.
inline bool spans_direct_sum(const std::vector<Matrix>& blocks) {
    std::size_t sum = 0;
    for (const Matrix& b : blocks)
        sum += rank(b);
    return sum == rank(hconcat(blocks));
}

} // namespace crn
