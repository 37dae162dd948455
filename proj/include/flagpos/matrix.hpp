#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "flagpos/errors.hpp"
#include "flagpos/rational.hpp"
#include "flagpos/subsets.hpp"

namespace flagpos {

/// Dense matrix over exact rationals. Row-major, 0-based accessors;
/// SubsetIndex arguments are 1-based as everywhere else.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    Mat(std::initializer_list<std::initializer_list<Rat>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ArgumentError("matrix literal: ragged rows");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<Rat>>& rows) {
        Mat m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw ArgumentError("from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Mat from_columns(const std::vector<std::vector<Rat>>& cols) {
        Mat m(cols.empty() ? 0 : cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw ArgumentError("from_columns: ragged columns");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    // i-th unit vector of R^n as an n x 1 column, 1-based i.
    static Mat basis_column(std::size_t n, std::size_t i) {
        if (i < 1 || i > n) throw ArgumentError("basis_column: index out of range");
        Mat m(n, 1);
        m(i - 1, 0) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<Rat> column(std::size_t j) const {
        std::vector<Rat> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Mat columns(std::size_t first, std::size_t count) const {
        if (first + count > cols_) throw ArgumentError("columns: range out of bounds");
        Mat m(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
        return m;
    }

    Mat row_range(std::size_t first, std::size_t count) const {
        if (first + count > rows_) throw ArgumentError("row_range: range out of bounds");
        Mat m(count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
        return m;
    }

    // [this | other], matching row counts.
    Mat hstack(const Mat& other) const {
        if (rows_ != other.rows_) throw ArgumentError("hstack: row count mismatch");
        Mat m(rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
        }
        return m;
    }

    // Square submatrix in the 1-based row set I and column set J.
    Mat submatrix(const SubsetIndex& I, const SubsetIndex& J) const {
        Mat m(I.members.size(), J.members.size());
        for (std::size_t i = 0; i < I.members.size(); ++i)
            for (std::size_t j = 0; j < J.members.size(); ++j)
                m(i, j) = (*this)(I.members[i] - 1, J.members[j] - 1);
        return m;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw ArgumentError("matrix product: inner dimension mismatch");
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend Mat operator*(const Rat& s, const Mat& a) {
        Mat c = a;
        for (auto& x : c.data_) x *= s;
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Exact determinant by fraction-free Bareiss elimination.
/// Denominators are cleared row by row first, so the elimination itself
/// runs over integers with exact interior divisions.
inline Rat det(const Mat& a) {
    if (!a.square()) throw ArgumentError("det: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return Rat(1);

    std::vector<Int> m(n * n);
    Int denom = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int d = 1;
        for (std::size_t j = 0; j < n; ++j) d = lcm(d, rat_den(a(i, j)));
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& q = a(i, j);
            m[i * n + j] = rat_num(q) * (d / rat_den(q));
        }
        denom *= d;
    }

    auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
    Int prev = 1;
    int sign = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (at(p, p) == 0) {
            std::size_t r = p + 1;
            while (r < n && at(r, p) == 0) ++r;
            if (r == n) return Rat(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(r, j));
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
            at(i, p) = 0;
        }
        prev = at(p, p);
    }
    Int result = at(n - 1, n - 1);
    if (sign < 0) result = -result;
    return Rat(result, denom);
}

/// Minor: determinant of the submatrix in rows I and columns J (1-based).
inline Rat minor(const Mat& a, const SubsetIndex& I, const SubsetIndex& J) {
    if (I.size() != J.size()) throw ArgumentError("minor: row/column subsets differ in size");
    if (I.n != static_cast<int>(a.rows()) || J.n != static_cast<int>(a.cols()))
        throw ArgumentError("minor: subset ambient size does not match matrix shape");
    return det(a.submatrix(I, J));
}

/// Every order-sized minor, in lexicographic order of (I, J).
inline std::vector<std::tuple<SubsetIndex, SubsetIndex, Rat>> all_minors(const Mat& a, int order) {
    if (order < 1 || order > static_cast<int>(std::min(a.rows(), a.cols())))
        throw ArgumentError("all_minors: order out of range");
    std::vector<std::tuple<SubsetIndex, SubsetIndex, Rat>> out;
    const auto row_sets = k_subsets(static_cast<int>(a.rows()), order);
    const auto col_sets = k_subsets(static_cast<int>(a.cols()), order);
    out.reserve(row_sets.size() * col_sets.size());
    for (const auto& I : row_sets)
        for (const auto& J : col_sets) out.emplace_back(I, J, det(a.submatrix(I, J)));
    return out;
}

struct RowEchelon {
    Mat mat;                         // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column indices, 0-based, increasing
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
inline RowEchelon rref(Mat a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
        const Rat inv = Rat(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rat f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

/// Basis of the kernel of a, one column per free variable,
/// in increasing order of free column index.
inline Mat nullspace(const Mat& a) {
    const auto re = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : re.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat basis(n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t f = free_cols[j];
        basis(f, j) = 1;
        for (std::size_t r = 0; r < re.pivots.size(); ++r) basis(re.pivots[r], j) = -re.mat(r, f);
    }
    return basis;
}

/// Is the column vector v (n x 1) in the column span of a?
inline bool in_span(const Mat& a, const Mat& v) {
    if (v.cols() != 1 || v.rows() != a.rows()) throw ArgumentError("in_span: shape mismatch");
    return rank(a) == rank(a.hstack(v));
}

inline bool spans_equal(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) return false;
    const std::size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank(a.hstack(b)) == ra;
}

/// Reduced column echelon form via left-to-right column operations, plus
/// the pivot-row set: the lexicographically smallest row set carrying a
/// nonzero top-order minor. Column span is preserved; rank-deficient input
/// leaves trailing zero columns.
inline std::pair<Mat, SubsetIndex> column_echelon(const Mat& a) {
    auto re = rref(a.transpose());
    std::vector<int> pivot_rows;
    pivot_rows.reserve(re.pivots.size());
    for (auto p : re.pivots) pivot_rows.push_back(static_cast<int>(p) + 1);
    return {re.mat.transpose(), SubsetIndex(static_cast<int>(a.rows()), std::move(pivot_rows))};
}

/// Diagnostic: checks the Cauchy-Binet identity
///   minor_{I,J}(AB) = sum_S minor_{I,S}(A) * minor_{S,J}(B)
/// over all order-k row/column subsets. Always true; exercised in tests.
inline bool cauchy_binet_check(const Mat& a, const Mat& b, int k) {
    if (a.cols() != b.rows()) throw ArgumentError("cauchy_binet_check: inner dimension mismatch");
    if (k < 1 || k > static_cast<int>(std::min(a.rows(), b.cols())))
        throw ArgumentError("cauchy_binet_check: order out of range");
    const Mat ab = a * b;
    // Orders above the inner dimension leave an empty sum; all minors of the
    // product must then vanish.
    const bool wide = k <= static_cast<int>(a.cols());
    const auto mids = wide ? k_subsets(static_cast<int>(a.cols()), k) : std::vector<SubsetIndex>{};
    for (const auto& I : k_subsets(static_cast<int>(a.rows()), k)) {
        for (const auto& J : k_subsets(static_cast<int>(b.cols()), k)) {
            Rat sum(0);
            for (const auto& S : mids) sum += det(a.submatrix(I, S)) * det(b.submatrix(S, J));
            if (sum != det(ab.submatrix(I, J))) return false;
        }
    }
    return true;
}

}  // namespace flagpos
