// Exact linear algebra over Q(i): dense and sparse matrices, fraction-free
// rank, inverses and kernels.
#pragma once

#include "pairdiff/gaussian_rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pairdiff {

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
    DenseMatrix(std::initializer_list<std::initializer_list<GaussQ>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw std::invalid_argument("DenseMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static DenseMatrix identity(int n) {
        DenseMatrix out(n, n);
        for (int i = 0; i < n; ++i) out(i, i) = GaussQ(1);
        return out;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussQ& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const GaussQ& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix: shape mismatch");
        DenseMatrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    DenseMatrix transpose() const {
        DenseMatrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GaussQ> data_;
};

/// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
/// Gaussian integers; pivots are the first nonzero entry in row order, so the
/// elimination sequence is deterministic.
inline int rank(DenseMatrix a) {
    const int rows = a.rows();
    const int cols = a.cols();
    for (int i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator_lcm(a(i, j)).get_mpz_t());
        if (l != 1) {
            GaussQ s(mpq_class(l), 0);
            for (int j = 0; j < cols; ++j) a(i, j) *= s;
        }
    }
    int r = 0;
    GaussQ prev(1);
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = GaussQ(0);
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

/// Reduced row echelon form over Q(i); returns the pivot columns.
inline std::vector<int> rref(DenseMatrix& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
        const GaussQ inv = GaussQ(1) / a(r, c);
        for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const GaussQ f = a(i, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of {v : a v = 0}, one vector per free column.
inline std::vector<std::vector<GaussQ>> nullspace(DenseMatrix a) {
    const std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<GaussQ>> out;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussQ> v(a.cols());
        v[free] = GaussQ(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), free);
        out.push_back(std::move(v));
    }
    return out;
}

inline GaussQ determinant(DenseMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    GaussQ det(1);
    const int n = a.rows();
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (!a(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return GaussQ(0);
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            const GaussQ f = a(i, c) / a(c, c);
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<DenseMatrix> inverse(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = a.rows();
    DenseMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = GaussQ(1);
    }
    const std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    DenseMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

/// Column-major sparse matrix; each column maps row index to entry.
class SparseMatrix {
public:
    using Column = std::map<int, GaussQ>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), columns_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(columns_.size()); }
    const std::vector<Column>& columns() const { return columns_; }
    const Column& column(int c) const { return columns_.at(c); }

    void set_column(int c, Column col) {
        for (auto it = col.begin(); it != col.end();) {
            if (it->first < 0 || it->first >= rows_)
                throw std::out_of_range("SparseMatrix: row index out of range");
            it = it->second.is_zero() ? col.erase(it) : std::next(it);
        }
        columns_.at(c) = std::move(col);
    }

    GaussQ at(int r, int c) const {
        const auto& col = columns_.at(c);
        auto it = col.find(r);
        return it == col.end() ? GaussQ(0) : it->second;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    bool is_zero() const { return nonzeros() == 0; }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols() != b.rows()) throw std::invalid_argument("SparseMatrix: shape mismatch");
        SparseMatrix out(a.rows(), b.cols());
        for (int j = 0; j < b.cols(); ++j) {
            Column acc;
            for (const auto& [k, bk] : b.columns_[j]) {
                for (const auto& [i, aik] : a.columns_[k]) {
                    auto [it, inserted] = acc.try_emplace(i, aik * bk);
                    if (!inserted) it->second += aik * bk;
                }
            }
            out.set_column(j, std::move(acc));
        }
        return out;
    }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw std::invalid_argument("SparseMatrix: shape mismatch");
        SparseMatrix out(a.rows(), a.cols());
        for (int j = 0; j < a.cols(); ++j) {
            Column acc = a.columns_[j];
            for (const auto& [i, v] : b.columns_[j]) {
                auto [it, inserted] = acc.try_emplace(i, v);
                if (!inserted) it->second += v;
            }
            out.set_column(j, std::move(acc));
        }
        return out;
    }

    /// Rows of `a` followed by rows of `b`.
    static SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
        SparseMatrix out(a.rows() + b.rows(), a.cols());
        for (int j = 0; j < a.cols(); ++j) {
            Column col = a.columns_[j];
            for (const auto& [i, v] : b.columns_[j]) col.emplace(a.rows() + i, v);
            out.set_column(j, std::move(col));
        }
        return out;
    }

    DenseMatrix to_dense() const {
        DenseMatrix out(rows_, cols());
        for (int j = 0; j < cols(); ++j)
            for (const auto& [i, v] : columns_[j]) out(i, j) = v;
        return out;
    }

    /// Groups of columns coupled through shared rows. Blocks are sorted by
    /// their smallest column so the decomposition is deterministic.
    std::vector<std::vector<int>> column_blocks() const {
        std::vector<int> parent(cols());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<int> row_owner(rows_, -1);
        for (int j = 0; j < cols(); ++j) {
            for (const auto& [i, v] : columns_[j]) {
                if (row_owner[i] < 0) {
                    row_owner[i] = j;
                } else {
                    int a = find(row_owner[i]);
                    int b = find(j);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
        std::map<int, std::vector<int>> groups;
        for (int j = 0; j < cols(); ++j) groups[find(j)].push_back(j);
        std::vector<std::vector<int>> out;
        for (auto& [root, cols_in] : groups) out.push_back(std::move(cols_in));
        return out;
    }

    /// Dense submatrix on the given columns and the rows they touch.
    DenseMatrix block(const std::vector<int>& cols_in, std::vector<int>* rows_out = nullptr) const {
        std::map<int, int> row_index;
        for (int j : cols_in)
            for (const auto& [i, v] : columns_[j]) row_index.emplace(i, 0);
        int r = 0;
        for (auto& [i, idx] : row_index) idx = r++;
        DenseMatrix out(r, static_cast<int>(cols_in.size()));
        for (std::size_t c = 0; c < cols_in.size(); ++c)
            for (const auto& [i, v] : columns_[cols_in[c]]) out(row_index[i], static_cast<int>(c)) = v;
        if (rows_out != nullptr) {
            rows_out->clear();
            for (const auto& [i, idx] : row_index) rows_out->push_back(i);
        }
        return out;
    }

private:
    int rows_ = 0;
    std::vector<Column> columns_;
};

/// Exact rank: the matrix is split into independent column blocks and each
/// block is reduced with fraction-free elimination.
inline int rank(const SparseMatrix& m) {
    int total = 0;
    for (const auto& cols_in : m.column_blocks()) {
        DenseMatrix b = m.block(cols_in);
        if (b.rows() == 0) continue;
        total += rank(std::move(b));
    }
    return total;
}

/// Kernel basis of a sparse matrix; vectors are sparse over all columns.
inline std::vector<SparseMatrix::Column> nullspace(const SparseMatrix& m) {
    std::vector<SparseMatrix::Column> out;
    for (const auto& cols_in : m.column_blocks()) {
        DenseMatrix b = m.block(cols_in);
        std::vector<std::vector<GaussQ>> kernel;
        if (b.rows() == 0) {
            for (std::size_t c = 0; c < cols_in.size(); ++c) {
                std::vector<GaussQ> v(cols_in.size());
                v[c] = GaussQ(1);
                kernel.push_back(std::move(v));
            }
        } else {
            kernel = nullspace(std::move(b));
        }
        for (const auto& v : kernel) {
            SparseMatrix::Column col;
            for (std::size_t c = 0; c < v.size(); ++c)
                if (!v[c].is_zero()) col.emplace(cols_in[c], v[c]);
            out.push_back(std::move(col));
        }
    }
    return out;
}

}  // namespace pairdiff
