#include "cohomdet/poly_matrix.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "cohomdet/errors.hpp"
#include "cohomdet/int_matrix.hpp"

namespace cohomdet {

PolyMatrix::PolyMatrix(int rows, int cols, int num_vars)
    : rows_(rows), cols_(cols), num_vars_(num_vars) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be non-negative");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                    IntPoly(num_vars));
}

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<IntPoly> entries)
    : rows_(rows), cols_(cols), num_vars_(0), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be non-negative");
    if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw DimensionError("expected " + std::to_string(rows * cols) + " entries, got " +
                             std::to_string(entries_.size()));
    }
    if (!entries_.empty()) num_vars_ = entries_.front().num_vars();
    for (const auto& e : entries_) {
        if (e.num_vars() != num_vars_) throw DimensionError("matrix entries disagree on variable count");
    }
}

void PolyMatrix::set(int r, int c, IntPoly value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimensionError("matrix index out of range");
    if (value.num_vars() != num_vars_) throw DimensionError("entry variable count mismatch");
    entries_[index(r, c)] = std::move(value);
}

PolyMatrix PolyMatrix::strike_column(int col) const {
    if (col < 0 || col >= cols_) throw DimensionError("column index out of range");
    PolyMatrix out(rows_, cols_ - 1, num_vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0, k = 0; j < cols_; ++j)
            if (j != col) out.entries_[out.index(i, k++)] = (*this)(i, j);
    return out;
}

PolyMatrix PolyMatrix::strike(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
        throw DimensionError("row/column index out of range");
    }
    PolyMatrix out(rows_ - 1, cols_ - 1, num_vars_);
    for (int i = 0, r = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (int j = 0, k = 0; j < cols_; ++j)
            if (j != col) out.entries_[out.index(r, k++)] = (*this)(i, j);
        ++r;
    }
    return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    PolyMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), num_vars_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.entries_[out.index(static_cast<int>(i), static_cast<int>(j))] = (*this)(rows[i], cols[j]);
    return out;
}

IntPoly poly_det_bareiss(const PolyMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    }
    const int n = m.rows();
    const int vars = m.num_vars();
    if (n == 0) return IntPoly::constant(vars, 1);

    std::vector<std::vector<IntPoly>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i].push_back(m(i, j));

    IntPoly prev = IntPoly::constant(vars, 1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return IntPoly(vars);
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IntPoly v = a[i][j] * a[k][k];
                if (!a[i][k].is_zero() && !a[k][j].is_zero()) v -= a[i][k] * a[k][j];
                // Sylvester's identity makes this division exact
                a[i][j] = exact_divide(v, prev);
            }
        }
        prev = a[k][k];
    }
    IntPoly det = std::move(a[n - 1][n - 1]);
    return negate ? -det : det;
}

IntPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    }
    const int n = m.rows();
    const int vars = m.num_vars();
    if (n > 20) throw DimensionError("Laplace determinant limited to 20x20");

    // minors[mask]: determinant of the first popcount(mask) rows restricted to
    // the columns in mask, expanded along its last row
    std::vector<IntPoly> minors(std::size_t{1} << n, IntPoly(vars));
    minors[0] = IntPoly::constant(vars, 1);
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t mask = 1; mask < minors.size(); ++mask)
        by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

    std::vector<ProductTerm> parts;
    for (int r = 0; r < n; ++r) {
        for (std::uint32_t target : by_size[static_cast<std::size_t>(r) + 1]) {
            parts.clear();
            int pos = 0;
            for (int c = 0; c < n; ++c) {
                const std::uint32_t bit = 1u << c;
                if (!(target & bit)) continue;
                const IntPoly& sub = minors[target & ~bit];
                if (!m(r, c).is_zero() && !sub.is_zero())
                    parts.push_back(ProductTerm{&m(r, c), &sub, (r + pos) % 2 == 1});
                ++pos;
            }
            minors[target] = sum_of_products(vars, parts);
        }
    }
    return minors.back();
}

PolyMatrix substitute_linear(const PolyMatrix& m, const IntMatrix& c) {
    std::vector<IntPoly> out;
    out.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.push_back(substitute_linear(m(i, j), c));
    if (out.empty()) return PolyMatrix(m.rows(), m.cols(), c.cols());
    return PolyMatrix(m.rows(), m.cols(), std::move(out));
}

}  // namespace cohomdet
