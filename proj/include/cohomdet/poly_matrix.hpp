#pragma once

#include <vector>

#include "cohomdet/int_poly.hpp"

namespace cohomdet {

/// Rectangular matrix over Z[a1..an]; every entry shares one variable count.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int num_vars);
    PolyMatrix(int rows, int cols, std::vector<IntPoly> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_vars() const { return num_vars_; }

    const IntPoly& operator()(int r, int c) const { return entries_[index(r, c)]; }
    void set(int r, int c, IntPoly value);

    /// Copy with column `col` removed (0-based).
    PolyMatrix strike_column(int col) const;
    /// Copy with row `row` and column `col` removed (0-based).
    PolyMatrix strike(int row, int col) const;
    PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_;
    int cols_;
    int num_vars_;
    std::vector<IntPoly> entries_;
};

/// Exact determinant by Laplace expansion memoized over column subsets.
/// Division-free; each step multiplies a minor by a single entry.
IntPoly poly_det(const PolyMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
IntPoly poly_det_bareiss(const PolyMatrix& m);

/// Entry-wise substitute_linear.
PolyMatrix substitute_linear(const PolyMatrix& m, const IntMatrix& c);

}  // namespace cohomdet
