#include "cohomdet/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "cohomdet/errors.hpp"

namespace cohomdet {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw DimensionError("matrix dimensions must be non-negative");
    }
    data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) {
            throw DimensionError("ragged matrix: row " + std::to_string(i + 1) + " has " +
                                 std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(c));
        }
        for (int j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            const mpz_class& v = (*this)(i, j);
            if (!v.fits_slong_p()) throw DimensionError("matrix entry exceeds 64 bits");
            out[i].push_back(v.get_si());
        }
    }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw DimensionError("matrix product: inner dimensions differ");
    IntMatrix out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            const mpz_class& xik = x(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
        }
    return out;
}

mpz_class int_det(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
    if (!m.is_square()) return false;
    const mpz_class d = int_det(m);
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    const int n = m.rows();
    // Gauss-Jordan over Q; the result is integral when det = +-1.
    std::vector<mpq_class> a(static_cast<std::size_t>(n) * 2 * n);
    auto at = [&](int r, int c) -> mpq_class& { return a[static_cast<std::size_t>(r) * 2 * n + c]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = m(i, j);
        at(i, n + i) = 1;
    }
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && at(p, col) == 0) ++p;
        if (p == n) throw ArgumentError("matrix is singular, not unimodular");
        if (p != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(col, j));
        const mpq_class piv = at(col, col);
        for (int j = 0; j < 2 * n; ++j) at(col, j) /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == col || at(i, col) == 0) continue;
            const mpq_class f = at(i, col);
            for (int j = 0; j < 2 * n; ++j) at(i, j) -= f * at(col, j);
        }
    }
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const mpq_class& v = at(i, n + j);
            if (v.get_den() != 1) throw ArgumentError("matrix is not unimodular");
            inv(i, j) = v.get_num();
        }
    return inv;
}

}  // namespace cohomdet
