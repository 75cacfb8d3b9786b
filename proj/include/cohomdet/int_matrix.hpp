#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cohomdet {

/// Dense integer matrix, row-major. Rows of a basis matrix are basis
/// vectors in standard coordinates.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpz_class& operator()(int r, int c) { return data_[index(r, c)]; }
    const mpz_class& operator()(int r, int c) const { return data_[index(r, c)]; }

    IntMatrix transposed() const;
    void swap_rows(int r1, int r2);

    std::vector<std::vector<std::int64_t>> to_rows() const;
    std::string to_string() const;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Exact determinant (fraction-free elimination).
mpz_class int_det(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws ArgumentError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace cohomdet
