#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "cohomdet/basis.hpp"
#include "cohomdet/int_poly.hpp"
#include "cohomdet/poly_matrix.hpp"

namespace cohomdet {

/// Dense integer tensor, row-major, 0-based indices.
class IntTensor {
public:
    IntTensor() = default;
    explicit IntTensor(std::vector<int> shape);
    IntTensor(std::vector<int> shape, std::vector<std::int64_t> values);

    const std::vector<int>& shape() const { return shape_; }
    int order() const { return static_cast<int>(shape_.size()); }
    std::size_t size() const { return values_.size(); }
    const std::vector<std::int64_t>& values() const { return values_; }

    std::int64_t operator()(std::span<const int> idx) const { return values_[offset(idx)]; }
    std::int64_t& operator()(std::span<const int> idx) { return values_[offset(idx)]; }
    std::int64_t at(int i, int j, int k) const { return values_[offset3(i, j, k)]; }
    std::int64_t& at(int i, int j, int k) { return values_[offset3(i, j, k)]; }

    /// Multi-index of a flat position.
    std::vector<int> unravel(std::size_t flat) const;

    friend bool operator==(const IntTensor&, const IntTensor&) = default;

private:
    std::size_t offset(std::span<const int> idx) const;
    std::size_t offset3(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(shape_[1]) +
                static_cast<std::size_t>(j)) * static_cast<std::size_t>(shape_[2]) +
               static_cast<std::size_t>(k);
    }

    std::vector<int> shape_;
    std::vector<std::int64_t> values_;
};

/// Alternating trilinear form on a rank-n lattice N, n >= 3.
class ClosedForm {
public:
    int n() const { return n_; }
    const IntTensor& tensor() const { return tensor_; }
    std::int64_t operator()(int i, int j, int k) const { return tensor_.at(i, j, k); }

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

private:
    friend ClosedForm validate_closed(IntTensor tensor, int n);
    ClosedForm(int n, IntTensor t) : n_(n), tensor_(std::move(t)) {}

    int n_;
    IntTensor tensor_;
};

/// Map L x K x K -> Z skew in the two K slots; rank K = n >= 2, rank L = n - 1.
class BoundaryForm {
public:
    int n() const { return n_; }
    const IntTensor& tensor() const { return tensor_; }
    std::int64_t operator()(int x, int j, int k) const { return tensor_.at(x, j, k); }

    friend bool operator==(const BoundaryForm&, const BoundaryForm&) = default;

private:
    friend BoundaryForm validate_boundary(IntTensor tensor, int n);
    BoundaryForm(int n, IntTensor t) : n_(n), tensor_(std::move(t)) {}

    int n_;
    IntTensor tensor_;
};

/// Map L x K^{m+1} -> Z whose obstruction polynomial f0 vanishes.
class MasseyForm {
public:
    int n() const { return n_; }
    int m() const { return m_; }
    const IntTensor& tensor() const { return tensor_; }

    friend bool operator==(const MasseyForm&, const MasseyForm&) = default;

private:
    friend MasseyForm validate_massey(IntTensor tensor, int n, int m);
    MasseyForm(int n, int m, IntTensor t) : n_(n), m_(m), tensor_(std::move(t)) {}

    int n_;
    int m_;
    IntTensor tensor_;
};

using Form = std::variant<ClosedForm, BoundaryForm, MasseyForm>;

/// Throws ValidationError naming the first (1-based) index triple that breaks alternation.
ClosedForm validate_closed(IntTensor tensor, int n);
/// Throws ValidationError naming the first (1-based) index triple that breaks skew symmetry.
BoundaryForm validate_boundary(IntTensor tensor, int n);
/// Throws ValidationError when f0 is not identically zero.
MasseyForm validate_massey(IntTensor tensor, int n, int m);

/// f0(b_x) = sum over i_1..i_{m+1} of f(b_x, a_{i_1}, ..., a_{i_{m+1}}) a_{i_1}^* ... a_{i_{m+1}}^*,
/// one polynomial per x. `tensor` need not satisfy any symmetry.
std::vector<IntPoly> massey_f0(const IntTensor& tensor, int n, int m);

/// theta_{i,j} = g(a_i, b_j) in the standard dual variables (n x n, degree 1).
PolyMatrix build_theta_closed(const ClosedForm& f, const BasisPair& bases);
/// theta_{i,j} = g(b_i, a_j) ((n-1) x n, degree 1).
PolyMatrix build_theta_boundary(const BoundaryForm& f, const BasisPair& bases);
/// theta_{i,j} = g(b_i, a_j) with g summing the last m slots against monomials ((n-1) x n, degree m).
PolyMatrix build_theta_massey(const MasseyForm& f, const BasisPair& bases);

int form_rank(const Form& f);

}  // namespace cohomdet
