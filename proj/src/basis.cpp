#include "cohomdet/basis.hpp"

#include <string>
#include <vector>

#include "cohomdet/errors.hpp"

namespace cohomdet {

namespace {

int unit_determinant(const IntMatrix& m, const char* name) {
    if (!m.is_square()) {
        throw ArgumentError(std::string("basis ") + name + " is " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()) + ", expected a square matrix");
    }
    const mpz_class d = int_det(m);
    if (d != 1 && d != -1) {
        throw ArgumentError(std::string("basis ") + name + " is not unimodular (determinant " +
                            d.get_str() + ")");
    }
    return static_cast<int>(d.get_si());
}

// Dual vector x_i^* = sum_k (X^{-1})[k][i] e_k^*, since X^{-1} X = I row-by-column.
IntPoly dual_from_inverse(const IntMatrix& inv, int index) {
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(inv.rows()));
    for (int k = 0; k < inv.rows(); ++k) coeffs[k] = inv(k, index);
    return IntPoly::linear(coeffs);
}

}  // namespace

BasisPair::BasisPair(IntMatrix a, IntMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    det_a_ = unit_determinant(a_, "a");
    det_b_ = unit_determinant(b_, "b");
    a_inv_ = unimodular_inverse(a_);
    b_inv_ = unimodular_inverse(b_);
}

BasisPair BasisPair::standard(int rank_a, int rank_b) {
    return BasisPair(IntMatrix::identity(rank_a), IntMatrix::identity(rank_b));
}

IntPoly BasisPair::dual_a(int index) const {
    if (index < 0 || index >= a_.rows()) throw DimensionError("basis index out of range");
    return dual_from_inverse(a_inv_, index);
}

IntPoly BasisPair::dual_b(int index) const {
    if (index < 0 || index >= b_.rows()) throw DimensionError("basis index out of range");
    return dual_from_inverse(b_inv_, index);
}

int transition_determinant(const IntMatrix& from, const IntMatrix& to) {
    if (from.rows() != to.rows() || from.cols() != to.cols()) {
        throw DimensionError("bases of different modules cannot be compared");
    }
    const int d_from = unit_determinant(from, "reference");
    const int d_to = unit_determinant(to, "target");
    // to = T * from, so det T = det(to) / det(from) = det(to) * det(from)
    return d_from * d_to;
}

}  // namespace cohomdet
