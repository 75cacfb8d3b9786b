#pragma once

#include "cohomdet/int_matrix.hpp"
#include "cohomdet/int_poly.hpp"

namespace cohomdet {

/// Pair of unimodular bases (a, b). Each row is a basis vector in standard
/// coordinates: `a` spans K (or N), `b` spans L (or the second copy of N).
class BasisPair {
public:
    /// Throws ArgumentError unless both matrices are square with determinant +-1.
    BasisPair(IntMatrix a, IntMatrix b);

    static BasisPair standard(int rank_a, int rank_b);

    const IntMatrix& a() const { return a_; }
    const IntMatrix& b() const { return b_; }
    int det_a() const { return det_a_; }
    int det_b() const { return det_b_; }

    /// a_i^* expressed in the standard dual variables (index 0-based).
    IntPoly dual_a(int index) const;
    IntPoly dual_b(int index) const;

private:
    IntMatrix a_;
    IntMatrix b_;
    IntMatrix a_inv_;
    IntMatrix b_inv_;
    int det_a_ = 1;
    int det_b_ = 1;
};

/// [a'/a]: determinant of the transition matrix between two bases of one module.
int transition_determinant(const IntMatrix& from, const IntMatrix& to);

}  // namespace cohomdet
