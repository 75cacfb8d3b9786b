#pragma once

#include <vector>

#include "cohomdet/basis.hpp"
#include "cohomdet/forms.hpp"
#include "cohomdet/int_poly.hpp"
#include "cohomdet/poly_matrix.hpp"

namespace cohomdet {

/// Orientation of (K + L) (x) R, recorded as its sign against the standard
/// concatenated basis (e_1..e_n, e_1..e_{n-1}).
class Orientation {
public:
    /// Throws ArgumentError unless sign is +1 or -1.
    explicit Orientation(int sign);

    static Orientation positive() { return Orientation(1); }

    int sign() const { return sign_; }

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    int sign_;
};

/// d(f, a, b) for a closed form: every (n-1)x(n-1) minor theta(i;j) is
/// divided by (-1)^{i+j} a_i^* b_j^* and all n^2 quotients must agree.
IntPoly det_closed(const ClosedForm& f, const BasisPair& bases);

/// Det(f) = d(f, e, e); independent of the basis when both slots share it.
IntPoly det_closed_Z(const ClosedForm& f);

/// d(f, a, b) for a boundary form: each struck-column minor theta(i) is
/// divided by (-1)^i a_i^* and all n quotients must agree.
IntPoly det_boundary(const BoundaryForm& f, const BasisPair& bases);

IntPoly det_massey(const MasseyForm& f, const BasisPair& bases);

/// Dispatch on the form kind.
IntPoly det_form(const Form& f, const BasisPair& bases);
/// Standard bases matching the form kind.
BasisPair standard_bases(const Form& f);
/// Nominal degree of d: n-3 (closed), n-2 (boundary), m(n-1)-1 (Massey).
int expected_degree(const Form& f);

/// Shared extraction for (n-1) x n matrices whose columns satisfy the
/// column-sum-zero relation after weighting by the dual basis.
IntPoly extract_struck_column_determinant(const PolyMatrix& theta, const BasisPair& bases);
IntPoly extract_closed_determinant(const PolyMatrix& theta, const BasisPair& bases);

/// [a'/a][b'/b] * d_reference.
IntPoly change_basis(const IntPoly& d_reference, const BasisPair& from, const BasisPair& to);

/// Sign of the concatenated basis (a, b) relative to the standard one, i.e. det(a) det(b).
int concatenated_orientation(const BasisPair& bases);

/// Det_omega(f) = omega.sign() * d(f, e, e).
IntPoly det_sign_refined(const Form& f, Orientation omega);

}  // namespace cohomdet
