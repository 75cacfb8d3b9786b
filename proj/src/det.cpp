#include "cohomdet/det.hpp"

#include <string>
#include <type_traits>
#include <variant>

#include "cohomdet/errors.hpp"

namespace cohomdet {

namespace {

IntPoly signed_poly(IntPoly p, int exponent) { return (exponent % 2) ? -p : p; }

void check_degree(const IntPoly& d, int expected) {
    if (!d.homogeneous_degree().admits(expected)) {
        throw InconsistentMinorsError("extracted determinant '" + d.to_string() +
                                      "' is not homogeneous of degree " + std::to_string(expected));
    }
}

}  // namespace

Orientation::Orientation(int sign) : sign_(sign) {
    if (sign != 1 && sign != -1) {
        throw ArgumentError("orientation sign must be +1 or -1, got " + std::to_string(sign));
    }
}

IntPoly extract_struck_column_determinant(const PolyMatrix& theta, const BasisPair& bases) {
    const int n = theta.cols();
    if (theta.rows() != n - 1 || bases.a().rows() != n) {
        throw DimensionError("struck-column extraction needs an (n-1) x n matrix and a rank-n basis");
    }
    IntPoly common(theta.num_vars());
    for (int i = 0; i < n; ++i) {
        const IntPoly minor = poly_det(theta.strike_column(i));
        IntPoly candidate(theta.num_vars());
        try {
            candidate = signed_poly(exact_divide(minor, bases.dual_a(i)), i + 1);
        } catch (const NotDivisibleError&) {
            throw NotDivisibleError("det theta(" + std::to_string(i + 1) + ") = '" + minor.to_string() +
                                    "' is not divisible by a" + std::to_string(i + 1) + "^*");
        }
        if (i == 0) {
            common = std::move(candidate);
        } else if (candidate != common) {
            throw InconsistentMinorsError("minor " + std::to_string(i + 1) + " yields '" +
                                          candidate.to_string() + "' but minor 1 yields '" +
                                          common.to_string() + "'");
        }
    }
    return common;
}

IntPoly extract_closed_determinant(const PolyMatrix& theta, const BasisPair& bases) {
    const int n = theta.rows();
    if (theta.cols() != n || bases.a().rows() != n || bases.b().rows() != n) {
        throw DimensionError("closed extraction needs an n x n matrix and rank-n bases");
    }
    IntPoly common(theta.num_vars());
    for (int i = 0; i < n; ++i) {
        const IntPoly a_dual = bases.dual_a(i);
        for (int j = 0; j < n; ++j) {
            const IntPoly minor = poly_det(theta.strike(i, j));
            IntPoly candidate(theta.num_vars());
            try {
                candidate = signed_poly(exact_divide(exact_divide(minor, a_dual), bases.dual_b(j)), i + j);
            } catch (const NotDivisibleError&) {
                throw NotDivisibleError("det theta(" + std::to_string(i + 1) + ";" +
                                        std::to_string(j + 1) + ") = '" + minor.to_string() +
                                        "' is not divisible by a" + std::to_string(i + 1) + "^* b" +
                                        std::to_string(j + 1) + "^*");
            }
            if (i == 0 && j == 0) {
                common = std::move(candidate);
            } else if (candidate != common) {
                throw InconsistentMinorsError("minor (" + std::to_string(i + 1) + ";" +
                                              std::to_string(j + 1) + ") yields '" +
                                              candidate.to_string() + "' but minor (1;1) yields '" +
                                              common.to_string() + "'");
            }
        }
    }
    return common;
}

IntPoly det_closed(const ClosedForm& f, const BasisPair& bases) {
    IntPoly d = extract_closed_determinant(build_theta_closed(f, bases), bases);
    check_degree(d, f.n() - 3);
    return d;
}

IntPoly det_closed_Z(const ClosedForm& f) { return det_closed(f, BasisPair::standard(f.n(), f.n())); }

IntPoly det_boundary(const BoundaryForm& f, const BasisPair& bases) {
    IntPoly d = extract_struck_column_determinant(build_theta_boundary(f, bases), bases);
    check_degree(d, f.n() - 2);
    return d;
}

IntPoly det_massey(const MasseyForm& f, const BasisPair& bases) {
    IntPoly d = extract_struck_column_determinant(build_theta_massey(f, bases), bases);
    check_degree(d, f.m() * (f.n() - 1) - 1);
    return d;
}

IntPoly det_form(const Form& f, const BasisPair& bases) {
    return std::visit(
        [&](const auto& form) -> IntPoly {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, ClosedForm>) {
                return det_closed(form, bases);
            } else if constexpr (std::is_same_v<T, BoundaryForm>) {
                return det_boundary(form, bases);
            } else {
                return det_massey(form, bases);
            }
        },
        f);
}

BasisPair standard_bases(const Form& f) {
    const int n = form_rank(f);
    return std::holds_alternative<ClosedForm>(f) ? BasisPair::standard(n, n)
                                                 : BasisPair::standard(n, n - 1);
}

int expected_degree(const Form& f) {
    return std::visit(
        [](const auto& form) -> int {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, ClosedForm>) {
                return form.n() - 3;
            } else if constexpr (std::is_same_v<T, BoundaryForm>) {
                return form.n() - 2;
            } else {
                return form.m() * (form.n() - 1) - 1;
            }
        },
        f);
}

IntPoly change_basis(const IntPoly& d_reference, const BasisPair& from, const BasisPair& to) {
    const int factor = transition_determinant(from.a(), to.a()) * transition_determinant(from.b(), to.b());
    return factor == 1 ? d_reference : -d_reference;
}

int concatenated_orientation(const BasisPair& bases) { return bases.det_a() * bases.det_b(); }

IntPoly det_sign_refined(const Form& f, Orientation omega) {
    IntPoly d = det_form(f, standard_bases(f));
    return omega.sign() == 1 ? d : -d;
}

}  // namespace cohomdet
