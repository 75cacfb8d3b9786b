#include <doctest.h>

#include "cohomdet/det.hpp"
#include "cohomdet/errors.hpp"
#include "test_support.hpp"

using namespace cohomdet;
using testsupport::Rng;

namespace {

IntPoly P(const char* text, int vars) { return IntPoly::parse(text, vars); }

BoundaryForm boundary_d(long d) {
    IntTensor t({1, 2, 2});
    t.at(0, 0, 1) = d;
    t.at(0, 1, 0) = -d;
    return validate_boundary(t, 2);
}

BoundaryForm restricted_levi_civita() {
    const IntTensor lc = testsupport::levi_civita(1);
    IntTensor t({2, 3, 3});
    for (int x = 0; x < 2; ++x)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) t.at(x, j, k) = lc.at(x, j, k);
    return validate_boundary(t, 3);
}

// d(f, a, b) at a point, required to agree across every minor the oracle can use
void check_against_oracle(const BoundaryForm& f, const IntMatrix& a, const IntMatrix& b, const IntPoly& d, Rng& rng) {
    const int n = f.n();
    for (int trial = 0; trial < 3; ++trial) {
        const auto point = testsupport::random_point(rng, n);
        const mpz_class value = testsupport::evaluate(d, point);
        for (int col = 0; col < n; ++col) {
            const auto oracle = testsupport::oracle_boundary_d(f.tensor(), n, a, b, point, col);
            if (oracle) CHECK(*oracle == value);
        }
    }
}

}  // namespace

TEST_SUITE("det") {

TEST_CASE("Levi-Civita closed determinant is c^2") {
    for (long c : {1L, 2L, 3L, -2L}) {
        const ClosedForm f = validate_closed(testsupport::levi_civita(c), 3);
        CHECK(det_closed(f, BasisPair::standard(3, 3)) == IntPoly::constant(3, c * c));
        CHECK(det_closed_Z(f) == IntPoly::constant(3, c * c));
    }
}

TEST_CASE("closed determinant edge cases") {
    CHECK(det_closed_Z(validate_closed(IntTensor({4, 4, 4}), 4)).is_zero());
    const ClosedForm lc = validate_closed(testsupport::levi_civita(1), 3);
    const IntMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    CHECK(det_closed(lc, BasisPair(swap, swap)) == IntPoly::constant(3, 1));
    CHECK(det_closed(lc, BasisPair(swap, IntMatrix::identity(3))) == IntPoly::constant(3, -1));
}

TEST_CASE("closed determinant of even rank vanishes") {
    Rng rng(41);
    for (int n : {4, 6}) {
        for (int t = 0; t < 5; ++t) CHECK(det_closed_Z(validate_closed(testsupport::random_alternating(rng, n, 9), n)).is_zero());
    }
}

TEST_CASE("closed determinant matches the numeric oracle") {
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(testsupport::uniform(rng, 3, 5));
        const ClosedForm f = validate_closed(testsupport::random_alternating(rng, n, 9), n);
        const IntMatrix a = testsupport::random_unimodular(rng, n);
        const IntMatrix b = testsupport::random_unimodular(rng, n);
        const IntPoly d = det_closed(f, BasisPair(a, b));
        CHECK(d.homogeneous_degree().admits(n - 3));
        const auto point = testsupport::random_point(rng, n);
        const mpz_class value = testsupport::evaluate(d, point);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto oracle = testsupport::oracle_closed_d(f.tensor(), n, a, b, point, i, j);
                if (oracle) CHECK(*oracle == value);
            }
    }
}

TEST_CASE("Det is independent of a shared basis") {
    Rng rng(43);
    for (int n : {3, 4, 5}) {
        const ClosedForm f = validate_closed(testsupport::random_alternating(rng, n, 9), n);
        const IntPoly reference = det_closed_Z(f);
        for (int t = 0; t < 20; ++t) {
            const IntMatrix a = testsupport::random_unimodular(rng, n);
            CHECK(det_closed(f, BasisPair(a, a)) == reference);
        }
    }
}

TEST_CASE("boundary determinant examples") {
    CHECK(det_boundary(boundary_d(7), BasisPair::standard(2, 1)) == IntPoly::constant(2, 7));
    CHECK(det_boundary(boundary_d(0), BasisPair::standard(2, 1)).is_zero());
    CHECK(det_boundary(boundary_d(-3), BasisPair::standard(2, 1)) == IntPoly::constant(2, -3));
    CHECK(det_boundary(restricted_levi_civita(), BasisPair::standard(3, 2)) == P("-a3", 3));
}

TEST_CASE("boundary determinant matches the numeric oracle") {
    Rng rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(testsupport::uniform(rng, 2, 6));
        const BoundaryForm f = validate_boundary(testsupport::random_skew(rng, n - 1, n, 9), n);
        const IntMatrix a = testsupport::random_unimodular(rng, n);
        const IntMatrix b = testsupport::random_unimodular(rng, n - 1);
        const IntPoly d = det_boundary(f, BasisPair(a, b));
        CHECK(d.homogeneous_degree().admits(n - 2));
        check_against_oracle(f, a, b, d, rng);
    }
}

TEST_CASE("struck minors equal (-1)^i a_i^* d") {
    Rng rng(45);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(testsupport::uniform(rng, 2, 5));
        const BoundaryForm f = validate_boundary(testsupport::random_skew(rng, n - 1, n, 9), n);
        const BasisPair bases(testsupport::random_unimodular(rng, n), testsupport::random_unimodular(rng, n - 1));
        const IntPoly d = det_boundary(f, bases);
        const PolyMatrix theta = build_theta_boundary(f, bases);
        for (int i = 0; i < n; ++i) {
            const IntPoly minor = testsupport::leibniz_det(theta.strike_column(i));
            const IntPoly rhs = bases.dual_a(i) * d;
            CHECK(minor == (i % 2 == 0 ? -rhs : rhs));
        }
    }
}

TEST_CASE("Massey determinant") {
    Rng rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(testsupport::uniform(rng, 2, 5));
        const IntTensor t = testsupport::random_skew(rng, n - 1, n, 9);
        const BasisPair bases(testsupport::random_unimodular(rng, n), testsupport::random_unimodular(rng, n - 1));
        CHECK(det_massey(validate_massey(t, n, 1), bases) == det_boundary(validate_boundary(t, n), bases));
    }

    IntTensor m2({1, 2, 2, 2});
    m2(std::vector<int>{0, 0, 1, 1}) = 1;
    m2(std::vector<int>{0, 1, 0, 1}) = -1;
    CHECK(det_massey(validate_massey(m2, 2, 2), BasisPair::standard(2, 1)) == P("a2", 2));

    CHECK(det_massey(validate_massey(IntTensor({2, 3, 3, 3}), 3, 2), BasisPair::standard(3, 2)).is_zero());

    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(testsupport::uniform(rng, 2, 4));
        const int m = static_cast<int>(testsupport::uniform(rng, 2, 3));
        const MasseyForm f = validate_massey(testsupport::random_massey(rng, n, m, 4), n, m);
        const IntPoly d = det_massey(f, BasisPair::standard(n, n - 1));
        CHECK(d.homogeneous_degree().admits(m * (n - 1) - 1));
        CHECK(expected_degree(Form(f)) == m * (n - 1) - 1);
    }
}

TEST_CASE("extraction rejects theta matrices without a common minor") {
    PolyMatrix theta(1, 2, 2);
    theta.set(0, 0, P("a1", 2));
    theta.set(0, 1, P("a1", 2));
    CHECK_THROWS_AS(extract_struck_column_determinant(theta, BasisPair::standard(2, 1)), NotDivisibleError);

    PolyMatrix skewed(1, 2, 2);
    skewed.set(0, 0, P("a2", 2));
    skewed.set(0, 1, P("a1", 2));
    CHECK_THROWS_AS(extract_struck_column_determinant(skewed, BasisPair::standard(2, 1)), InconsistentMinorsError);

    CHECK_THROWS_AS(extract_struck_column_determinant(PolyMatrix(2, 2, 2), BasisPair::standard(2, 1)), DimensionError);
}

TEST_CASE("column-sum-zero matrices have a common signed minor") {
    Rng rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(testsupport::uniform(rng, 2, 5));
        PolyMatrix z = testsupport::random_poly_matrix(rng, n - 1, n, n, 2, 9);
        for (int i = 0; i < n - 1; ++i) {
            IntPoly sum(n);
            for (int j = 0; j < n - 1; ++j) sum += z(i, j);
            z.set(i, n - 1, -sum);
        }
        const IntPoly first = -testsupport::leibniz_det(z.strike_column(0));
        for (int i = 1; i < n; ++i) {
            const IntPoly minor = poly_det(z.strike_column(i));
            CHECK((i % 2 == 0 ? -minor : minor) == first);
        }
    }
}

TEST_CASE("change of basis law") {
    CHECK_THROWS_AS(Orientation(0), ArgumentError);
    Rng rng(48);
    const BoundaryForm lc = restricted_levi_civita();
    const BasisPair std3 = BasisPair::standard(3, 2);
    const IntPoly d = det_boundary(lc, std3);
    CHECK(change_basis(d, std3, std3) == d);
    const BasisPair swapped(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, IntMatrix::identity(2));
    CHECK(change_basis(d, std3, swapped) == -d);
    CHECK(det_boundary(lc, swapped) == -d);

    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(testsupport::uniform(rng, 2, 5));
        const BoundaryForm f = validate_boundary(testsupport::random_skew(rng, n - 1, n, 9), n);
        const BasisPair from(testsupport::random_unimodular(rng, n), testsupport::random_unimodular(rng, n - 1));
        const BasisPair to(testsupport::random_unimodular(rng, n), testsupport::random_unimodular(rng, n - 1));
        const IntPoly d_from = det_boundary(f, from);
        CHECK(det_boundary(f, to) == change_basis(d_from, from, to));
        // the factor is an explicit product of the four basis determinants
        const IntPoly d_to = det_boundary(f, to);
        const int factor = from.det_a() * to.det_a() * from.det_b() * to.det_b();
        CHECK(d_to == (factor == 1 ? d_from : -d_from));
    }
}

TEST_CASE("sign-refined determinant") {
    const Form f = restricted_levi_civita();
    const IntPoly d = det_form(f, standard_bases(f));
    CHECK(det_sign_refined(f, Orientation(1)) == d);
    CHECK(det_sign_refined(f, Orientation(-1)) == -d);

    const BasisPair negative(IntMatrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, IntMatrix::identity(2));
    CHECK(concatenated_orientation(negative) == -1);
    CHECK(det_form(f, negative) == -det_sign_refined(f, Orientation::positive()));

    Rng rng(49);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(testsupport::uniform(rng, 2, 5));
        const Form g = validate_boundary(testsupport::random_skew(rng, n - 1, n, 9), n);
        const BasisPair bases(testsupport::random_unimodular(rng, n), testsupport::random_unimodular(rng, n - 1));
        const IntPoly refined = det_sign_refined(g, Orientation(concatenated_orientation(bases)));
        CHECK(det_form(g, bases) == refined);
    }
}

}
