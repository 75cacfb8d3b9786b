#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cohomdet {

class IntMatrix;
class IntPoly;

/// One summand (+-) lhs * rhs of sum_of_products.
struct ProductTerm {
    const IntPoly* lhs;
    const IntPoly* rhs;
    bool negate = false;
};

/// Result of IntPoly::homogeneous_degree().
///
/// The zero polynomial lies in every graded piece, so it reports `any`
/// and is accepted by every degree check.
struct HomogeneousDegree {
    enum class Kind { exact, any, inhomogeneous };

    Kind kind = Kind::any;
    int value = 0;

    bool admits(int degree) const {
        return kind == Kind::any || (kind == Kind::exact && value == degree);
    }
    bool is_homogeneous() const { return kind != Kind::inhomogeneous; }

    friend bool operator==(const HomogeneousDegree&, const HomogeneousDegree&) = default;
};

/// Polynomial in Z[a1, ..., an] with arbitrary-precision coefficients.
///
/// Monomials are packed into one 64-bit word, one byte per variable with a1
/// in the most significant byte, so at most 8 variables and total degree at
/// most 255 are representable. Terms are kept sorted in descending
/// graded-lex order with no zero coefficients; two polynomials are equal iff
/// their term lists are identical.
class IntPoly {
public:
    static constexpr int max_vars = 8;
    static constexpr int max_degree = 255;

    struct Term {
        std::uint64_t key = 0;
        int degree = 0;
        mpz_class coef;

        friend bool operator==(const Term& x, const Term& y) {
            return x.key == y.key && x.coef == y.coef;
        }
    };

    explicit IntPoly(int num_vars = 0);

    static IntPoly zero(int num_vars) { return IntPoly(num_vars); }
    static IntPoly constant(int num_vars, const mpz_class& c);
    /// The generator a_{index+1}; index is 0-based.
    static IntPoly variable(int num_vars, int index);
    /// Build from (exponent vector, coefficient) pairs; repeated monomials are summed.
    static IntPoly from_terms(int num_vars,
                              const std::vector<std::pair<std::vector<int>, mpz_class>>& terms);
    /// Linear form sum_i coeffs[i] * a_{i+1}.
    static IntPoly linear(std::span<const mpz_class> coeffs);

    /// Parse canonical (or loosely formatted) text such as "2*a1^2*a3 - a2".
    static IntPoly parse(std::string_view text, int num_vars);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Exponent vector of a packed monomial key.
    std::vector<int> exponents(std::uint64_t key) const;
    /// Coefficient of the monomial with the given exponents (0 if absent).
    mpz_class coefficient(std::span<const int> exponents) const;

    HomogeneousDegree homogeneous_degree() const;
    /// Largest total degree of any term, or -1 for zero.
    int total_degree() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    IntPoly& operator*=(const mpz_class& c);

    friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
    friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
    friend IntPoly operator*(IntPoly p, const mpz_class& c) { return p *= c; }
    friend IntPoly operator*(const mpz_class& c, IntPoly p) { return p *= c; }
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend bool operator==(const IntPoly& p, const IntPoly& q) {
        return p.num_vars_ == q.num_vars_ && p.terms_ == q.terms_;
    }

    IntPoly pow(unsigned exponent) const;

    /// Canonical text: descending graded-lex order, "a1".."an", '^' for powers.
    std::string to_string() const;

private:
    friend IntPoly exact_divide(const IntPoly& p, const IntPoly& q);
    friend IntPoly sum_of_products(int num_vars, std::span<const ProductTerm> parts);

    void check_compatible(const IntPoly& other) const;
    // sort descending and merge repeated monomials, dropping zeros
    void normalize();
    void add_scaled(const IntPoly& other, bool negate);

    int num_vars_ = 0;
    std::vector<Term> terms_;
};

IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

/// Sum of +-lhs*rhs over all parts, accumulated in a single pass.
IntPoly sum_of_products(int num_vars, std::span<const ProductTerm> parts);

/// Returns r with p == q * r; throws NotDivisibleError when no such r exists
/// and ArgumentError when q is zero.
IntPoly exact_divide(const IntPoly& p, const IntPoly& q);

/// Ring homomorphism a_i -> sum_j C[i][j] * a_j. C has one row per variable
/// of p; the image has C.cols() variables.
IntPoly substitute_linear(const IntPoly& p, const IntMatrix& c);

}  // namespace cohomdet
