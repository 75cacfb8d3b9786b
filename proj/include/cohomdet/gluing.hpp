#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cohomdet/forms.hpp"
#include "cohomdet/int_matrix.hpp"
#include "cohomdet/int_poly.hpp"

namespace cohomdet {

/// The four solid-torus gluing situations.
///
///  1. boundary has other components, image of H1(T) has rank < 2: d(f_M) = 0
///  2. boundary is T, b1 drops by one: (iota)_*(d(f_M)) = 0
///  3. boundary has other components, image of H1(T) has rank 2:
///     (iota)_*(d(f_M)) = -m * l * d(f_Mbar)
///  4. boundary is T, b1 unchanged: (iota)_*(d(f_M)) = (-1)^n (iota)_*(a_n^*) d(f_Mbar)
enum class GluingCase { one = 1, two = 2, three = 3, four = 4 };

/// Synthetic algebraic instance of a solid-torus gluing M -> Mbar.
///
/// `iota` realizes (iota_M)_* on dual variables: row i holds the image of
/// a_i^* in the variables of Mbar. `ell_index` (1-based) names the Mbar
/// variable that, multiplied by k, gives the class l.
struct GluingInstance {
    GluingCase case_tag = GluingCase::one;
    BoundaryForm f_M;
    std::optional<std::variant<ClosedForm, BoundaryForm>> f_Mbar;
    IntMatrix iota;
    std::int64_t k = 1;
    std::int64_t m = 1;
    std::int64_t tors_M = 1;
    std::int64_t tors_Mbar = 1;
    int ell_index = 1;
    std::optional<int> s0;

    int n() const { return f_M.n(); }
    /// Number of dual variables on the Mbar side.
    int target_vars() const { return iota.cols(); }

    /// Throws ValidationError when a case invariant fails.
    void validate() const;
};

struct GluingCheck {
    std::string name;
    IntPoly lhs;
    IntPoly rhs;
    bool pass = false;
};

struct GluingReport {
    GluingCase case_tag = GluingCase::one;
    IntPoly lhs;
    IntPoly rhs;
    bool pass = false;
    std::string detail;
    /// Every identity evaluated; lhs/rhs mirror the first failing one, or the
    /// primary identity when all pass.
    std::vector<GluingCheck> checks;
};

/// Outcome of classify_case: either a case or a rejection with a diagnostic.
struct Classification {
    std::optional<GluingCase> gluing_case;
    std::string diagnostic;

    bool accepted() const { return gluing_case.has_value(); }
};

/// r: rank of the image of H1(T) in H1(M); only_T: the boundary of M is T.
/// Throws ArgumentError for inputs outside the declared lattice.
Classification classify_case(int r, bool boundary_is_only_T, int b1_M, int b1_Mbar);

/// (iota_M)_* applied to a polynomial in the variables of M.
IntPoly iota_star(const IntPoly& p, const GluingInstance& inst);

/// f_M = f_head stacked over a zero b_{n-1} row. f_head has shape (n-2) x n x n.
GluingInstance make_case1_instance(const IntTensor& f_head, int n);

/// f_M(b_i, a_j, a_k) = F[i][j][k] for j, k < n; f_M(b_i, a_n, a_k) = G[i][k].
/// F is (n-1)^3 alternating, G is (n-1)x(n-1) antisymmetric, n >= 4.
GluingInstance make_case2_instance(const IntTensor& F, const IntMatrix& G);

/// Block structure with corner D = k*m and zero w row; fbar has rank n-1,
/// v is (n-2) x (n-1). tors_M is the torsion order of H1(M); the instance
/// records tors_Mbar = m * tors_M.
GluingInstance make_case3_instance(const BoundaryForm& fbar, const IntMatrix& v, std::int64_t k,
                                   std::int64_t m, std::int64_t tors_M);

/// f_M is fbar with its first slot restricted to a_1..a_{n-1}; tors_M = k * tors_Mbar.
GluingInstance make_case4_instance(const ClosedForm& fbar, std::int64_t k, std::int64_t tors_Mbar);

GluingReport verify_gluing(const GluingInstance& inst);

/// Random instance generators for property runs; entries drawn from [-bound, bound].
namespace generate {

using Rng = std::mt19937_64;

IntTensor skew_tensor(Rng& rng, int rows, int n, int bound);
IntTensor alternating_tensor(Rng& rng, int n, int bound);
IntMatrix antisymmetric_matrix(Rng& rng, int n, int bound);
IntMatrix int_matrix(Rng& rng, int rows, int cols, int bound);

GluingInstance case1(Rng& rng, int n, int bound);
GluingInstance case2(Rng& rng, int n, int bound);
GluingInstance case3(Rng& rng, int n, int bound, std::int64_t k, std::int64_t m);
GluingInstance case4(Rng& rng, int n, int bound, std::int64_t k);

}  // namespace generate

std::string to_string(GluingCase c);

}  // namespace cohomdet
