#include "cohomdet/gluing.hpp"

#include <functional>
#include <string>
#include <utility>

#include "cohomdet/basis.hpp"
#include "cohomdet/det.hpp"
#include "cohomdet/errors.hpp"

namespace cohomdet {

namespace {

bool row_is_zero(const IntMatrix& m, int r) {
    for (int c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) return false;
    return true;
}

int zero_rows(const IntMatrix& m) {
    int count = 0;
    for (int r = 0; r < m.rows(); ++r) count += row_is_zero(m, r) ? 1 : 0;
    return count;
}

bool is_permutation(const IntMatrix& m) {
    if (!m.is_square()) return false;
    std::vector<int> col_hits(static_cast<std::size_t>(m.cols()), 0);
    for (int r = 0; r < m.rows(); ++r) {
        int ones = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (m(r, c) == 1) {
                ++ones;
                ++col_hits[static_cast<std::size_t>(c)];
            } else if (m(r, c) != 0) {
                return false;
            }
        }
        if (ones != 1) return false;
    }
    for (int h : col_hits)
        if (h != 1) return false;
    return true;
}

// n x (n-1): a_i^* -> alpha_i^* for i < n, a_n^* -> 0
IntMatrix killing_last(int n) {
    IntMatrix iota(n, n - 1);
    for (int i = 0; i < n - 1; ++i) iota(i, i) = 1;
    return iota;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError("gluing instance: " + what);
}

IntPoly signed_if(IntPoly p, bool negate) { return negate ? -p : p; }

// Evaluates one side, tagging any failure with the side's name.
IntPoly side(const char* name, const std::function<IntPoly()>& compute) {
    try {
        return compute();
    } catch (const NotDivisibleError& e) {
        throw NotDivisibleError(std::string(name) + ": " + e.what());
    } catch (const InconsistentMinorsError& e) {
        throw InconsistentMinorsError(std::string(name) + ": " + e.what());
    }
}

}  // namespace

std::string to_string(GluingCase c) { return std::to_string(static_cast<int>(c)); }

void GluingInstance::validate() const {
    const int rank = n();
    require(iota.rows() == rank, "iota has " + std::to_string(iota.rows()) + " rows, expected " +
                                     std::to_string(rank));
    require(k >= 1, "k must be at least 1");
    require(m >= 1, "m must be at least 1");
    require(tors_M >= 1 && tors_Mbar >= 1, "torsion orders must be positive");
    require(ell_index >= 1 && ell_index <= target_vars(),
            "ell_index " + std::to_string(ell_index) + " outside 1.." + std::to_string(target_vars()));
    require(!s0 || *s0 == 1 || *s0 == -1, "s0 must be +1 or -1");

    switch (case_tag) {
        case GluingCase::one:
            require(target_vars() >= 1, "iota must have at least one column");
            break;
        case GluingCase::two:
            require(rank >= 4, "case 2 needs n >= 4");
            require(iota.cols() == rank - 1, "case 2 iota must be n x (n-1)");
            require(row_is_zero(iota, rank - 1) && zero_rows(iota) == 1,
                    "case 2 iota must kill exactly a_n^*");
            if (f_Mbar) {
                const auto* closed = std::get_if<ClosedForm>(&*f_Mbar);
                require(closed && closed->n() == rank - 1, "case 2 f_Mbar must be closed of rank n-1");
            }
            break;
        case GluingCase::three: {
            require(rank >= 3, "case 3 needs n >= 3");
            require(iota.cols() == rank - 1, "case 3 iota must be n x (n-1)");
            require(row_is_zero(iota, rank - 1) && zero_rows(iota) == 1,
                    "case 3 iota must kill exactly a_n^*");
            require(f_Mbar.has_value(), "case 3 needs f_Mbar");
            const auto* boundary = std::get_if<BoundaryForm>(&*f_Mbar);
            require(boundary && boundary->n() == rank - 1, "case 3 f_Mbar must be a boundary form of rank n-1");
            const std::int64_t corner = f_M(rank - 2, rank - 2, rank - 1);
            require(corner == k * m, "case 3 corner f_M(b_{n-1}, a_{n-1}, a_n) = " +
                                         std::to_string(corner) + " differs from k*m = " +
                                         std::to_string(k * m));
            require(tors_Mbar == m * tors_M, "case 3 needs tors_Mbar = m * tors_M");
            break;
        }
        case GluingCase::four: {
            require(is_permutation(iota), "case 4 iota must be a bijective relabeling");
            require(f_Mbar.has_value(), "case 4 needs f_Mbar");
            const auto* closed = std::get_if<ClosedForm>(&*f_Mbar);
            require(closed && closed->n() == rank, "case 4 f_Mbar must be a closed form of rank n");
            require(tors_M == k * tors_Mbar, "case 4 needs tors_M = k * tors_Mbar");
            break;
        }
        default:
            throw ValidationError("gluing instance: unknown case tag");
    }
}

Classification classify_case(int r, bool boundary_is_only_T, int b1_M, int b1_Mbar) {
    if (r < 0 || r > 2) throw ArgumentError("rank of the image of H1(T) must be 0, 1 or 2");
    const int drop = b1_M - b1_Mbar;
    if (drop != 0 && drop != 1) {
        throw ArgumentError("b1(Mbar) must equal b1(M) or b1(M) - 1, got " + std::to_string(b1_M) +
                            " and " + std::to_string(b1_Mbar));
    }
    if (!boundary_is_only_T) {
        if (r == 0) {
            return {std::nullopt,
                    "vacuous: the image of H1(T) in H1(M) cannot have rank 0 when the boundary has "
                    "other components"};
        }
        if (b1_Mbar < 2) return {std::nullopt, "hypothesis fails: b1(Mbar) >= 2 is required when Mbar has boundary"};
        if (r == 1) return {GluingCase::one, ""};
        if (drop != 1) {
            return {std::nullopt, "inconsistent: a rank-2 image of H1(T) forces b1(Mbar) = b1(M) - 1"};
        }
        return {GluingCase::three, ""};
    }
    if (b1_Mbar < 3) return {std::nullopt, "hypothesis fails: b1(Mbar) >= 3 is required when Mbar is closed"};
    return {drop == 1 ? GluingCase::two : GluingCase::four, ""};
}

IntPoly iota_star(const IntPoly& p, const GluingInstance& inst) {
    if (p.num_vars() != inst.n()) {
        throw DimensionError("iota_star expects a polynomial in " + std::to_string(inst.n()) +
                             " variables, got " + std::to_string(p.num_vars()));
    }
    return substitute_linear(p, inst.iota);
}

GluingInstance make_case1_instance(const IntTensor& f_head, int n) {
    if (n < 3) throw DimensionError("case 1 needs n >= 3");
    if (f_head.shape() != std::vector<int>{n - 2, n, n}) {
        throw DimensionError("case 1 head tensor must be (n-2) x n x n");
    }
    IntTensor full({n - 1, n, n});
    for (int x = 0; x < n - 2; ++x)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) full.at(x, j, k) = f_head.at(x, j, k);
    return GluingInstance{
        .case_tag = GluingCase::one,
        .f_M = validate_boundary(std::move(full), n),
        .f_Mbar = std::nullopt,
        .iota = killing_last(n),
        .ell_index = n - 1,
        .s0 = std::nullopt,
    };
}

GluingInstance make_case2_instance(const IntTensor& F, const IntMatrix& G) {
    const int n = F.order() == 3 ? F.shape()[0] + 1 : 0;
    if (n < 4) throw DimensionError("case 2 needs n >= 4 (closed target of rank >= 3)");
    ClosedForm target = validate_closed(F, n - 1);
    if (G.rows() != n - 1 || G.cols() != n - 1) throw DimensionError("case 2 G must be (n-1) x (n-1)");
    for (int i = 0; i < n - 1; ++i)
        for (int k = 0; k < n - 1; ++k)
            if (G(i, k) != -G(k, i)) {
                throw ValidationError("G is not antisymmetric at (" + std::to_string(i + 1) + "," +
                                      std::to_string(k + 1) + ")");
            }

    IntTensor full({n - 1, n, n});
    for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n - 1; ++j)
            for (int k = 0; k < n - 1; ++k) full.at(i, j, k) = F.at(i, j, k);
        for (int k = 0; k < n - 1; ++k) {
            if (!G(i, k).fits_slong_p()) throw ArgumentError("G entry exceeds 64 bits");
            full.at(i, n - 1, k) = G(i, k).get_si();
            full.at(i, k, n - 1) = -G(i, k).get_si();
        }
    }
    return GluingInstance{
        .case_tag = GluingCase::two,
        .f_M = validate_boundary(std::move(full), n),
        .f_Mbar = std::variant<ClosedForm, BoundaryForm>(std::move(target)),
        .iota = killing_last(n),
        .ell_index = n - 1,
        .s0 = std::nullopt,
    };
}

GluingInstance make_case3_instance(const BoundaryForm& fbar, const IntMatrix& v, std::int64_t k,
                                   std::int64_t m, std::int64_t tors_M) {
    const int n = fbar.n() + 1;
    if (v.rows() != n - 2 || v.cols() != n - 1) {
        throw DimensionError("case 3 v must be (n-2) x (n-1) = " + std::to_string(n - 2) + "x" +
                             std::to_string(n - 1));
    }
    if (k < 1 || m < 1) throw ArgumentError("case 3 needs k >= 1 and m >= 1");
    if (tors_M < 1) throw ArgumentError("torsion order must be positive");

    IntTensor full({n - 1, n, n});
    for (int i = 0; i < n - 2; ++i) {
        for (int j = 0; j < n - 1; ++j)
            for (int c = 0; c < n - 1; ++c) full.at(i, j, c) = fbar(i, j, c);
        for (int j = 0; j < n - 1; ++j) {
            if (!v(i, j).fits_slong_p()) throw ArgumentError("v entry exceeds 64 bits");
            full.at(i, j, n - 1) = v(i, j).get_si();
            full.at(i, n - 1, j) = -v(i, j).get_si();
        }
    }
    // b_{n-1} pairs only a_{n-1} with a_n; the w row vanishes
    full.at(n - 2, n - 2, n - 1) = k * m;
    full.at(n - 2, n - 1, n - 2) = -k * m;

    return GluingInstance{
        .case_tag = GluingCase::three,
        .f_M = validate_boundary(std::move(full), n),
        .f_Mbar = std::variant<ClosedForm, BoundaryForm>(fbar),
        .iota = killing_last(n),
        .k = k,
        .m = m,
        .tors_M = tors_M,
        .tors_Mbar = m * tors_M,
        .ell_index = n - 1,
        .s0 = std::nullopt,
    };
}

GluingInstance make_case4_instance(const ClosedForm& fbar, std::int64_t k, std::int64_t tors_Mbar) {
    const int n = fbar.n();
    if (k < 1) throw ArgumentError("case 4 needs k >= 1");
    if (tors_Mbar < 1) throw ArgumentError("torsion order must be positive");
    IntTensor rows({n - 1, n, n});
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < n; ++c) rows.at(i, j, c) = fbar(i, j, c);
    return GluingInstance{
        .case_tag = GluingCase::four,
        .f_M = validate_boundary(std::move(rows), n),
        .f_Mbar = std::variant<ClosedForm, BoundaryForm>(fbar),
        .iota = IntMatrix::identity(n),
        .k = k,
        .m = 1,
        .tors_M = k * tors_Mbar,
        .tors_Mbar = tors_Mbar,
        .ell_index = n,
        .s0 = (n % 2 == 0) ? 1 : -1,
    };
}

GluingReport verify_gluing(const GluingInstance& inst) {
    inst.validate();
    const int n = inst.n();
    const int target = inst.target_vars();
    GluingReport report;
    report.case_tag = inst.case_tag;

    const IntPoly d_M = side("left side", [&] { return det_boundary(inst.f_M, BasisPair::standard(n, n - 1)); });
    const IntPoly image = iota_star(d_M, inst);
    const IntPoly ell = IntPoly::variable(target, inst.ell_index - 1) * mpz_class(static_cast<long>(inst.k));

    auto add = [&](std::string name, IntPoly lhs, IntPoly rhs) {
        const bool pass = lhs == rhs;
        report.checks.push_back(GluingCheck{std::move(name), std::move(lhs), std::move(rhs), pass});
    };

    switch (inst.case_tag) {
        case GluingCase::one:
            add("d(f_M) = 0", d_M, IntPoly::zero(n));
            break;
        case GluingCase::two:
            add("iota_*(d(f_M)) = 0", image, IntPoly::zero(target));
            break;
        case GluingCase::three: {
            const auto& fbar = std::get<BoundaryForm>(*inst.f_Mbar);
            const IntPoly d_bar = side("right side", [&] {
                return det_boundary(fbar, BasisPair::standard(n - 1, n - 2));
            });
            const mpz_class m(static_cast<long>(inst.m));
            add("iota_*(d(f_M)) = -m * l * d(f_Mbar)", image, -(m * (ell * d_bar)));
            // the standard bases of Mbar are negatively oriented for the induced orientation
            const IntPoly det_bar = -d_bar;
            add("|Tors H1(M)| iota_*(Det(f_M)) = |Tors H1(Mbar)| l Det(f_Mbar)",
                image * mpz_class(static_cast<long>(inst.tors_M)),
                (ell * det_bar) * mpz_class(static_cast<long>(inst.tors_Mbar)));
            break;
        }
        case GluingCase::four: {
            const auto& fbar = std::get<ClosedForm>(*inst.f_Mbar);
            const IntPoly d_bar = side("right side", [&] { return det_closed_Z(fbar); });
            const IntPoly an_image = iota_star(IntPoly::variable(n, n - 1), inst);
            add("iota_*(d(f_M)) = (-1)^n iota_*(a_n^*) d(f_Mbar)", image,
                signed_if(an_image * d_bar, n % 2 == 1));
            if (inst.s0) {
                add("|Tors H1(M)| iota_*(Det(f_M)) = s0 |Tors H1(Mbar)| l Det(f_Mbar)",
                    image * mpz_class(static_cast<long>(inst.tors_M)),
                    signed_if((ell * d_bar) * mpz_class(static_cast<long>(inst.tors_Mbar)), *inst.s0 == -1));
            }
            break;
        }
    }

    report.pass = true;
    const GluingCheck* shown = &report.checks.front();
    for (const auto& c : report.checks) {
        if (!c.pass) {
            report.pass = false;
            shown = &c;
            break;
        }
    }
    report.lhs = shown->lhs;
    report.rhs = shown->rhs;
    report.detail = (report.pass ? "holds: " : "fails: ") + shown->name;
    if (report.checks.size() > 1 && report.pass) {
        report.detail += " (and " + std::to_string(report.checks.size() - 1) + " torsion-weighted form)";
    }
    return report;
}

namespace generate {

namespace {
std::int64_t draw(Rng& rng, int bound) {
    return std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng);
}
}  // namespace

IntTensor skew_tensor(Rng& rng, int rows, int n, int bound) {
    IntTensor t({rows, n, n});
    for (int x = 0; x < rows; ++x)
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const std::int64_t v = draw(rng, bound);
                t.at(x, j, k) = v;
                t.at(x, k, j) = -v;
            }
    return t;
}

IntTensor alternating_tensor(Rng& rng, int n, int bound) {
    IntTensor t({n, n, n});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const std::int64_t v = draw(rng, bound);
                t.at(i, j, k) = v;
                t.at(j, k, i) = v;
                t.at(k, i, j) = v;
                t.at(j, i, k) = -v;
                t.at(i, k, j) = -v;
                t.at(k, j, i) = -v;
            }
    return t;
}

IntMatrix antisymmetric_matrix(Rng& rng, int n, int bound) {
    IntMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) {
            const long v = static_cast<long>(draw(rng, bound));
            g(i, k) = v;
            g(k, i) = -v;
        }
    return g;
}

IntMatrix int_matrix(Rng& rng, int rows, int cols, int bound) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = static_cast<long>(draw(rng, bound));
    return m;
}

GluingInstance case1(Rng& rng, int n, int bound) {
    return make_case1_instance(skew_tensor(rng, n - 2, n, bound), n);
}

GluingInstance case2(Rng& rng, int n, int bound) {
    const IntTensor F = alternating_tensor(rng, n - 1, bound);
    const IntMatrix G = antisymmetric_matrix(rng, n - 1, bound);
    return make_case2_instance(F, G);
}

GluingInstance case3(Rng& rng, int n, int bound, std::int64_t k, std::int64_t m) {
    BoundaryForm fbar = validate_boundary(skew_tensor(rng, n - 2, n - 1, bound), n - 1);
    const IntMatrix v = int_matrix(rng, n - 2, n - 1, bound);
    const std::int64_t tors = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
    return make_case3_instance(fbar, v, k, m, tors);
}

GluingInstance case4(Rng& rng, int n, int bound, std::int64_t k) {
    ClosedForm fbar = validate_closed(alternating_tensor(rng, n, bound), n);
    const std::int64_t tors = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
    return make_case4_instance(fbar, k, tors);
}

}  // namespace generate

}  // namespace cohomdet
