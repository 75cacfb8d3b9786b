#include <doctest.h>

#include "cohomdet/det.hpp"
#include "cohomdet/errors.hpp"
#include "cohomdet/gluing.hpp"
#include "cohomdet/json_io.hpp"
#include "test_support.hpp"

using namespace cohomdet;

namespace {

IntPoly P(const char* text, int vars) { return IntPoly::parse(text, vars); }

BoundaryForm rank2(long d) {
    IntTensor t({1, 2, 2});
    t.at(0, 0, 1) = d;
    t.at(0, 1, 0) = -d;
    return validate_boundary(t, 2);
}

GluingInstance case4_levi_civita() { return make_case4_instance(validate_closed(testsupport::levi_civita(1), 3), 1, 1); }

}  // namespace

TEST_SUITE("gluing") {

TEST_CASE("classify_case examples") {
    CHECK(classify_case(2, false, 4, 3).gluing_case == GluingCase::three);
    CHECK(classify_case(1, false, 4, 3).gluing_case == GluingCase::one);
    CHECK(classify_case(1, false, 4, 4).gluing_case == GluingCase::one);
    const Classification vacuous = classify_case(0, false, 4, 3);
    CHECK_FALSE(vacuous.accepted());
    CHECK(vacuous.diagnostic.find("vacuous") != std::string::npos);
    CHECK(classify_case(1, true, 5, 4).gluing_case == GluingCase::two);
    CHECK(classify_case(1, true, 4, 4).gluing_case == GluingCase::four);
    CHECK_THROWS_AS(classify_case(3, false, 4, 3), ArgumentError);
    CHECK_THROWS_AS(classify_case(-1, true, 4, 3), ArgumentError);
    CHECK_THROWS_AS(classify_case(1, false, 4, 2), ArgumentError);
    CHECK_THROWS_AS(classify_case(1, false, 3, 4), ArgumentError);
}

TEST_CASE("classify_case is total on its lattice") {
    for (int r = 0; r <= 2; ++r)
        for (bool only_t : {false, true})
            for (int b1 = 0; b1 <= 8; ++b1)
                for (int drop = -1; drop <= 2; ++drop) {
                    const int bbar = b1 - drop;
                    if (drop != 0 && drop != 1) {
                        CHECK_THROWS_AS(classify_case(r, only_t, b1, bbar), ArgumentError);
                        continue;
                    }
                    const Classification c = classify_case(r, only_t, b1, bbar);
                    CHECK(c.accepted() != !c.diagnostic.empty());
                    if (!c.accepted()) continue;
                    if (only_t) {
                        CHECK(bbar >= 3);
                        CHECK(*c.gluing_case == (drop == 1 ? GluingCase::two : GluingCase::four));
                    } else {
                        CHECK(bbar >= 2);
                        CHECK(r >= 1);
                        CHECK(*c.gluing_case == (r == 1 ? GluingCase::one : GluingCase::three));
                        if (r == 2) CHECK(drop == 1);
                    }
                }
}

TEST_CASE("iota_star examples") {
    testsupport::Rng rng(51);
    const GluingInstance c3 = generate::case3(rng, 4, 5, 1, 1);
    CHECK(iota_star(P("a1 + a4", 4), c3) == P("a1", 3));
    CHECK(iota_star(P("a4^2", 4), c3).is_zero());
    const GluingInstance c4 = case4_levi_civita();
    CHECK(iota_star(P("a1*a3 - 2*a2", 3), c4) == P("a1*a3 - 2*a2", 3));
    CHECK_THROWS_AS(iota_star(P("a1", 2), c4), DimensionError);
}

TEST_CASE("case 4 with the Levi-Civita form") {
    const GluingInstance inst = case4_levi_civita();
    CHECK(det_boundary(inst.f_M, BasisPair::standard(3, 2)) == P("-a3", 3));
    const GluingReport r = verify_gluing(inst);
    CHECK(r.pass);
    CHECK(r.lhs == P("-a3", 3));
    CHECK(r.rhs == P("-a3", 3));
    CHECK(r.checks.size() == 2);
    CHECK(inst.tors_M == inst.k * inst.tors_Mbar);
    CHECK(inst.ell_index == 3);
}

TEST_CASE("case 4 with the zero form and a random n = 4 form") {
    const GluingInstance zero = make_case4_instance(validate_closed(IntTensor({3, 3, 3}), 3), 2, 1);
    const GluingReport r = verify_gluing(zero);
    CHECK(r.pass);
    CHECK(r.lhs.is_zero());
    CHECK(r.rhs.is_zero());

    testsupport::Rng rng(52);
    const GluingInstance inst = make_case4_instance(validate_closed(testsupport::random_alternating(rng, 4, 9), 4), 3, 2);
    CHECK_NOTHROW(validate_boundary(inst.f_M.tensor(), 4));
    CHECK(verify_gluing(inst).pass);
}

TEST_CASE("case 4 torsion identity fails for the opposite s0") {
    GluingInstance inst = case4_levi_civita();
    inst.s0 = -*inst.s0;
    const GluingReport r = verify_gluing(inst);
    CHECK_FALSE(r.pass);
    CHECK(r.checks[0].pass);
    CHECK_FALSE(r.checks[1].pass);
    CHECK(r.lhs == r.checks[1].lhs);
}

TEST_CASE("case 3 at n = 3") {
    const GluingInstance inst = make_case3_instance(rank2(1), IntMatrix(1, 2), 1, 1, 1);
    CHECK(det_boundary(inst.f_M, BasisPair::standard(3, 2)) == P("-a2", 3));
    const GluingReport r = verify_gluing(inst);
    CHECK(r.pass);
    CHECK(r.lhs == P("-a2", 2));
    CHECK(r.rhs == P("-a2", 2));

    const GluingInstance six = make_case3_instance(rank2(1), IntMatrix(1, 2), 2, 3, 1);
    CHECK(six.f_M(1, 1, 2) == 6);
    CHECK(six.tors_Mbar == 3 * six.tors_M);
    CHECK(verify_gluing(six).pass);

    CHECK_THROWS_AS(make_case3_instance(rank2(1), IntMatrix(1, 2), 0, 1, 1), ArgumentError);
    CHECK_THROWS_AS(make_case3_instance(rank2(1), IntMatrix(2, 2), 1, 1, 1), DimensionError);
}

TEST_CASE("case 2 examples") {
    const IntTensor lc = testsupport::levi_civita(1);
    CHECK(verify_gluing(make_case2_instance(lc, IntMatrix(3, 3))).pass);

    const IntMatrix g{{0, 2, -1}, {-2, 0, 5}, {1, -5, 0}};
    const GluingInstance inst = make_case2_instance(IntTensor({3, 3, 3}), g);
    const GluingReport r = verify_gluing(inst);
    CHECK(r.pass);
    CHECK(r.lhs.is_zero());

    const IntMatrix bad{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(make_case2_instance(lc, bad), ValidationError);
    IntTensor not_alt = testsupport::levi_civita(1);
    not_alt.at(0, 1, 2) = 2;
    CHECK_THROWS_AS(make_case2_instance(not_alt, IntMatrix(3, 3)), ValidationError);
}

TEST_CASE("case 1 examples") {
    testsupport::Rng rng(53);
    const GluingInstance inst = make_case1_instance(testsupport::random_skew(rng, 2, 4, 9), 4);
    const GluingReport r = verify_gluing(inst);
    CHECK(r.pass);
    CHECK(r.lhs.is_zero());
    CHECK(r.rhs.is_zero());
    CHECK(verify_gluing(make_case1_instance(IntTensor({1, 3, 3}), 3)).pass);

    IntTensor bad({1, 3, 3});
    bad.at(0, 0, 1) = 1;
    CHECK_THROWS_AS(make_case1_instance(bad, 3), ValidationError);
}

TEST_CASE("validate rejects broken invariants") {
    GluingInstance inst = make_case3_instance(rank2(1), IntMatrix(1, 2), 2, 3, 1);
    GluingInstance wrong_tors = inst;
    wrong_tors.tors_Mbar = 1;
    CHECK_THROWS_AS(wrong_tors.validate(), ValidationError);
    GluingInstance wrong_k = inst;
    wrong_k.k = 1;
    CHECK_THROWS_AS(wrong_k.validate(), ValidationError);
    GluingInstance alive = inst;
    alive.iota(2, 0) = 1;
    CHECK_THROWS_AS(alive.validate(), ValidationError);

    GluingInstance c4 = case4_levi_civita();
    c4.iota(0, 1) = 1;
    CHECK_THROWS_AS(verify_gluing(c4), ValidationError);
}

TEST_CASE("random instances verify") {
    testsupport::Rng rng(54);
    for (int t = 0; t < 30; ++t) {
        const int n = static_cast<int>(testsupport::uniform(rng, 3, 5));
        const std::int64_t k = testsupport::uniform(rng, 1, 4);
        const std::int64_t m = testsupport::uniform(rng, 1, 4);
        const GluingInstance c3 = generate::case3(rng, n, 5, k, m);
        CHECK_NOTHROW(validate_boundary(c3.f_M.tensor(), n));
        CHECK(verify_gluing(c3).pass);
        CHECK(verify_gluing(generate::case4(rng, n, 5, k)).pass);
        CHECK(verify_gluing(generate::case1(rng, n, 5)).pass);
        CHECK(verify_gluing(generate::case2(rng, 4 + t % 2, 5)).pass);
    }
}

TEST_CASE("instance JSON round-trips") {
    testsupport::Rng rng(55);
    for (const GluingInstance& inst : {generate::case1(rng, 4, 5), generate::case2(rng, 4, 5),
                                       generate::case3(rng, 4, 5, 2, 3), generate::case4(rng, 3, 5, 2)}) {
        const Json j = instance_to_json(inst);
        const GluingInstance back = instance_from_json(parse_json_text(j.dump()));
        CHECK(instance_to_json(back) == j);
        const Json report = report_to_json(verify_gluing(back));
        CHECK(report["verdict"] == "pass");
        const IntPoly lhs = verify_gluing(back).lhs;
        CHECK(IntPoly::parse(report["lhs"].get<std::string>(), lhs.num_vars()) == lhs);
    }
}

TEST_CASE("generators are deterministic in the seed") {
    testsupport::Rng a(99), b(99);
    CHECK(instance_to_json(generate::case3(a, 5, 5, 2, 2)) == instance_to_json(generate::case3(b, 5, 5, 2, 2)));
}

}
