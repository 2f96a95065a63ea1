#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ospq/covariant.hpp"
#include "ospq/expr.hpp"

#include <vector>

using namespace ospq;

namespace {

// Compares a composite relation against its printed text form.
void check_printed(const char* id, const FreeGradedPoly& got,
                   const std::string& want_text) {
    CAPTURE(id);
    FreeGradedPoly want = parse_free_poly(want_text, got.gens());
    CHECK((got - want).is_zero());
}

} // namespace

TEST_CASE("composite relations match the printed displays (ell = 1)") {
    check_printed("radius lam0", composite_relation(1, 0, 0, 0),
                  "s*zm1*z1 + z0*z0 - s^-1*z1*zm1 - r");
    check_printed("plane lam0 L=1 M=1", composite_relation(1, 0, 1, 1),
                  "-s*z0*z1 + s^-1*z1*z0 - xi_odd*z1");
    check_printed("plane lam0 L=1 M=0", composite_relation(1, 0, 1, 0),
                  "zm1*z1 + varpi*z0*z0 - z1*zm1 - xi_odd*z0");
    check_printed("plane lam0 L=1 M=-1", composite_relation(1, 0, 1, -1),
                  "s*zm1*z0 - s^-1*z0*zm1 - xi_odd*zm1");
    check_printed("plane lam0 L=2 M=2", composite_relation(1, 0, 2, 2), "z1*z1");
    check_printed("plane lam0 L=2 M=1", composite_relation(1, 0, 2, 1),
                  "s^-1*z0*z1 + s*z1*z0");
    check_printed("plane lam0 L=2 M=0", composite_relation(1, 0, 2, 0),
                  "q*z1*zm1 + [2]*z0*z0 + q^-1*zm1*z1");
    check_printed("plane lam0 L=2 M=-1", composite_relation(1, 0, 2, -1),
                  "s*z0*zm1 + s^-1*zm1*z0");
    check_printed("plane lam0 L=2 M=-2", composite_relation(1, 0, 2, -2),
                  "zm1*zm1");

    check_printed("radius lam1", composite_relation(1, 1, 0, 0),
                  "s*thm1*th1 - th0*th0 - s^-1*th1*thm1 - r");
    check_printed("plane lam1 L=2 M=2", composite_relation(1, 1, 2, 2),
                  "th1*th1");
    check_printed("plane lam1 L=2 M=1", composite_relation(1, 1, 2, 1),
                  "s^-1*th0*th1 - s*th1*th0");
    check_printed("plane lam1 L=2 M=0", composite_relation(1, 1, 2, 0),
                  "q^-1*thm1*th1 - [2]*th0*th0 + q*th1*thm1");
    check_printed("plane lam1 L=2 M=-1", composite_relation(1, 1, 2, -1),
                  "-s^-1*thm1*th0 + s*th0*thm1");
    check_printed("plane lam1 L=1 M=1", composite_relation(1, 1, 1, 1),
                  "s*th0*th1 + s^-1*th1*th0 - xi*th1");
    check_printed("plane lam1 L=1 M=0", composite_relation(1, 1, 1, 0),
                  "th1*thm1 + varpi*th0*th0 - thm1*th1 - xi*th0");
    check_printed("plane lam1 L=1 M=-1", composite_relation(1, 1, 1, -1),
                  "s*thm1*th0 + s^-1*th0*thm1 - xi*thm1");
}

TEST_CASE("composite relations match the printed displays (ell = 2)") {
    check_printed("radius", composite_relation(2, 0, 0, 0),
                  "q^-1*Y2*Ym2 - s^-1*Y1*Ym1 - Y0*Y0 + s*Ym1*Y1 + q*Ym2*Y2 - r");

    check_printed("L=2 M=2", composite_relation(2, 0, 2, 2),
                  "q^(-3/2)*Y2*Y0 - sqrt([3]!/[4])*Y1*Y1 - q^(3/2)*Y0*Y2 - xi*Y2");
    check_printed("L=2 M=1", composite_relation(2, 0, 2, 1),
                  "s^-1*sqrt([3]!/[4])*Y2*Ym1 + s^-1*(([2]/[4])*(q^-2 + q^(3/2)*[2]))*Y1*Y0 "
                  "- s*(([2]/[4])*(q^2 - q^(-3/2)*[2]))*Y0*Y1 - s*sqrt([3]!/[4])*Ym1*Y2 - xi*Y1");
    check_printed("L=2 M=0", composite_relation(2, 0, 2, 0),
                  "s*Y2*Ym2 - (([2]/[4])*(q^2 - q^(-3/2)*[2]))*Y1*Ym1 "
                  "+ ([2]*[2]/[4])*([8]/[4] + 2*[4]/[2] + 1)*Y0*Y0 "
                  "- (([2]/[4])*(q^-2 + q^(3/2)*[2]))*Ym1*Y1 - s^-1*Ym2*Y2 - xi*Y0");
    check_printed("L=2 M=-1", composite_relation(2, 0, 2, -1),
                  "s^-1*sqrt([3]!/[4])*Y1*Ym2 + s^-1*(([2]/[4])*(q^-2 + q^(3/2)*[2]))*Y0*Ym1 "
                  "- s*(([2]/[4])*(q^2 - q^(-3/2)*[2]))*Ym1*Y0 - s*sqrt([3]!/[4])*Ym2*Y1 - xi*Ym1");
    check_printed("L=2 M=-2", composite_relation(2, 0, 2, -2),
                  "q^(-3/2)*Y0*Ym2 - sqrt([3]!/[4])*Ym1*Ym1 - q^(3/2)*Ym2*Y0 - xi*Ym2");

    check_printed("L=3 M=3", composite_relation(2, 0, 3, 3),
                  "q^-1*Y2*Y1 - q*Y1*Y2");
    check_printed("L=3 M=2", composite_relation(2, 0, 3, 2),
                  "Y2*Y0 - (-(sqrt([4]!)/([2]*[2]))*omega)*Y1*Y1 - Y0*Y2");
    check_printed("L=3 M=1", composite_relation(2, 0, 3, 1),
                  "q*Y2*Ym1 - (sqrt([4]/[3]!)*(q^2 + q^(-1/2)*[2]))*Y1*Y0 "
                  "+ (sqrt([4]/[3]!)*(q^-2 - q^(1/2)*[2]))*Y0*Y1 - q^-1*Ym1*Y2");
    check_printed("L=3 M=0", composite_relation(2, 0, 3, 0),
                  "-q^2*Y2*Ym2 + s*([3] + q^2)*Y1*Ym1 + [3]*omega*Y0*Y0 "
                  "+ s^-1*([3] + q^-2)*Ym1*Y1 + q^-2*Ym2*Y2");
    check_printed("L=3 M=-1", composite_relation(2, 0, 3, -1),
                  "q*Y1*Ym2 - (sqrt([4]/[3]!)*(q^2 + q^(-1/2)*[2]))*Y0*Ym1 "
                  "+ (sqrt([4]/[3]!)*(q^-2 - q^(1/2)*[2]))*Ym1*Y0 - q^-1*Ym2*Y1");
    check_printed("L=3 M=-2", composite_relation(2, 0, 3, -2),
                  "Y0*Ym2 - (-(sqrt([4]!)/([2]*[2]))*omega)*Ym1*Ym1 - Ym2*Y0");
    check_printed("L=3 M=-3", composite_relation(2, 0, 3, -3),
                  "q^-1*Ym1*Ym2 - q*Ym2*Ym1");

    check_printed("L=1 M=1", composite_relation(2, 0, 1, 1),
                  "q^(-3/2)*Y2*Ym1 - s^-1*sqrt([3]!/[4])*Y1*Y0 - s*sqrt([3]!/[4])*Y0*Y1 "
                  "+ q^(3/2)*Ym1*Y2");
    check_printed("L=1 M=0", composite_relation(2, 0, 1, 0),
                  "-s^-1*Y2*Ym2 + q^-1*(q + q^-1*[2]/[4])*Y1*Ym1 + varpi*([3]!/[4])*Y0*Y0 "
                  "- q*(q^-1 + q*[2]/[4])*Ym1*Y1 - s*Ym2*Y2");
    check_printed("L=1 M=-1", composite_relation(2, 0, 1, -1),
                  "-q^(-3/2)*Y1*Ym2 + s^-1*sqrt([3]!/[4])*Y0*Ym1 + s*sqrt([3]!/[4])*Ym1*Y0 "
                  "- q^(3/2)*Ym2*Y1");

    check_printed("L=4 M=4", composite_relation(2, 0, 4, 4), "Y2*Y2");
    check_printed("L=4 M=-4", composite_relation(2, 0, 4, -4), "Ym2*Ym2");
}

TEST_CASE("quarantined blocks: the degenerate relations without classical limits") {
    CHECK_FALSE(relation_has_classical_limit(1, 0, 2));
    CHECK_FALSE(relation_has_classical_limit(1, 1, 1));
    CHECK_FALSE(relation_has_classical_limit(2, 0, 4));

    CHECK(relation_has_classical_limit(1, 0, 0));
    CHECK(relation_has_classical_limit(1, 0, 1));
    CHECK(relation_has_classical_limit(1, 1, 0));
    CHECK(relation_has_classical_limit(1, 1, 2));
    CHECK(relation_has_classical_limit(2, 0, 0));
    CHECK(relation_has_classical_limit(2, 0, 2));
    CHECK(relation_has_classical_limit(2, 0, 3));
}

TEST_CASE("coaction covariance for every generated block") {
    for (int ell : {1, 2})
        for (int lambda : {0, 1}) {
            if (ell == 2 && lambda == 1) continue;
            for (int L = 0; L <= 2 * ell; ++L) {
                CAPTURE(ell);
                CAPTURE(lambda);
                CAPTURE(L);
                CHECK(verify_coaction_covariance(ell, lambda, L));
            }
        }
}

TEST_CASE("primed theta basis corepresents via the even spin-1 block") {
    CHECK(verify_primed_basis_corep());
}

TEST_CASE("superspace0: consistency, classical limit, printed rules") {
    Presentation p = superspace0();
    auto rep = consistency_check(p);
    CHECK(rep.condition_a_pass());
    CHECK(rep.condition_b_pass());
    CHECK(verify_classical_limit(p));

    // z1*z0 -> q*z0*z1 (printed rule).
    FreeGradedPoly lhs = p.nf_word({0, 1});
    FreeGradedPoly want = parse_free_poly("q*z0*z1", p.gens);
    CHECK((lhs - p.normal_form(want)).is_zero());

    // z0^2 equals -q^-1*[2]*z1*zm1 - q^-1*r in the algebra.
    FreeGradedPoly sq = p.nf_word({1, 1});
    FreeGradedPoly rhs =
        p.normal_form(parse_free_poly("-q^-1*[2]*z1*zm1 - q^-1*r", p.gens));
    CHECK((sq - rhs).is_zero());

    // The registered radius expression reduces to r.
    REQUIRE(p.constants.size() == 1);
    FreeGradedPoly rad = p.normal_form(p.constants[0].expr);
    CHECK((rad - FreeGradedPoly::constant(p.gens, Scalar::parameter("r"))).is_zero());
}

TEST_CASE("superspace0 with nonzero odd xi: the diamond condition fails") {
    Presentation p = superspace0(Scalar::parameter("r"),
                                 Scalar::parameter("xi_odd"));
    auto rep = consistency_check(p);
    CHECK_FALSE(rep.condition_b_pass());
    // The failing diamond is exhibited in the report.
    bool exhibited = false;
    for (const auto& d : rep.condition_b)
        if (!d.equal && !d.nf1.empty() && !d.nf2.empty()) exhibited = true;
    CHECK(exhibited);
}

TEST_CASE("superspace1: both variants pass and match the printed displays") {
    for (auto kind : {Superspace1Kind::L2_only, Superspace1Kind::with_radius}) {
        Presentation p = superspace1(kind);
        CAPTURE(p.name);
        auto rep = consistency_check(p);
        CHECK(rep.condition_a_pass());
        CHECK(rep.condition_b_pass());
        CHECK(verify_classical_limit(p));

        // theta_{+-1}^2 -> 0 in both variants.
        CHECK(p.nf_word({0, 0}).is_zero());
        CHECK(p.nf_word({2, 2}).is_zero());
    }

    // with_radius: th1*thm1 + thm1*th1 = -([2]/[3])*r, and r is central.
    Presentation p = superspace1(Superspace1Kind::with_radius);
    FreeGradedPoly anti = p.nf_word({0, 2}) + p.nf_word({2, 0});
    FreeGradedPoly want =
        FreeGradedPoly::constant(p.gens, parse_scalar("-([2]/[3])*r"));
    CHECK((anti - want).is_zero());
    REQUIRE(p.constants.size() == 1);
    FreeGradedPoly rad = p.normal_form(p.constants[0].expr);
    CHECK((rad - FreeGradedPoly::constant(p.gens, Scalar::parameter("r"))).is_zero());
}

TEST_CASE("supersphere: consistency with symbolic xi") {
    Presentation p = supersphere();
    auto rep = consistency_check(p);
    CHECK(rep.condition_a_pass());
    CHECK(rep.condition_b_pass());

    // Y2*Y1 -> q^2*Y1*Y2 (printed commutation relation).
    FreeGradedPoly lhs = p.nf_word({0, 1});
    FreeGradedPoly want = p.normal_form(parse_free_poly("q^2*Y1*Y2", p.gens));
    CHECK((lhs - want).is_zero());

    // Y0^2 equals the printed constraint right-hand side in the algebra.
    Scalar xi = Scalar::parameter("xi");
    FreeGradedPoly sq = p.nf_word({2, 2});
    FreeGradedPoly rhs = p.normal_form(parse_free_poly(
        "q^-1*([4]/[2])*Y2*Ym2 - q^(-1/2)*(q + q^-1)*(q^-1 + q*[2]/[4])*Y1*Ym1 "
        "- q^(-3/2)*([3]!/[6])*xi*Y0", p.gens));
    CHECK((sq - rhs).is_zero());

    // Every printed covariant relation (raw and final) vanishes in the algebra.
    for (int L : {1, 2, 3})
        for (const auto& rr : raw_sphere_relations(L)) {
            CAPTURE(rr.id);
            CHECK(p.normal_form(rr.rel).is_zero());
        }
    for (const auto& rr : final_sphere_relations()) {
        CAPTURE(rr.id);
        CHECK(p.normal_form(rr.rel).is_zero());
    }

    // The radius expression reduces to the family's r = ([3]!/[6])^2 xi^2.
    REQUIRE(p.constants.size() == 1);
    FreeGradedPoly rad = p.normal_form(p.constants[0].expr);
    Scalar r_eff = parse_scalar("[3]!*[3]!/([6]*[6])") * xi * xi;
    CHECK((rad - FreeGradedPoly::constant(p.gens, r_eff)).is_zero());
}

TEST_CASE("supersphere with an unrelated radius parameter is inconsistent") {
    // The fifteen relations force r = ([3]!/[6])^2 xi^2; with an independent
    // r the presentation either fails to assemble or fails the checks.
    bool consistent = true;
    try {
        Presentation p = supersphere(Scalar::parameter("r"));
        consistent = consistency_check(p).pass();
    } catch (const std::exception&) {
        consistent = false;
    }
    CHECK_FALSE(consistent);
}

TEST_CASE("raw L in {2,3} orientation alone fails the diamond condition") {
    Presentation p = sphere_raw_presentation();
    auto rep = consistency_check(p);
    CHECK_FALSE(rep.condition_b_pass());
    int bad = 0;
    for (const auto& d : rep.condition_b) bad += !d.equal;
    CHECK(bad > 0);
}

TEST_CASE("classical limits of the sphere relation sets") {
    // The L=2, L=3 raw lists and the twelve final commutation relations
    // degenerate to super-(anti)commutativity at s = 1; the L=1 list and the
    // three constraints are the deformation-only members and are exempt.
    CHECK(verify_classical_limit_relations(raw_sphere_relations(2)));
    CHECK(verify_classical_limit_relations(raw_sphere_relations(3)));
    auto fin = final_sphere_relations();
    REQUIRE(fin.size() == 15);
    std::vector<RawRelation> comm(fin.begin(), fin.begin() + 12);
    CHECK(verify_classical_limit_relations(comm));
}

TEST_CASE("linear-combination certificates for the final relations") {
    auto rep = verify_linear_combination_report();
    CHECK(rep.all_found());
    CHECK(rep.records.size() == 15);
    CHECK(verify_linear_combination());

    // Y2*Y1 - q^2*Y1*Y2 is a multiple of the first L=3 relation alone.
    const auto& first = rep.records.front();
    REQUIRE(first.found);
    int nonzero = 0;
    for (const auto& c : first.coefficients) nonzero += !c.is_zero();
    CHECK(nonzero == 1);
}

TEST_CASE("presentation text round-trip") {
    for (int kind = 0; kind < 4; ++kind) {
        Presentation p;
        switch (kind) {
            case 0: p = superspace0(); break;
            case 1: p = superspace1(Superspace1Kind::L2_only); break;
            case 2: p = superspace1(Superspace1Kind::with_radius); break;
            case 3: p = supersphere(); break;
        }
        CAPTURE(p.name);
        Presentation q = parse_presentation(p.to_string());
        CHECK(q.name == p.name);
        CHECK(q.rules.size() == p.rules.size());
        CHECK(q.word_rules.size() == p.word_rules.size());
        CHECK(q.to_string() == p.to_string());
        // The reparsed presentation still passes its consistency check.
        CHECK(consistency_check(q).pass());
    }
}

TEST_CASE("registered sphere constants") {
    CHECK(sphere_constant("kappa3") ==
          sphere_constant("kappa1") * sphere_constant("kappa2"));
    CHECK(sphere_constant("mu11") == parse_scalar("q + q^-1*[2]/[4]"));
    CHECK(sphere_constant("mu31") ==
          parse_scalar("-(sqrt([4]!)/([2]*[2]))*omega"));
    CHECK_THROWS(sphere_constant("nonexistent"));
}
