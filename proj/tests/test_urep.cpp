#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ospq/urep.hpp"

using namespace ospq;

TEST_CASE("printed ell=1 generator matrices") {
    GradedMatrix K = rep_generator(Gen::K, 1, 0);
    CHECK(K.at(0, 0) == Scalar::s_power(1));
    CHECK(K.at(1, 1) == Scalar(1));
    CHECK(K.at(2, 2) == Scalar::s_power(-1));

    Scalar c = sqrt_scalar(kulish(2) * varrho());
    GradedMatrix vp = rep_generator(Gen::Vplus, 1, 0);
    CHECK(vp.at(0, 1) == c);
    CHECK(vp.at(1, 2) == c);
    CHECK(vp.at(0, 0).is_zero());
    CHECK(vp.at(1, 0).is_zero());

    GradedMatrix vm = rep_generator(Gen::Vminus, 1, 0);
    CHECK(vm.at(1, 0) == -c);
    CHECK(vm.at(2, 1) == c);
}

TEST_CASE("printed ell=2 generator matrices") {
    GradedMatrix K = rep_generator(Gen::K, 2, 0);
    CHECK(K.at(0, 0) == Scalar::q_power(1));
    CHECK(K.at(4, 4) == Scalar::q_power(-1));

    Scalar c4 = sqrt_scalar(kulish(4) * varrho());
    Scalar c3 = sqrt_scalar(kulish_factorial(3) * varrho());
    GradedMatrix vp = rep_generator(Gen::Vplus, 2, 0);
    CHECK(vp.at(0, 1) == c4);
    CHECK(vp.at(1, 2) == c3);
    CHECK(vp.at(2, 3) == c3);
    CHECK(vp.at(3, 4) == c4);

    GradedMatrix vm = rep_generator(Gen::Vminus, 2, 0);
    CHECK(vm.at(1, 0) == -c4);
    CHECK(vm.at(2, 1) == c3);
    CHECK(vm.at(3, 2) == -c3);
    CHECK(vm.at(4, 3) == c4);
}

TEST_CASE("trivial representation") {
    GradedMatrix K = rep_generator(Gen::K, 0, 1);
    CHECK(K.rows() == 1);
    CHECK(K.at(0, 0) == Scalar(1));
    CHECK(rep_generator(Gen::Vplus, 0, 1).is_zero());
    CHECK_THROWS(rep_generator(Gen::K, 1, 2));
}

TEST_CASE("defining relations, grade star, Casimir for ell <= 4") {
    for (int ell = 0; ell <= 4; ++ell) {
        for (int lambda : {0, 1}) {
            CAPTURE(ell);
            CAPTURE(lambda);
            CHECK(verify_defining_relations(ell, lambda));
            CHECK(verify_grade_star(ell, lambda));
            GradedMatrix c = casimir(ell, lambda);
            Scalar eigen;
            REQUIRE(c.is_scalar_multiple_of_identity(&eigen));
            CHECK(eigen == casimir_eigenvalue(ell));
        }
    }
}

TEST_CASE("representation entries are even scalars") {
    for (int ell = 0; ell <= 3; ++ell)
        for (Gen g : {Gen::K, Gen::Kinv, Gen::Vplus, Gen::Vminus}) {
            GradedMatrix m = rep_generator(g, ell, 0);
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    CHECK(m.at(i, j).parity() == 0);
        }
}

TEST_CASE("tensor representation") {
    // group-like K: diagonal q^((m1+m2)/2)
    GradedMatrix K = tensor_rep(Gen::K, 1, 1, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int m1 = 1 - i, m2 = 1 - j;
            CHECK(K.at(3 * i + j, 3 * i + j) == Scalar::s_power(m1 + m2));
        }

    // v+ annihilates the top vector e^1_1 (x) e^1_1
    GradedMatrix vp = tensor_rep(Gen::Vplus, 1, 1, 0);
    for (int i = 0; i < 9; ++i) CHECK(vp.at(i, 0).is_zero());

    // Delta is an algebra map: tensor matrices satisfy the defining relations
    for (int l1 = 0; l1 <= 2; ++l1)
        for (int l2 = 0; l2 <= 2; ++l2)
            for (int lambda : {0, 1}) {
                CAPTURE(l1); CAPTURE(l2); CAPTURE(lambda);
                CHECK(check_defining_relations(tensor_rep(Gen::K, l1, l2, lambda),
                                               tensor_rep(Gen::Kinv, l1, l2, lambda),
                                               tensor_rep(Gen::Vplus, l1, l2, lambda),
                                               tensor_rep(Gen::Vminus, l1, l2, lambda)));
            }
}
