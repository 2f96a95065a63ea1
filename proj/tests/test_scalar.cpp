#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ospq/scalar.hpp"
#include "ospq/scalar_io.hpp"
#include "ospq/expr.hpp"

#include <random>

using namespace ospq;

namespace {

Real eval1(const Scalar& x, const Rational& q) {
    return x.eval_numeric(q, {{"r", Real(1)}, {"xi", Real(1)}, {"g1", Real(1)},
                              {"g2", Real(1)}, {"g3", Real(1)}, {"sqrt_g1", Real(1)},
                              {"sqrt_g3", Real(1)}, {"xi_odd", Real(0)}});
}

// Small random scalars for the ring-law property tests.
struct RandomScalars {
    std::mt19937 rng{20260823};

    Scalar laurent() {
        std::uniform_int_distribution<int> coin(0, 5), pw(-3, 3), num(-4, 4);
        Scalar x = Scalar(Rational(num(rng))) * Scalar::s_power(pw(rng));
        if (coin(rng) < 2) x = x * kulish(2 + coin(rng));
        return x;
    }

    Scalar radical() {
        std::uniform_int_distribution<int> pick(2, 5);
        return sqrt_scalar(kulish(pick(rng)));
    }

    Scalar next() {
        std::uniform_int_distribution<int> coin(0, 3), terms(1, 2);
        Scalar x;
        int n = terms(rng);
        for (int i = 0; i < n; ++i) {
            Scalar t = laurent();
            if (coin(rng) == 0) t = t * radical();
            if (coin(rng) == 0) t = t * Scalar::parameter(sym::g2());
            if (coin(rng) == 0) t = t * Scalar::parameter(sym::xi_odd());
            x += t;
        }
        return x;
    }
};

} // namespace

TEST_CASE("kulish symbols") {
    CHECK(kulish(1) == Scalar(1));
    CHECK(kulish(0) == Scalar(0));
    CHECK(kulish(-3) == kulish(3));
    // [2] = s^(-1) - s, so at q = 1/4 (s = 1/2) it equals 2 - 1/2 = 3/2
    Real v = eval1(kulish(2), Rational(1, 4));
    CHECK(abs(v - Real(1.5)) < pow(Real(10), -40));
    // [-n] = (-1)^(n+1) [n]
    for (int n = 1; n <= 12; ++n) {
        Scalar expect = kulish(n);
        if (n % 2 == 0) expect = -expect;
        CHECK(kulish(-n) == expect);
    }
}

TEST_CASE("kulish factorial and binomial") {
    CHECK(kulish_factorial(0) == Scalar(1));
    CHECK(kulish_factorial(1) == Scalar(1));
    CHECK(kulish_factorial(3) == kulish(3) * kulish(2) * kulish(1));
    CHECK_THROWS(kulish_factorial(-1));

    CHECK(kulish_binomial(5, 0) == Scalar(1));
    CHECK(kulish_binomial(2, 1) == kulish(2));
    CHECK(kulish_binomial(1, 2) == Scalar(0));
    CHECK(kulish_binomial(-1, 2) == -kulish_binomial(2, 2));
    CHECK(kulish_binomial(-1, 2) == Scalar(-1));
}

TEST_CASE("varrho") {
    Real v = eval1(varrho(), Rational(1, 4));
    CHECK(v > 0);
    CHECK(abs(v - Real("0.0097657")) < Real("0.0000001"));
    Scalar cleared = varrho() * (Scalar::q_power(-4) - Scalar::q_power(4));
    CHECK(cleared == Scalar::s_power(-1) + Scalar::s_power(1));
    for (const auto& q : probe_qs()) {
        CHECK(eval1(varrho(), q) > 0);
        for (int n = 1; n <= 12; ++n) CHECK(eval1(kulish(n), q) > 0);
    }
}

TEST_CASE("radical canonicalization") {
    Scalar root = sqrt_scalar(kulish(4) * varrho());
    CHECK(root * root == kulish(4) * varrho());
    CHECK(sqrt_scalar(kulish(2)) * sqrt_scalar(kulish(2)) == kulish(2));
    // [3]! * [3] = [3]^2 [2], so sqrt([3]!) * sqrt([3]) = [3] sqrt([2])
    CHECK(sqrt_scalar(kulish_factorial(3)) * sqrt_scalar(kulish(3)) ==
          kulish(3) * sqrt_scalar(kulish(2)));
    CHECK_THROWS(sqrt_scalar(Scalar(1) + sqrt_scalar(kulish(2))));
    CHECK_THROWS(sqrt_scalar(Scalar(-1)));
}

TEST_CASE("parameter monomials") {
    Scalar xi = Scalar::parameter(sym::xi_odd());
    CHECK((xi * xi).is_zero());
    int other = Symbols::declare("theta_probe", 1);
    Scalar th = Scalar::parameter(other);
    CHECK(xi * th == -(th * xi));
    CHECK(xi.parity() == 1);
    CHECK((Scalar::parameter(sym::g2()) * xi).parity() == 1);
    // sqrt_g1^2 folds to g1
    Scalar sg1 = Scalar::parameter(sym::sqrt_g1());
    CHECK(sg1 * sg1 == Scalar::parameter(sym::g1()));
    CHECK(sqrt_scalar(Scalar::parameter(sym::g1())) == sg1);
    CHECK(sqrt_scalar(Scalar::parameter(sym::g2()) * Scalar::parameter(sym::g2())) ==
          Scalar::parameter(sym::g2()));
}

TEST_CASE("substitute") {
    Scalar x = Scalar::parameter(sym::r()) * kulish(2) + Scalar(1);
    CHECK(x.substitute(sym::r(), Scalar(0)) == Scalar(1));
    CHECK(x.substitute(sym::r(), Scalar(1)) == kulish(2) + Scalar(1));
    Scalar odd = Scalar::parameter(sym::xi_odd()) * Scalar::parameter(sym::g2());
    CHECK(odd.substitute(sym::xi_odd(), Scalar(0)).is_zero());
}

TEST_CASE("scalar inverse") {
    Scalar x = kulish(3) * sqrt_scalar(kulish(2)) * Scalar::parameter(sym::g2());
    CHECK(x * x.inverse() == Scalar(1));
    Scalar two_term = Scalar(1) + sqrt_scalar(kulish(2));
    CHECK(two_term * two_term.inverse() == Scalar(1));
    CHECK_THROWS(Scalar(0).inverse());
}

TEST_CASE("ring laws on random scalars") {
    RandomScalars rnd;
    for (int i = 0; i < 1000; ++i) {
        Scalar a = rnd.next(), b = rnd.next(), c = rnd.next();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        // super-commutativity of the coefficient ring with odd parameters
        if (a.is_homogeneous() && b.is_homogeneous()) {
            Scalar ba = b * a;
            if (a.parity() && b.parity()) ba = -ba;
            CHECK(a * b == ba);
        }
    }
}

TEST_CASE("numeric oracle is a homomorphism") {
    RandomScalars rnd;
    Real tol = pow(Real(10), -40);
    for (int i = 0; i < 200; ++i) {
        Scalar a = rnd.next(), b = rnd.next();
        for (const auto& q : probe_qs()) {
            CHECK(abs(eval1(a * b, q) - eval1(a, q) * eval1(b, q)) < tol);
            CHECK(abs(eval1(a + b, q) - (eval1(a, q) + eval1(b, q))) < tol);
        }
    }
}

TEST_CASE("eval_numeric error handling") {
    Scalar x = Scalar::parameter(sym::xi_odd());
    CHECK_THROWS(x.eval_numeric(Rational(1, 2), {{"xi_odd", Real(1)}}));
    CHECK(x.eval_numeric(Rational(1, 2), {{"xi_odd", Real(0)}}) == 0);
    CHECK_THROWS(x.eval_numeric(Rational(1, 2), {}));
    CHECK_THROWS(Scalar(1).eval_numeric(Rational(1, 2), {}, 100));
    CHECK_THROWS(Scalar(1).eval_numeric(Rational(2, 1), {}));
    Real s2 = sqrt_scalar(kulish(2)).eval_numeric(Rational(1, 4), {});
    CHECK(abs(s2 - sqrt(Real(1.5))) < pow(Real(10), -45));
}

TEST_CASE("numerically_zero") {
    CHECK(Scalar(0).numerically_zero());
    CHECK((kulish(3) - kulish(2) * kulish(2) + kulish(4) * kulish(1) -
           (kulish(3) + kulish(4) - kulish(2) * kulish(2))).numerically_zero());
    CHECK_FALSE(kulish(2).numerically_zero());
    CHECK_FALSE((Scalar::parameter(sym::xi_odd()) * kulish(2)).numerically_zero());
}

TEST_CASE("grammar and serialization round trips") {
    CHECK(parse_scalar("[2]") == kulish(2));
    CHECK(parse_scalar("[3]!*rho") == kulish_factorial(3) * varrho());
    CHECK(parse_scalar("sqrt([2]*rho)") == sqrt_scalar(kulish(2) * varrho()));
    CHECK(parse_scalar("q^(1/2)") == Scalar::s_power(1));
    CHECK(parse_scalar("q^(-3)") == Scalar::q_power(-3));
    CHECK(parse_scalar("1/2*s - 2") == Scalar(Rational(1, 2)) * Scalar::s_power(1) - Scalar(2));
    CHECK(parse_scalar("-q*xi_odd*g2^2") ==
          -Scalar::q_power(1) * Scalar::parameter(sym::xi_odd()) *
              Scalar::parameter(sym::g2()) * Scalar::parameter(sym::g2()));
    CHECK_THROWS_AS(parse_scalar("nonsense_ident"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 +"), ParseError);

    RandomScalars rnd;
    for (int i = 0; i < 300; ++i) {
        Scalar x = rnd.next();
        CHECK(parse_scalar(x.to_string()) == x);
        CHECK(scalar_from_json(scalar_to_json(x)) == x);
    }
}

TEST_CASE("kulish summation formula") {
    CHECK(verify_kulish_summation(-1, -1, 0));
    CHECK(verify_kulish_summation(-1, -1, 1));
    CHECK(verify_kulish_summation(-3, -2, 4));
}
