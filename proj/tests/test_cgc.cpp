#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ospq/cgc.hpp"
#include "ospq/expr.hpp"
#include "ospq/urep.hpp"

#include "json.hpp"

#include <fstream>

using namespace ospq;
using nlohmann::json;

TEST_CASE("documented single coefficients") {
    CHECK(cgc_closed({1, 1, 0, 1, -1, 0}) ==
          parse_scalar("q^(-1/2)/sqrt([3])"));
    CHECK(cgc_closed({1, 1, 2, 1, 1, 0}) == Scalar(1));
    CHECK(cgc_closed({2, 2, 0, 0, 0, 0}) == parse_scalar("-1/sqrt([5])"));
}

TEST_CASE("out-of-domain queries return zero") {
    CHECK(cgc_closed({1, 1, 3, 1, 1, 0}).is_zero());      // ell > ell1+ell2
    CHECK(cgc_closed({2, 1, 0, 1, -1, 0}).is_zero());     // |m| > ell
    CHECK(cgc_closed({1, 1, 1, 2, -1, 0}).is_zero());     // |m1| > ell1
    CHECK(cgc_lowering({1, 1, 3, 1, 1, 0}).is_zero());
}

TEST_CASE("highest-weight normalization at ell = ell1+ell2 is 1") {
    for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= 3; ++l2)
            for (int lambda : {0, 1})
                CHECK(cgc_lowering({l1, l2, l1 + l2, l1, l2, lambda}) == Scalar(1));
}

TEST_CASE("closed form equals lowering oracle for ell1, ell2 <= 3") {
    for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= 3; ++l2)
            for (int l = std::abs(l1 - l2); l <= l1 + l2; ++l)
                for (int lambda : {0, 1})
                    for (int m = -l; m <= l; ++m) {
                        auto vec = cgc_lowering_vector(l1, l2, l, m, lambda);
                        for (int m1 = -l1; m1 <= l1; ++m1) {
                            int m2 = m - m1;
                            if (std::abs(m2) > l2) continue;
                            CAPTURE(l1); CAPTURE(l2); CAPTURE(l);
                            CAPTURE(m1); CAPTURE(m2); CAPTURE(lambda);
                            Scalar closed = cgc_closed({l1, l2, l, m1, m2, lambda});
                            auto it = vec.find({m1, m2});
                            Scalar lowered = it == vec.end() ? Scalar(0) : it->second;
                            CHECK(closed == lowered);
                        }
                    }
}

TEST_CASE("weight conservation and parity") {
    for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= 3; ++l2)
            for (int l = std::abs(l1 - l2); l <= l1 + l2; ++l)
                for (int m = -l; m <= l; ++m) {
                    auto vec = cgc_lowering_vector(l1, l2, l, m, 0);
                    for (auto& [key, v] : vec) {
                        // support only on m1 + m2 = m
                        CHECK(key.first + key.second == m);
                        CHECK(v.parity() == 0);
                    }
                    if (m == l)   // closed form scan once per (l1, l2, l)
                        for (int m1 = -l1; m1 <= l1; ++m1)
                            for (int m2 = -l2; m2 <= l2; ++m2) {
                                Scalar c = cgc_closed({l1, l2, l, m1, m2, 0});
                                if (std::abs(m1 + m2) > l) CHECK(c.is_zero());
                                if (!c.is_zero()) CHECK(c.parity() == 0);
                            }
                }
}

TEST_CASE("pseudo-orthogonality and inversion") {
    for (int lambda : {0, 1}) {
        CHECK(verify_orthogonality(0, 2, lambda));
        CHECK(verify_orthogonality(1, 1, lambda));
        CHECK(verify_orthogonality(1, 2, lambda));
        CHECK(verify_orthogonality(2, 2, lambda));
        CHECK(verify_orthogonality(2, 3, lambda));
        CHECK(verify_orthogonality(3, 3, lambda));
    }
}

TEST_CASE("coupled vectors transform irreducibly with pseudo-norm signs") {
    for (int lambda : {0, 1}) {
        CHECK(verify_coupled_transform(1, 1, 2, lambda));
        CHECK(verify_coupled_transform(1, 1, 1, lambda));
        CHECK(verify_coupled_transform(1, 1, 0, lambda));
        CHECK(verify_coupled_transform(2, 1, 2, lambda));
        CHECK(verify_coupled_transform(2, 2, 3, lambda));
        CHECK(verify_coupled_transform(3, 2, 1, lambda));
    }
    CHECK_THROWS(verify_coupled_transform(1, 1, 3, 0));
}

namespace {

void check_golden(const std::string& file) {
    std::ifstream in(std::string(OSPQ_TEST_DATA_DIR) + "/" + file);
    REQUIRE(in.good());
    json doc = json::parse(in);
    int l1 = doc["ell1"], l2 = doc["ell2"];

    for (int lambda : {0, 1}) {
        std::map<std::string, Scalar> consts;
        consts["sgn"] = Scalar(lambda ? -1 : 1);
        if (doc.contains("defs"))
            for (auto& [name, expr] : doc["defs"].items())
                consts[name] = parse_scalar(expr.get<std::string>(), consts);

        int tables_seen = 0;
        for (auto& tab : doc["tables"]) {
            int l = tab["ell"];
            ++tables_seen;
            CGCTable computed = cgc_table(l1, l2, l, lambda);
            for (auto& row : tab["rows"]) {
                int m = row["m"];
                Scalar of = parse_scalar(row["of"].get<std::string>(), consts);
                // the registered display factor must match the published one
                REQUIRE(computed.row_factors.count(m) == 1);
                CHECK(computed.row_factors.at(m) == of);
                std::map<int, Scalar> expected;
                for (auto& [m1s, expr] : row["entries"].items())
                    expected[std::stoi(m1s)] =
                        parse_scalar(expr.get<std::string>(), consts) * of;
                for (int m1 = -l1; m1 <= l1; ++m1) {
                    int m2 = m - m1;
                    if (std::abs(m2) > l2) continue;
                    CAPTURE(file); CAPTURE(l); CAPTURE(lambda);
                    CAPTURE(m); CAPTURE(m1);
                    auto it = expected.find(m1);
                    Scalar want = it == expected.end() ? Scalar(0) : it->second;
                    auto ct = computed.entries.find({m1, m2});
                    Scalar got = ct == computed.entries.end() ? Scalar(0) : ct->second;
                    CHECK(got == want);
                }
            }
            CHECK(static_cast<int>(tab["rows"].size()) == 2 * l + 1);
        }
        CHECK(tables_seen == 2 * std::min(l1, l2) + 1);
    }
}

} // namespace

TEST_CASE("golden tables 1 (x) 1") { check_golden("cgc_1_1.json"); }
TEST_CASE("golden tables 2 (x) 2") { check_golden("cgc_2_2.json"); }

TEST_CASE("table export formats") {
    std::string js = emit_table(1, 1, 0, "json");
    CHECK_NOTHROW(json::parse(js));
    json parsed = json::parse(js);
    CHECK(parsed.size() == 3);   // ell = 2, 1, 0

    std::string csv = emit_table(0, 0, 0, "csv");
    CHECK(csv.find("0,0,0,0,0,0,\"(1)\"") != std::string::npos);

    std::string tex = emit_table(1, 1, 1, "latex");
    CHECK(tex.find("\\begin{array}") != std::string::npos);
    CHECK(tex.find("\\mathrm{OF}") != std::string::npos);

    CHECK_THROWS(emit_table(1, 1, 0, "xml"));
}
