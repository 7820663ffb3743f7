#include <fstream>

#include "doctest.h"
#include "qchar/io.hpp"
#include "qchar/minaff.hpp"
#include "qchar/tsystem.hpp"

using namespace qchar;

namespace {
Monomial M(const char* s) { return parse_monomial(s); }

io::json load(const std::string& name) {
    std::ifstream in(std::string(QCHAR_DATA_DIR) + "/" + name);
    REQUIRE(in);
    return io::json::parse(in);
}
}  // namespace

TEST_CASE("kr_head") {
    auto b2 = build_cartan("B2");
    CHECK(kr_head(b2, {1, 2, 1}) == M("1_-1 1_3"));
    CHECK(kr_head(b2, {2, 0, 5}).is_unit());
    CHECK(to_string(KrSpec{1, 2, 1}) == "W^(1)_{2,q^1}");
}

TEST_CASE("s_term in rank one is empty") {
    for (int k = 1; k <= 4; ++k) CHECK(s_term(build_cartan("A1"), 1, k, 0).empty());
}

TEST_CASE("s_term in simply-laced types: one W^(j)_{k,q^{r+1}} per neighbour") {
    for (const char* name : {"A3", "A4", "D4", "D5", "E6"}) {
        auto cd = build_cartan(name);
        for (int i = 1; i <= cd.rank; ++i)
            for (int k = 1; k <= 4; ++k)
                for (int r : {0, 3}) {
                    std::vector<KrSpec> want;
                    for (int j = 1; j <= cd.rank; ++j)
                        if (cd.c(j, i) < 0) want.push_back({j, k, r + 1});
                    CHECK(s_term(cd, i, k, r) == want);
                }
    }
}

TEST_CASE("s_term non-simply-laced examples") {
    auto b2 = build_cartan("B2");
    CHECK(s_term(b2, 1, 1, 0) == std::vector<KrSpec>{{2, 2, 2}});
    CHECK(s_term(b2, 2, 1, 0) == std::vector<KrSpec>{{1, 1, 1}, {1, 0, 1}});
    CHECK(s_term(b2, 2, 2, 0) == std::vector<KrSpec>{{1, 1, 0}, {1, 1, 2}});
    CHECK(s_term(b2, 2, 3, 0) == std::vector<KrSpec>{{1, 2, 1}, {1, 1, 1}});
    auto g2 = build_cartan("G2");
    CHECK(s_term(g2, 2, 2, 0) == std::vector<KrSpec>{{1, 1, 0}, {1, 1, 2}, {1, 0, 1}});
    CHECK(s_term(g2, 1, 1, 0) == std::vector<KrSpec>{{2, 3, 3}});
}

TEST_CASE("head consistency for every built-in type") {
    for (const char* name : {"A2", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "E6", "F4", "G2"}) {
        auto cd = build_cartan(name);
        for (int i = 1; i <= cd.rank; ++i)
            for (int k = 1; k <= 5; ++k)
                for (int r : {-2, 0, 1}) {
                    CAPTURE(name);
                    CAPTURE(i);
                    CAPTURE(k);
                    CHECK(tsystem_heads_consistent(cd, i, k, r));
                }
    }
}

TEST_CASE("every S factor is strictly below the LHS head") {
    for (const char* name : {"B3", "C3", "G2", "F4"}) {
        auto cd = build_cartan(name);
        for (int i = 1; i <= cd.rank; ++i)
            for (int k = 1; k <= 3; ++k) {
                const Monomial lhs = kr_head(cd, {i, k, 0}) * kr_head(cd, {i, k, 2 * cd.r(i)});
                Monomial s;
                for (const KrSpec& w : s_term(cd, i, k, 0)) s *= kr_head(cd, w);
                auto f = factor_over_A(cd, s, lhs);
                REQUIRE(f);
                CHECK(f->total == k);
            }
    }
}

TEST_CASE("T-system identities hold exactly") {
    struct Case {
        const char* type;
        int i, kmax;
    };
    for (Case c : {Case{"A2", 1, 3}, {"A2", 2, 3}, {"B2", 1, 3}, {"B2", 2, 3}, {"C2", 1, 2}, {"C2", 2, 2},
                   {"G2", 1, 1}, {"G2", 2, 2}, {"A3", 2, 2}}) {
        auto cd = build_cartan(c.type);
        for (int k = 1; k <= c.kmax; ++k) {
            CAPTURE(c.type);
            CAPTURE(c.i);
            CAPTURE(k);
            auto rep = verify_tsystem(cd, c.i, k, 0);
            CHECK(rep.holds);
            CHECK_FALSE(rep.first_diff);
            CHECK(rep.lhs.same_terms(rep.rhs));
        }
    }
}

TEST_CASE("T-system at a shifted spectral parameter") {
    auto rep = verify_tsystem(build_cartan("B2"), 2, 2, 5);
    CHECK(rep.holds);
}

TEST_CASE("a wrong lower term is detected") {
    auto cd = build_cartan("A2");
    ProductIdentity id;
    id.lhs = {{M("1_0"), M("1_2")}};
    id.rhs = {{M("1_0 1_2")}};  // missing chi(L(2_1))
    auto rep = verify_product_identity(cd, id);
    CHECK_FALSE(rep.identity.holds);
    REQUIRE(rep.identity.first_diff);
    CHECK(rep.identity.lhs_coeff != rep.identity.rhs_coeff);
    id.rhs.push_back({M("2_1")});
    CHECK(verify_product_identity(cd, id).identity.holds);
}

TEST_CASE("sl3 product identity: printed form versus completed form") {
    auto printed = load("sl3_multi.json");
    auto cd = io::cartan_from_json(printed.at("cartan"));
    auto r1 = verify_product_identity(cd, io::identity_from_json(printed));
    // Dimension count: 42 * 42 on the left, 60 * 27 + 28 * 3 on the right.
    CHECK(r1.identity.lhs.total() == 1764);
    CHECK(r1.identity.rhs.total() == 1704);
    CHECK_FALSE(r1.identity.holds);
    CHECK_FALSE(r1.lists_match);
    // Each listed monomial does occur among the computed dominant ones.
    auto id = io::identity_from_json(printed);
    for (std::size_t p = 0; p < id.expected_dominant.size(); ++p)
        for (const Monomial& m : id.expected_dominant[p]) {
            const auto& got = r1.dominant[p];
            CHECK(std::find(got.begin(), got.end(), m) != got.end());
        }
    CHECK(r1.dominant[0].size() == 15);
    CHECK(r1.dominant[1].size() == 11);
    CHECK(r1.dominant[2].size() == 2);

    auto completed = load("sl3_multi_completed.json");
    auto r2 = verify_product_identity(cd, io::identity_from_json(completed));
    CHECK(r2.identity.holds);
    CHECK(r2.identity.rhs.total() == 1764);
}
