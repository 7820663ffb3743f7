#include <random>

#include "doctest.h"
#include "qchar/fm.hpp"
#include "qchar/io.hpp"
#include "qchar/minaff.hpp"
#include "qchar/sl2.hpp"
#include "support/oracles.hpp"

using namespace qchar;

namespace {
Monomial M(const char* s) { return parse_monomial(s); }

std::set<Monomial> term_set(const QCharacter& chi) {
    std::set<Monomial> s;
    for (const auto& [m, k] : chi.terms()) s.insert(m);
    return s;
}

const char* kFundamentalTypes[] = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3",
                                   "C4", "D4", "D5", "E6", "F4", "G2"};
}  // namespace

TEST_CASE("l_expansion examples") {
    CHECK(term_set(l_expansion(build_cartan("A1"), M("1_0"), 1)) == std::set<Monomial>{M("1_0"), M("1_2^-1")});
    CHECK(term_set(l_expansion(build_cartan("B2"), M("1_0"), 1)) ==
          std::set<Monomial>{M("1_0"), M("1_4^-1 2_1 2_3")});
    CHECK(term_set(l_expansion(build_cartan("B2"), M("2_1"), 2)) == std::set<Monomial>{M("2_1"), M("1_2 2_3^-1")});
    CHECK(term_set(l_expansion(build_cartan("B2"), M("1_4^-1 2_1 2_3"), 2)) ==
          std::set<Monomial>{M("1_4^-1 2_1 2_3"), M("2_1 2_5^-1"), M("1_2 2_3^-1 2_5^-1")});
    CHECK_THROWS_AS(l_expansion(build_cartan("B2"), M("2_1 2_5^-1"), 2), std::invalid_argument);
}

TEST_CASE("FM on sl2 KR modules matches the closed form") {
    auto a1 = build_cartan("A1");
    for (int k = 0; k <= 10; ++k) {
        auto chi = fm_qchar(a1, kr_monomial_sl2(k, k - 1));
        CHECK(fm_status(chi) == FmStatus::Converged);
        CHECK(term_set(chi) == testsupport::sl2_kr_terms(k, k - 1, 1));
        CHECK(chi.total() == k + 1);
    }
}

TEST_CASE("G2 fundamental 2_0") {
    auto chi = fm_qchar(build_cartan("G2"), M("2_0"));
    const std::set<Monomial> want{M("2_0"),         M("2_2^-1 1_1"), M("1_7^-1 2_4 2_6"), M("2_4 2_8^-1"),
                                  M("2_6^-1 2_8^-1 1_5"), M("1_11^-1 2_10"), M("2_12^-1")};
    CHECK(term_set(chi) == want);
    CHECK(chi.all_one());
    CHECK(lowest_monomial(build_cartan("G2"), chi) == M("2_12^-1"));
}

TEST_CASE("B2 fundamental 1_0") {
    auto chi = fm_qchar(build_cartan("B2"), M("1_0"));
    CHECK(term_set(chi) ==
          std::set<Monomial>{M("1_0"), M("1_4^-1 2_1 2_3"), M("2_1 2_5^-1"), M("1_2 2_3^-1 2_5^-1"), M("1_6^-1")});
    CHECK(lowest_monomial(build_cartan("B2"), chi) == M("1_6^-1"));
    CHECK(lowest_monomial(build_cartan("A1"), fm_qchar(build_cartan("A1"), M("1_0"))) == M("1_2^-1"));
}

TEST_CASE("every FM term lies below the head") {
    for (auto [name, m] : {std::pair{"C3", "2_0 2_2"}, {"B3", "1_0 3_7"}, {"G2", "1_0"}, {"D4", "2_0"}}) {
        auto cd = build_cartan(name);
        auto chi = fm_qchar(cd, M(m));
        for (const auto& [t, k] : chi.terms()) CHECK(factor_over_A(cd, t, chi.head()));
        CHECK(verify_color_decomposition(cd, chi).ok);
    }
}

TEST_CASE("lowest-monomial formula for built-in fundamentals") {
    for (const char* name : kFundamentalTypes) {
        auto cd = build_cartan(name);
        for (int i = 1; i <= cd.rank; ++i) {
            CAPTURE(name);
            CAPTURE(i);
            auto chi = fm_qchar(cd, Monomial::Y(i, 0));
            REQUIRE(fm_status(chi) == FmStatus::Converged);
            CHECK(check_lowest(cd, chi.head(), chi));
        }
    }
}

TEST_CASE("fundamental support: non-head terms use positive exponents only") {
    for (const char* name : kFundamentalTypes) {
        auto cd = build_cartan(name);
        for (int i = 1; i <= cd.rank; ++i) {
            CAPTURE(name);
            CAPTURE(i);
            auto chi = fm_qchar(cd, Monomial::Y(i, 0));
            for (const auto& [m, k] : chi.terms())
                if (m != chi.head()) CHECK(m.min_exp() > 0);
        }
    }
}

TEST_CASE("standard modules") {
    auto a1 = build_cartan("A1");
    auto s = standard_qchar(a1, M("1_0 1_2"));
    CHECK(s.size() == 4);
    CHECK(s.mult(Monomial{}) == 1);
    auto a2 = build_cartan("A2");
    CHECK(standard_qchar(a2, M("1_0 2_1")).total() == 9);
    CHECK(standard_qchar(a2, M("1_0")).same_terms(fm_qchar(a2, M("1_0"))));
}

TEST_CASE("tensor bound: terms of L(m1 m2) lie in the product of the term sets") {
    auto check = [](const char* name, const char* m1, const char* m2) {
        auto cd = build_cartan(name);
        auto c1 = fm_qchar(cd, M(m1));
        auto c2 = fm_qchar(cd, M(m2));
        auto c12 = fm_qchar(cd, M(m1) * M(m2));
        REQUIRE(fm_status(c12) == FmStatus::Converged);
        auto prod = multiply(c1, c2);
        for (const auto& [m, k] : c12.terms()) {
            CHECK(prod.contains(m));
            CHECK(k <= prod.mult(m));
        }
    };
    check("A2", "1_0", "2_1");
    check("A2", "1_0", "1_2");
    check("B2", "1_0", "2_5");
    check("C3", "3_0", "3_4");
    check("G2", "2_0", "2_2");
    check("B3", "1_0", "3_7");
}

TEST_CASE("weight characters of L(m) and L(sigma(m)^{-1}) agree") {
    for (auto [name, i, k] : {std::tuple{"A1", 1, 1}, {"A1", 1, 3}, {"A2", 1, 2}, {"A2", 2, 3}, {"A3", 2, 2}}) {
        auto cd = build_cartan(name);
        Monomial m = kr_monomial(cd, i, k, 0);
        Monomial dual = sigma_map(m).inverse();  // Y_{i,q^-r}, dominant
        auto w1 = weight_character(cd, fm_qchar(cd, m));
        auto w2 = weight_character(cd, fm_qchar(cd, dual));
        CHECK(w1 == w2);
    }
}

TEST_CASE("self-duality: shift(2r + twist) o sigma fixes the KR character") {
    for (auto [name, i] : {std::pair{"B2", 1}, {"G2", 2}}) {
        auto cd = build_cartan(name);
        for (int k = 1; k <= 3; ++k)
            for (int r : {0, 3}) {
                auto chi = fm_qchar(cd, kr_monomial(cd, i, k, r));
                auto image = shift_map(sigma_map(chi), 2 * r + *cd.twist);
                CHECK(image.same_terms(chi));
            }
    }
}

TEST_CASE("KR speciality and the A-bound") {
    for (const char* name : {"A2", "A3", "B2", "B3", "C2", "C3", "G2", "D4"}) {
        auto cd = build_cartan(name);
        for (int i = 1; i <= cd.rank; ++i)
            for (int k = 1; k <= (std::string(name) == "D4" ? 2 : 3); ++k) {
                CAPTURE(name);
                CAPTURE(i);
                CAPTURE(k);
                const Monomial m = kr_monomial(cd, i, k, 0);
                auto chi = fm_qchar(cd, m);
                REQUIRE(fm_status(chi) == FmStatus::Converged);
                CHECK(chi.dominant_monomials() == std::vector<Monomial>{m});
                const Monomial bound = m * a_inverse(cd, i, cd.r(i) * k);
                for (const auto& [t, mult] : chi.terms())
                    if (t != m) CHECK(factor_over_A(cd, t, bound));
            }
    }
}

TEST_CASE("strict mode aborts on a non-special head, permissive keeps going") {
    auto cd = build_cartan("C3");
    auto strict = fm_qchar(cd, M("2_0 2_2 3_7"));
    CHECK(fm_status(strict) == FmStatus::StrictAbort);
    FmOptions o;
    o.mode = FmMode::Permissive;
    auto perm = fm_qchar(cd, M("2_0 2_2 3_7"), o);
    CHECK(perm.diagnostics().converged);
    CHECK_FALSE(perm.diagnostics().extra_dominant.empty());
}

TEST_CASE("caps are reported") {
    FmOptions o;
    o.max_terms = 20;
    auto chi = fm_qchar(build_cartan("C3"), M("3_0 3_2"), o);
    CHECK(fm_status(chi) == FmStatus::CapHit);
    o = {};
    o.max_v = 2;
    CHECK(fm_status(fm_qchar(build_cartan("C3"), M("3_0 3_2"), o)) == FmStatus::CapHit);
}

TEST_CASE("determinism across thread counts and within-grade orders") {
    auto cd = build_cartan("C4");
    const Monomial m = M("3_0 3_2");
    FmOptions base;
    const std::string ref = io::character_text(cd, fm_qchar(cd, m, base));
    for (int threads : {2, 8}) {
        FmOptions o;
        o.threads = threads;
        CHECK(io::character_text(cd, fm_qchar(cd, m, o)) == ref);
    }
    for (std::uint64_t s : {std::uint64_t{1}, std::uint64_t{2}, testsupport::g_seed}) {
        FmOptions o;
        o.order_seed = s;
        o.threads = 3;
        CHECK(io::character_text(cd, fm_qchar(cd, m, o)) == ref);
    }
}
