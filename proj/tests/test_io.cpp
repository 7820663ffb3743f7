#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>

#include "doctest.h"
#include "qchar/cache.hpp"
#include "qchar/io.hpp"
#include "support/oracles.hpp"

using namespace qchar;
namespace fs = std::filesystem;

namespace {
Monomial M(const char* s) { return parse_monomial(s); }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("qchar-test-" + std::to_string(testsupport::g_seed) + "-" +
                                            std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};
}  // namespace

TEST_CASE("character JSON round trip") {
    for (auto [name, m] : {std::pair{"G2", "2_0"}, {"B2", "1_0 2_5"}, {"C3", "3_0 3_2"}}) {
        auto cd = build_cartan(name);
        auto chi = fm_qchar(cd, M(m));
        auto j = io::character_to_json(cd, chi);
        CHECK(j.at("schema_version") == io::kSchemaVersion);
        auto back = io::character_from_json(io::json::parse(j.dump()));
        CHECK(back.same_terms(chi));
        CHECK(back.head() == chi.head());
        CHECK(back.diagnostics().converged == chi.diagnostics().converged);
        CHECK(io::character_text(cd, back) == io::character_text(cd, chi));
    }
    auto j = io::character_to_json(build_cartan("A1"), fm_qchar(build_cartan("A1"), M("1_0")));
    j["schema_version"] = 99;
    CHECK_THROWS(io::character_from_json(j));
}

TEST_CASE("graded text output") {
    auto cd = build_cartan("A1");
    CHECK(io::character_text(cd, fm_qchar(cd, M("1_0 1_2"))) == "1_0 1_2  1\n1_0 1_4^-1  1\n1_2^-1 1_4^-1  1\n");
}

TEST_CASE("Cartan JSON") {
    CHECK(io::cartan_from_json("F4").matrix == build_cartan("F4").matrix);
    auto b23 = custom_cartan({{2, -1}, {-3, 2}});
    auto back = io::cartan_from_json(io::cartan_to_json(b23));
    CHECK(back.matrix == b23.matrix);
    CHECK(back.symmetrizers == b23.symmetrizers);
    CHECK(io::cartan_from_json(io::cartan_to_json(build_cartan("D5"))).twist == 8);
    CHECK_THROWS(io::cartan_from_json(io::json::parse(R"({"matrix": [[2, -1], [0, 2]]})")));
}

TEST_CASE("shape JSON") {
    auto s = io::shape_from_json(io::json::parse(R"({"outer": [2, 2], "inner": [1]})"));
    CHECK(s == SkewShape(Partition({2, 2}), Partition({1})));
}

TEST_CASE("monomial text round trip through JSON strings") {
    std::mt19937_64 rng(testsupport::g_seed + 11);
    std::uniform_int_distribution<int> node(1, 6), ex(-30, 30), pw(-4, 4);
    for (int t = 0; t < 500; ++t) {
        Monomial m;
        for (int k = 0; k < 6; ++k)
            if (int p = pw(rng)) m *= Monomial::Y(node(rng), ex(rng), p);
        io::json j = to_string(m);
        CHECK(parse_monomial(io::json::parse(j.dump()).get<std::string>()) == m);
    }
}

TEST_CASE("result cache") {
    TempDir tmp;
    ResultCache cache(tmp.path / "c");
    const io::json req = {{"op", "qchar"}, {"cartan", "B2"}, {"m", "1_0"}};
    CHECK_FALSE(cache.get(req));
    auto cd = build_cartan("B2");
    auto chi = fm_qchar(cd, M("1_0"));
    cache.put(req, io::character_to_json(cd, chi));
    auto hit = cache.get(req);
    REQUIRE(hit);
    CHECK(io::character_from_json(*hit).same_terms(chi));
    CHECK(ResultCache::key(req).size() == 64);
    CHECK(ResultCache::key(req) != ResultCache::key({{"op", "qchar"}, {"cartan", "B2"}, {"m", "1_2"}}));

    // no temporary files left behind
    int files = 0;
    for (const auto& e : fs::directory_iterator(tmp.path / "c")) {
        ++files;
        CHECK(e.path().extension() == ".json");
    }
    CHECK(files == 1);

    // a stale schema version is a miss
    const fs::path f = tmp.path / "c" / (ResultCache::key(req) + ".json");
    io::json entry = io::json::parse(std::ifstream(f));
    entry["schema_version"] = io::kSchemaVersion + 1;
    std::ofstream(f) << entry.dump();
    CHECK_FALSE(cache.get(req));

    // a corrupt entry is a miss
    std::ofstream(f) << "{not json";
    CHECK_FALSE(cache.get(req));
}

TEST_CASE("default cache directory follows the environment") {
    auto save = [](const char* k) { const char* v = std::getenv(k); return v ? std::optional<std::string>(v) : std::optional<std::string>(); };
    auto restore = [](const char* k, const std::optional<std::string>& v) {
        if (v) ::setenv(k, v->c_str(), 1);
        else ::unsetenv(k);
    };
    const auto q = save("QCHAR_CACHE"), x = save("XDG_CACHE_HOME");
    ::setenv("QCHAR_CACHE", "/tmp/some-cache", 1);
    CHECK(ResultCache::default_dir() == fs::path("/tmp/some-cache"));
    ::unsetenv("QCHAR_CACHE");
    ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(ResultCache::default_dir() == fs::path("/tmp/xdg/qchar-lab"));
    restore("QCHAR_CACHE", q);
    restore("XDG_CACHE_HOME", x);
}
