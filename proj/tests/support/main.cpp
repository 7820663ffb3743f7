#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdlib>
#include <string>
#include <vector>

#include "support/oracles.hpp"

namespace testsupport {
std::uint64_t g_seed = 20240611;
}

// Accepts --seed N or --seed=N (also QCHAR_TEST_SEED) and hands the rest to doctest.
int main(int argc, char** argv) {
    if (const char* env = std::getenv("QCHAR_TEST_SEED")) testsupport::g_seed = std::stoull(env);
    std::vector<char*> rest;
    for (int k = 0; k < argc; ++k) {
        std::string a = argv[k];
        if (a == "--seed" && k + 1 < argc) {
            testsupport::g_seed = std::stoull(argv[++k]);
        } else if (a.rfind("--seed=", 0) == 0) {
            testsupport::g_seed = std::stoull(a.substr(7));
        } else {
            rest.push_back(argv[k]);
        }
    }
    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}
