#pragma once

#include <vector>

#include "qchar/character.hpp"

namespace qchar {

/// X_{k, q^center} in a rank-one direction. `step` is r_i, so consecutive
/// variables of the string sit 2*step apart; `node` labels the variables.
struct KrLabel {
    int k = 0;
    int center = 0;

    friend bool operator==(const KrLabel&, const KrLabel&) = default;
    friend auto operator<=>(const KrLabel& a, const KrLabel& b) {
        if (a.center != b.center) return a.center <=> b.center;
        return a.k <=> b.k;
    }
};

Monomial kr_monomial_sl2(int k, int center, int step = 1, int node = 1);

/// Exponents s of the A^{-1}_{q^s} applied successively in the KR character:
/// center + step*k, center + step*(k-2), ..., center + step*(2-k).
std::vector<int> kr_a_steps(int k, int center, int step = 1);

/// k+1 terms, multiplicity 1, head X_{k,q^center}.
QCharacter kr_qchar_sl2(int k, int center, int step = 1, int node = 1);

bool in_special_position(const KrLabel& x, const KrLabel& y, int step = 1);

/// Greedy factorization into maximal strings. `m` must be dominant and use
/// only one node. Result sorted by (center, k).
std::vector<KrLabel> normal_writing(const Monomial& m, int step = 1);

/// Character of the simple module: product of KR characters over the normal writing.
QCharacter simple_qchar_sl2(const Monomial& m, int step = 1);

}  // namespace qchar
