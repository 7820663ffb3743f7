#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qchar/character.hpp"

namespace qchar {

enum class FmMode { Strict, Permissive };

struct FmOptions {
    int max_v = 10000;
    std::size_t max_terms = 5'000'000;
    FmMode mode = FmMode::Strict;
    int threads = 1;
    /// When set, monomials of one grade are processed in a seeded random order.
    std::optional<std::uint64_t> order_seed;
};

enum class FmStatus { Converged, StrictAbort, CapHit };

std::string_view to_string(FmStatus s);

/// One term of L_j(m) written as m * prod_s A_{j,q^s}^{-1}.
struct LPiece {
    std::vector<int> a_exps;  // sorted, with repeats
    Mult coeff = 1;
};

/// Pieces of L_j(m) for the restriction of m to node j (step r_j). The empty
/// piece (the head) comes first.
std::vector<LPiece> l_pieces(const CartanData& cd, const Monomial& m, int j);

/// L_j(m) for a j-dominant m; throws std::invalid_argument otherwise.
QCharacter l_expansion(const CartanData& cd, const Monomial& m, int j);

/// Frenkel-Mukhin saturation from a dominant m. The status is also reflected
/// in the diagnostics (converged / strict_abort / cap_hit).
QCharacter fm_qchar(const CartanData& cd, const Monomial& m, const FmOptions& opts = {});

FmStatus fm_status(const QCharacter& chi);

struct ColorCheck {
    bool ok = true;
    int node = 0;  // failing node
    std::string detail;
};

/// Decomposes chi as a nonnegative combination of L_i pieces for every node i,
/// grading terms with factor_over_A against the head.
ColorCheck verify_color_decomposition(const CartanData& cd, const QCharacter& chi);

/// Product over the factors of m of the fundamental characters.
QCharacter standard_qchar(const CartanData& cd, const Monomial& m, const FmOptions& opts = {});

/// The unique term below every other term; nullopt when no such term exists.
std::optional<Monomial> lowest_monomial(const CartanData& cd, const QCharacter& chi);

/// lowest_monomial(chi) equals the twist formula for the head.
bool check_lowest(const CartanData& cd, const Monomial& m, const QCharacter& chi);

}  // namespace qchar
