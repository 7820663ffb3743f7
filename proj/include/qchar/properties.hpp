#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qchar/explorer.hpp"

namespace qchar {

enum class Verdict { Yes, No, Unknown };

std::string_view to_string(Verdict v);

struct PropertyResult {
    Verdict verdict = Verdict::Unknown;
    std::string certificate;
    std::optional<Monomial> witness;
};

struct PropertyReport {
    Monomial head;
    PropertyResult special;
    PropertyResult antispecial;
    PropertyResult thin;
    QCharacter chi;  // FM output for the head (permissive run)
    bool trusted = false;
};

struct CheckOptions {
    FmOptions fm;
    ExploreOptions explore;
    std::vector<ExploreStep> script;  // guided chain for the special property
    bool auto_explore = true;
    bool antispecial = true;
};

/// special: yes when FM converges color-consistently with a unique dominant
/// monomial; no when a chain certifies another dominant monomial.
/// antispecial: special of the sigma partner when twist data exists, else read
/// off a trusted character. thin: read off a trusted character.
PropertyReport check_properties(const CartanData& cd, const Monomial& m, const CheckOptions& opts = {});

/// Result for the special property only, with the FM output.
PropertyResult check_special(const CartanData& cd, const Monomial& m, const CheckOptions& opts, QCharacter* chi_out,
                             bool* trusted_out);

}  // namespace qchar
