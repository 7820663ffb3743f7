#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qchar/properties.hpp"

namespace qchar {

using BigInt = boost::multiprecision::cpp_int;

enum class Condition { I, II };

std::string_view to_string(Condition c);

struct AffinizationSpec {
    CartanData cd;
    Weight lambda;
    Condition condition = Condition::I;
    /// (node K, exponent) fixing a_K = q^exponent. Defaults to the highest node
    /// with lambda_K > 0 at exponent 0.
    std::optional<std::pair<int, int>> anchor;
};

/// X^{(i)}_{k,q^r} = prod_{k'=1..k} Y_{i, q^{r + r_i(k-2k'+1)}}.
Monomial kr_monomial(const CartanData& cd, int i, int k, int r);

/// Spectral exponents c_i(lambda) and c'_i(lambda) for i = 1..n-1 (index 0 unused).
std::vector<int> c_exponents(const CartanData& cd, const Weight& lambda);
std::vector<int> c_prime_exponents(const CartanData& cd, const Weight& lambda);

/// Exponents of the a_i solved from the chosen condition and anchor.
std::vector<int> spectral_exponents(const AffinizationSpec& spec);

/// For linear Dynkin diagrams (A, B, C, F4, G2 and linear custom data).
Monomial minaff_monomial(const AffinizationSpec& spec);

/// Type D: a_s/a_{s+1} = c_s for s <= n-3, a_{n-2}/a_{n-1} = c_{n-2} and
/// a_{n-2}/a_n = q^{lambda_{n-2}+lambda_n+1} under (I); inverted ratios under (II).
Monomial type_d_minaff(const AffinizationSpec& spec);

/// Dispatches on the Cartan kind.
Monomial affinization_monomial(const AffinizationSpec& spec);

/// Positive roots in simple-root coordinates, sorted by height.
std::vector<std::vector<int>> positive_roots(const CartanData& cd);

/// Dimension of the simple U_q(g)-module of highest weight lambda.
BigInt weyl_dim(const CartanData& cd, const Weight& lambda);

struct Prediction {
    std::optional<Verdict> special;
    std::optional<Verdict> antispecial;
    std::optional<Verdict> thin;
    std::string source;
};

/// Expected properties of the minimal affinization of `spec`, by type and condition.
Prediction predict(const AffinizationSpec& spec);

struct MinaffReport {
    Monomial m;
    PropertyReport props;
    Prediction prediction;
    std::vector<std::string> disagreements;
    bool confirmed() const { return disagreements.empty(); }
};

MinaffReport minaff_report(const AffinizationSpec& spec, const CheckOptions& opts = {});

/// "2,0,1" -> Weight.
Weight parse_weight(const std::string& text, int rank);

}  // namespace qchar
