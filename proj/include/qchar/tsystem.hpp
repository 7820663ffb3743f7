#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qchar/fm.hpp"

namespace qchar {

/// W^{(node)}_{k, q^center}, highest monomial X^{(node)}_{k,q^center}.
struct KrSpec {
    int node = 0;
    int k = 0;
    int center = 0;

    friend bool operator==(const KrSpec&, const KrSpec&) = default;
};

std::string to_string(const KrSpec& w);

Monomial kr_head(const CartanData& cd, const KrSpec& w);

/// Factors of S^{(i)}_{k,q^r}, the lower term of the T-system relation
///   W_{k,q^r} W_{k,q^{r+2r_i}} = W_{k+1,q^{r+r_i}} W_{k-1,q^{r+r_i}} + S
/// (all labels centered). One factor per (j, t) with C(j,i) < 0 and
/// 1 <= t <= -C(i,j). Throws CartanError on a non-integral exponent.
std::vector<KrSpec> s_term(const CartanData& cd, int i, int k, int r);

/// Symbolic check, before any FM run: the LHS head equals the head of
/// W_{k+1}W_{k-1}, and the product of the S heads equals the LHS head times
/// A^{-1}_{i,s} over the KR steps of the first factor.
bool tsystem_heads_consistent(const CartanData& cd, int i, int k, int r);

struct IdentityReport {
    bool holds = false;
    std::optional<Monomial> first_diff;
    Mult lhs_coeff = 0;  // at first_diff
    Mult rhs_coeff = 0;
    QCharacter lhs;
    QCharacter rhs;
    std::vector<std::string> notes;
};

/// chi(W_{k,r}) chi(W_{k,r+2r_i}) against chi(W_{k+1,r+r_i}) chi(W_{k-1,r+r_i}) + chi(S).
IdentityReport verify_tsystem(const CartanData& cd, int i, int k, int r, const FmOptions& opts = {});

/// Sum over products of simple characters on each side. Each product is a
/// list of dominant heads.
struct ProductIdentity {
    std::vector<std::vector<Monomial>> lhs;
    std::vector<std::vector<Monomial>> rhs;
    /// Optional expected dominant monomials of each product, lhs products
    /// first, then rhs. The head of the first lhs product is left out.
    std::vector<std::vector<Monomial>> expected_dominant;
};

struct ProductIdentityReport {
    IdentityReport identity;
    /// Dominant monomials of each product (lhs then rhs), canonical order,
    /// without the head of the first lhs product.
    std::vector<std::vector<Monomial>> dominant;
    bool lists_match = true;
    std::vector<std::string> list_mismatches;
};

/// Throws std::runtime_error if some factor is not certified special.
ProductIdentityReport verify_product_identity(const CartanData& cd, const ProductIdentity& ident,
                                              const FmOptions& opts = {});

}  // namespace qchar
