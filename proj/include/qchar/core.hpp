#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/monomial.hpp"

namespace qchar {

/// Coefficients on the fundamental weights Lambda_1..Lambda_n.
struct Weight {
    std::vector<int> coeffs;

    Weight() = default;
    explicit Weight(int n) : coeffs(static_cast<std::size_t>(n), 0) {}
    explicit Weight(std::vector<int> c) : coeffs(std::move(c)) {}

    bool dominant() const;
    bool is_zero() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight operator-() const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

/// Throws std::invalid_argument if `m` mentions a node outside 1..rank.
void check_nodes(const CartanData& cd, const Monomial& m);

/// omega(m) = sum u_{i,a}(m) Lambda_i.
Weight omega(const CartanData& cd, const Monomial& m);

bool is_dominant(const Monomial& m);
bool is_antidominant(const Monomial& m);
bool is_j_dominant(const Monomial& m, int node);
bool is_j_dominant(const Monomial& m, const std::vector<int>& nodes);
/// Every variable at the highest q-exponent carries a nonpositive power. False for the unit.
bool is_right_negative(const Monomial& m);
/// Same with the lowest q-exponent.
bool is_left_negative(const Monomial& m);
/// All |u_{i,a}| <= 1.
bool is_thin_monomial(const Monomial& m);

struct MonomialFlags {
    bool dominant = false;
    bool antidominant = false;
    bool right_negative = false;
    bool left_negative = false;
    bool thin_monomial = false;
};

MonomialFlags classify_monomial(const CartanData& cd, const Monomial& m);

/// A_{i,q^r}^{-1}.
Monomial a_inverse(const CartanData& cd, int i, int r);
/// A_{i,q^r}.
Monomial a_monomial(const CartanData& cd, int i, int r);

/// Exponents v_{i,r} with low = high * prod A_{i,q^r}^{-v_{i,r}}.
struct AFactorization {
    std::map<std::pair<int, int>, int> v;  // (node, exponent) -> v >= 0
    std::vector<int> per_node;            // v_i, 1-based storage at index i-1
    int total = 0;                        // v
};

/// Peels A-factors from the highest q-exponent downward. Returns nullopt when
/// low is not <= high. Exact: the result always reconstructs low from high.
std::optional<AFactorization> factor_over_A(const CartanData& cd, const Monomial& low, const Monomial& high);

/// Product of A^{-v} over the given exponents.
Monomial a_product(const CartanData& cd, const std::map<std::pair<int, int>, int>& v);

/// Y_{i,q^r}^e -> Y_{i,q^{-r}}^{-e}.
Monomial sigma_map(const Monomial& m);
/// Adds s to every q-exponent.
Monomial shift_map(const Monomial& m, int s);

/// prod Y_{bar i, q^{-r - twist + normalize}}^{u_{i,q^r}(m)}.
Monomial sigma_partner(const CartanData& cd, const Monomial& m, int normalize = 0);

/// prod Y_{bar i, q^{r + twist}}^{-u_{i,q^r}(m)}: the expected lowest monomial of L(m).
Monomial lowest_formula(const CartanData& cd, const Monomial& m);

}  // namespace qchar
