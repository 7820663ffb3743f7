#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qchar {

/// One factor Y_{node, q^exp}^pow of a Laurent monomial.
struct Factor {
    int node = 0;
    int exp = 0;
    int pow = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// A Laurent monomial in the variables Y_{i, q^r}.
///
/// Factors are kept sorted by (node, exp) with no zero powers, so two equal
/// monomials always have identical storage and serialization.
class Monomial {
public:
    Monomial() = default;

    static Monomial Y(int node, int exp, int pow = 1);
    /// Accepts factors in any order with repeats; merges and drops zeros.
    static Monomial from_factors(std::vector<Factor> factors);

    bool is_unit() const { return factors_.empty(); }
    std::span<const Factor> factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }

    int power(int node, int exp) const;

    /// u_i(m): sum of the exponents carried by node i.
    int node_degree(int node) const;
    /// u(m): sum of all exponents.
    int degree() const;

    int max_exp() const;
    int min_exp() const;

    Monomial inverse() const;
    /// m^{-> node}: keep only the factors of `node`.
    Monomial restrict_to(int node) const;
    /// Drop the factors of `node`.
    Monomial without(int node) const;

    /// *this *= other^k
    Monomial& multiply(const Monomial& other, int k = 1);
    Monomial& operator*=(const Monomial& other) { return multiply(other, 1); }
    Monomial& operator/=(const Monomial& other) { return multiply(other, -1); }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                      b.factors_.end());
    }

    std::size_t hash() const noexcept;

private:
    std::vector<Factor> factors_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Canonical text: tokens `i_r` or `i_r^e` ordered by (node, exponent); `1` for the unit.
std::string to_string(const Monomial& m);

/// Parses the grammar `"1" | token (" " token)*`, `token := INT "_" INT ("^" INT)?`.
/// Repeated variables are multiplied together. Throws ParseError.
Monomial parse_monomial(std::string_view text);

}  // namespace qchar

template <>
struct std::hash<qchar::Monomial> {
    std::size_t operator()(const qchar::Monomial& m) const noexcept { return m.hash(); }
};
