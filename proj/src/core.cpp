#include "qchar/core.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace qchar {

bool Weight::dominant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

Weight Weight::operator-() const {
    Weight w = *this;
    for (int& c : w.coeffs) c = -c;
    return w;
}

std::string to_string(const Weight& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.coeffs[i]);
    }
    return out + ")";
}

void check_nodes(const CartanData& cd, const Monomial& m) {
    for (const Factor& f : m.factors())
        if (f.node < 1 || f.node > cd.rank)
            throw std::invalid_argument("node " + std::to_string(f.node) + " out of range for " + cd.name());
}

Weight omega(const CartanData& cd, const Monomial& m) {
    Weight w(cd.rank);
    for (const Factor& f : m.factors()) {
        if (f.node < 1 || f.node > cd.rank) throw std::invalid_argument("node out of range in omega");
        w.coeffs[f.node - 1] += f.pow;
    }
    return w;
}

bool is_dominant(const Monomial& m) {
    for (const Factor& f : m.factors())
        if (f.pow < 0) return false;
    return true;
}

bool is_antidominant(const Monomial& m) {
    for (const Factor& f : m.factors())
        if (f.pow > 0) return false;
    return true;
}

bool is_j_dominant(const Monomial& m, int node) {
    for (const Factor& f : m.factors())
        if (f.node == node && f.pow < 0) return false;
    return true;
}

bool is_j_dominant(const Monomial& m, const std::vector<int>& nodes) {
    return std::all_of(nodes.begin(), nodes.end(), [&](int j) { return is_j_dominant(m, j); });
}

namespace {

// All monomials here live in the single orbit q^Z, so the per-orbit column
// test reduces to one column.
bool column_nonpositive(const Monomial& m, int exp) {
    for (const Factor& f : m.factors())
        if (f.exp == exp && f.pow > 0) return false;
    return true;
}

}  // namespace

bool is_right_negative(const Monomial& m) {
    if (m.is_unit()) return false;
    return column_nonpositive(m, m.max_exp());
}

bool is_left_negative(const Monomial& m) {
    if (m.is_unit()) return false;
    return column_nonpositive(m, m.min_exp());
}

bool is_thin_monomial(const Monomial& m) {
    for (const Factor& f : m.factors())
        if (f.pow > 1 || f.pow < -1) return false;
    return true;
}

MonomialFlags classify_monomial(const CartanData& cd, const Monomial& m) {
    check_nodes(cd, m);
    MonomialFlags flags;
    flags.dominant = is_dominant(m);
    flags.antidominant = is_antidominant(m);
    flags.right_negative = is_right_negative(m);
    flags.left_negative = is_left_negative(m);
    flags.thin_monomial = is_thin_monomial(m);
    return flags;
}

Monomial a_inverse(const CartanData& cd, int i, int r) {
    if (i < 1 || i > cd.rank) throw std::invalid_argument("a_inverse: node out of range");
    std::vector<Factor> fs;
    const int ri = cd.r(i);
    fs.push_back({i, r - ri, -1});
    fs.push_back({i, r + ri, -1});
    for (int j = 1; j <= cd.rank; ++j) {
        if (j == i) continue;
        const int cji = cd.c(j, i);
        for (int k = 1; k <= -cji; ++k) fs.push_back({j, r - cji + 1 - 2 * k, 1});
    }
    return Monomial::from_factors(std::move(fs));
}

Monomial a_monomial(const CartanData& cd, int i, int r) { return a_inverse(cd, i, r).inverse(); }

Monomial a_product(const CartanData& cd, const std::map<std::pair<int, int>, int>& v) {
    Monomial out;
    for (const auto& [key, count] : v) out.multiply(a_inverse(cd, key.first, key.second), count);
    return out;
}

std::optional<AFactorization> factor_over_A(const CartanData& cd, const Monomial& low, const Monomial& high) {
    check_nodes(cd, low);
    check_nodes(cd, high);
    Monomial ratio = low / high;
    AFactorization out;
    out.per_node.assign(static_cast<std::size_t>(cd.rank), 0);
    if (ratio.is_unit()) return out;

    const int floor_exp = ratio.min_exp();
    std::vector<Monomial> a_cache;

    // In a product of A^{-1}, the top column only holds the Y_{i,s+r_i}^{-1}
    // factors, provided no neighbour factor of A_{i,s}^{-1} reaches s + r_i.
    for (int i = 1; i <= cd.rank; ++i)
        for (int j = 1; j <= cd.rank; ++j)
            if (j != i && -cd.c(j, i) > cd.r(i))
                throw CartanError("factor_over_A: Cartan data " + cd.name() +
                                  " has |C(j,i)| > r_i; top-down peeling is not valid");

    while (!ratio.is_unit()) {
        const int top = ratio.max_exp();
        std::vector<std::pair<int, int>> peel;  // (node, count)
        for (const Factor& f : ratio.factors()) {
            if (f.exp != top) continue;
            if (f.pow > 0) return std::nullopt;
            peel.emplace_back(f.node, -f.pow);
        }
        for (auto [i, count] : peel) {
            const int s = top - cd.r(i);
            if (s - cd.r(i) < floor_exp) return std::nullopt;
            ratio.multiply(a_inverse(cd, i, s), -count);
            out.v[{i, s}] += count;
            out.per_node[static_cast<std::size_t>(i - 1)] += count;
            out.total += count;
        }
    }
    return out;
}

Monomial sigma_map(const Monomial& m) {
    std::vector<Factor> fs;
    fs.reserve(m.size());
    for (const Factor& f : m.factors()) fs.push_back({f.node, -f.exp, -f.pow});
    return Monomial::from_factors(std::move(fs));
}

Monomial shift_map(const Monomial& m, int s) {
    std::vector<Factor> fs;
    fs.reserve(m.size());
    for (const Factor& f : m.factors()) fs.push_back({f.node, f.exp + s, f.pow});
    return Monomial::from_factors(std::move(fs));
}

Monomial sigma_partner(const CartanData& cd, const Monomial& m, int normalize) {
    if (!cd.has_twist()) throw CartanError("sigma_partner needs twist data; custom Cartan data has none");
    check_nodes(cd, m);
    if (!is_dominant(m)) throw std::invalid_argument("sigma_partner expects a dominant monomial");
    std::vector<Factor> fs;
    for (const Factor& f : m.factors()) fs.push_back({cd.bar(f.node), -f.exp - *cd.twist + normalize, f.pow});
    return Monomial::from_factors(std::move(fs));
}

Monomial lowest_formula(const CartanData& cd, const Monomial& m) {
    if (!cd.has_twist()) throw CartanError("lowest_formula needs twist data; custom Cartan data has none");
    check_nodes(cd, m);
    std::vector<Factor> fs;
    for (const Factor& f : m.factors()) fs.push_back({cd.bar(f.node), f.exp + *cd.twist, -f.pow});
    return Monomial::from_factors(std::move(fs));
}

}  // namespace qchar
