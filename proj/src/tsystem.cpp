#include "qchar/tsystem.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qchar/sl2.hpp"

namespace qchar {

std::string to_string(const KrSpec& w) {
    return "W^(" + std::to_string(w.node) + ")_{" + std::to_string(w.k) + ",q^" + std::to_string(w.center) + "}";
}

Monomial kr_head(const CartanData& cd, const KrSpec& w) {
    if (w.node < 1 || w.node > cd.rank) throw std::invalid_argument("KR node out of range");
    if (w.k < 0) throw std::invalid_argument("KR length must be >= 0");
    return kr_monomial_sl2(w.k, w.center, cd.r(w.node), w.node);
}

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::vector<KrSpec> s_term(const CartanData& cd, int i, int k, int r) {
    if (i < 1 || i > cd.rank) throw std::invalid_argument("s_term: node out of range");
    if (k < 1) throw std::invalid_argument("s_term: k must be >= 1");
    const int ri = cd.r(i);
    const int lhs_start = r - ri * (k - 1);
    std::vector<KrSpec> out;
    for (int j = 1; j <= cd.rank; ++j) {
        if (j == i || cd.c(j, i) >= 0) continue;
        const int rj = cd.r(j);
        const int cij = -cd.c(i, j);
        for (int t = 1; t <= cij; ++t) {
            const int len = -cd.c(j, i) + floor_div(ri * (k - t), rj);
            const int num = rj * (2 * t - 1);
            if (num % cij != 0)
                throw CartanError("s_term: exponent " + std::to_string(num) + "/" + std::to_string(cij) +
                                  " is not an integer for node " + std::to_string(j));
            const int start = lhs_start + num / cij;
            out.push_back({j, std::max(len, 0), start + rj * (len - 1)});
        }
    }
    return out;
}

bool tsystem_heads_consistent(const CartanData& cd, int i, int k, int r) {
    const int ri = cd.r(i);
    const Monomial lhs = kr_head(cd, {i, k, r}) * kr_head(cd, {i, k, r + 2 * ri});
    const Monomial first = kr_head(cd, {i, k + 1, r + ri}) * kr_head(cd, {i, k - 1, r + ri});
    if (lhs != first) return false;
    Monomial lowered = lhs;
    for (int s : kr_a_steps(k, r, ri)) lowered *= a_inverse(cd, i, s);
    Monomial s_head;
    for (const KrSpec& w : s_term(cd, i, k, r)) s_head *= kr_head(cd, w);
    return lowered == s_head;
}

namespace {

class FactorCache {
public:
    FactorCache(const CartanData& cd, const FmOptions& opts) : cd_(cd), opts_(opts) {}

    // Character of the simple module L(m). Throws unless FM certifies it.
    const QCharacter& get(const Monomial& m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        FmOptions o = opts_;
        o.mode = FmMode::Permissive;
        QCharacter chi = fm_qchar(cd_, m, o);
        const FmDiagnostics& d = chi.diagnostics();
        if (!d.converged) throw std::runtime_error("FM did not converge for " + to_string(m));
        const auto dom = chi.dominant_monomials();
        if (!d.color_consistent || dom.size() != 1 || dom.front() != m)
            throw std::runtime_error("factor " + to_string(m) + " is not certified special");
        return cache_.emplace(m, std::move(chi)).first->second;
    }

    QCharacter product(const std::vector<Monomial>& heads) {
        QCharacter out{Monomial{}};
        out.add(Monomial{});
        Monomial head;
        for (const Monomial& h : heads) {
            if (!is_dominant(h)) throw std::invalid_argument("head " + to_string(h) + " is not dominant");
            out = multiply(out, get(h));
            head *= h;
        }
        out.set_head(head);
        return out;
    }

private:
    const CartanData& cd_;
    FmOptions opts_;
    std::map<Monomial, QCharacter> cache_;
};

void compare(IdentityReport& rep) {
    rep.first_diff = first_difference(rep.lhs, rep.rhs);
    rep.holds = !rep.first_diff.has_value();
    if (rep.first_diff) {
        rep.lhs_coeff = rep.lhs.mult(*rep.first_diff);
        rep.rhs_coeff = rep.rhs.mult(*rep.first_diff);
    }
}

QCharacter sum_of_products(FactorCache& cache, const std::vector<std::vector<Monomial>>& side,
                           std::vector<QCharacter>* parts) {
    QCharacter total;
    bool first = true;
    for (const auto& prod : side) {
        QCharacter p = cache.product(prod);
        if (first) total.set_head(p.head());
        first = false;
        total = add_scaled(total, p, 1);
        if (parts) parts->push_back(std::move(p));
    }
    return total;
}

}  // namespace

IdentityReport verify_tsystem(const CartanData& cd, int i, int k, int r, const FmOptions& opts) {
    if (k < 1) throw std::invalid_argument("verify_tsystem: k must be >= 1");
    IdentityReport rep;
    if (!tsystem_heads_consistent(cd, i, k, r)) rep.notes.push_back("head consistency failed");
    const int ri = cd.r(i);
    FactorCache cache(cd, opts);
    rep.lhs = cache.product({kr_head(cd, {i, k, r}), kr_head(cd, {i, k, r + 2 * ri})});
    QCharacter first = cache.product({kr_head(cd, {i, k + 1, r + ri}), kr_head(cd, {i, k - 1, r + ri})});
    std::vector<Monomial> s_heads;
    for (const KrSpec& w : s_term(cd, i, k, r)) s_heads.push_back(kr_head(cd, w));
    rep.rhs = add_scaled(first, cache.product(s_heads), 1);
    compare(rep);
    return rep;
}

ProductIdentityReport verify_product_identity(const CartanData& cd, const ProductIdentity& ident,
                                              const FmOptions& opts) {
    if (ident.lhs.empty() || ident.rhs.empty()) throw std::invalid_argument("identity needs both sides");
    ProductIdentityReport rep;
    FactorCache cache(cd, opts);
    std::vector<QCharacter> parts;
    rep.identity.lhs = sum_of_products(cache, ident.lhs, &parts);
    rep.identity.rhs = sum_of_products(cache, ident.rhs, &parts);
    compare(rep.identity);

    const Monomial top = parts.front().head();
    for (const QCharacter& p : parts) {
        std::vector<Monomial> dom;
        for (const Monomial& m : p.dominant_monomials())
            if (m != top) dom.push_back(m);
        std::sort(dom.begin(), dom.end());
        rep.dominant.push_back(std::move(dom));
    }
    if (!ident.expected_dominant.empty()) {
        if (ident.expected_dominant.size() != rep.dominant.size()) {
            rep.lists_match = false;
            rep.list_mismatches.push_back("expected " + std::to_string(ident.expected_dominant.size()) +
                                          " lists, identity has " + std::to_string(rep.dominant.size()) + " products");
        } else {
            for (std::size_t p = 0; p < rep.dominant.size(); ++p) {
                std::vector<Monomial> want = ident.expected_dominant[p];
                std::sort(want.begin(), want.end());
                const auto& got = rep.dominant[p];
                for (const Monomial& m : want)
                    if (!std::binary_search(got.begin(), got.end(), m))
                        rep.list_mismatches.push_back("product " + std::to_string(p + 1) + ": missing " + to_string(m));
                for (const Monomial& m : got)
                    if (!std::binary_search(want.begin(), want.end(), m))
                        rep.list_mismatches.push_back("product " + std::to_string(p + 1) + ": unexpected " + to_string(m));
            }
            rep.lists_match = rep.list_mismatches.empty();
        }
    }
    return rep;
}

}  // namespace qchar
