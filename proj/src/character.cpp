#include "qchar/character.hpp"

#include <algorithm>

namespace qchar {

void QCharacter::add(const Monomial& m, Mult k) {
    if (k == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0) terms_.erase(it);
    }
}

Mult QCharacter::mult(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

Mult QCharacter::total() const {
    Mult t = 0;
    for (const auto& [m, k] : terms_) t += k;
    return t;
}

bool QCharacter::all_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

bool QCharacter::all_one() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second == 1; });
}

std::vector<std::pair<Monomial, Mult>> QCharacter::sorted() const {
    std::vector<std::pair<Monomial, Mult>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<Monomial> QCharacter::dominant_monomials() const {
    std::vector<Monomial> out;
    for (const auto& [m, k] : terms_)
        if (is_dominant(m)) out.push_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> QCharacter::antidominant_monomials() const {
    std::vector<Monomial> out;
    for (const auto& [m, k] : terms_)
        if (is_antidominant(m)) out.push_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

QCharacter multiply(const QCharacter& a, const QCharacter& b) {
    QCharacter out(a.head() * b.head());
    for (const auto& [ma, ka] : a.terms())
        for (const auto& [mb, kb] : b.terms()) out.add(ma * mb, ka * kb);
    return out;
}

QCharacter add_scaled(const QCharacter& a, const QCharacter& b, Mult k) {
    QCharacter out = a;
    out.diagnostics() = FmDiagnostics{};
    for (const auto& [m, c] : b.terms()) out.add(m, c * k);
    return out;
}

QCharacter sigma_map(const QCharacter& chi) {
    QCharacter out(sigma_map(chi.head()));
    for (const auto& [m, k] : chi.terms()) out.add(sigma_map(m), k);
    return out;
}

QCharacter shift_map(const QCharacter& chi, int s) {
    QCharacter out(shift_map(chi.head(), s));
    for (const auto& [m, k] : chi.terms()) out.add(shift_map(m, s), k);
    return out;
}

std::vector<GradedTerm> graded_terms(const CartanData& cd, const QCharacter& chi) {
    std::vector<GradedTerm> out;
    out.reserve(chi.size());
    for (const auto& [m, k] : chi.terms()) {
        int grade = -1;
        try {
            if (auto f = factor_over_A(cd, m, chi.head())) grade = f->total;
        } catch (const CartanError&) {
        }
        out.push_back({m, k, grade});
    }
    std::sort(out.begin(), out.end(), [](const GradedTerm& a, const GradedTerm& b) {
        // ungraded terms (-1) go last
        unsigned ga = static_cast<unsigned>(a.grade);
        unsigned gb = static_cast<unsigned>(b.grade);
        if (ga != gb) return ga < gb;
        return a.m < b.m;
    });
    return out;
}

std::map<Weight, Mult> weight_character(const CartanData& cd, const QCharacter& chi) {
    std::map<Weight, Mult> out;
    for (const auto& [m, k] : chi.terms()) out[omega(cd, m)] += k;
    return out;
}

std::optional<Monomial> first_difference(const QCharacter& a, const QCharacter& b) {
    std::optional<Monomial> best;
    auto consider = [&](const Monomial& m) {
        if (!best || m < *best) best = m;
    };
    for (const auto& [m, k] : a.terms())
        if (b.mult(m) != k) consider(m);
    for (const auto& [m, k] : b.terms())
        if (a.mult(m) != k) consider(m);
    return best;
}

}  // namespace qchar
