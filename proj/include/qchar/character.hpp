#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qchar/core.hpp"

namespace qchar {

using Mult = std::int64_t;

struct FmDiagnostics {
    bool converged = true;
    bool cap_hit = false;
    bool strict_abort = false;
    bool color_consistent = true;
    int rounds = 0;  // grades processed
    int max_grade = 0;
    std::vector<Monomial> extra_dominant;
    std::vector<std::string> notes;
};

/// A finitely supported map Monomial -> positive multiplicity, with the
/// l-highest monomial and the diagnostics of whatever produced it.
class QCharacter {
public:
    QCharacter() = default;
    explicit QCharacter(Monomial head) : head_(std::move(head)) {}

    const Monomial& head() const { return head_; }
    void set_head(Monomial m) { head_ = std::move(m); }

    FmDiagnostics& diagnostics() { return diag_; }
    const FmDiagnostics& diagnostics() const { return diag_; }

    /// Adds k (which may be negative) to the coefficient of m; zero entries are dropped.
    void add(const Monomial& m, Mult k = 1);
    Mult mult(const Monomial& m) const;
    bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

    std::size_t size() const { return terms_.size(); }
    Mult total() const;
    bool all_positive() const;
    bool all_one() const;

    const std::unordered_map<Monomial, Mult>& terms() const { return terms_; }

    /// Terms in canonical monomial order.
    std::vector<std::pair<Monomial, Mult>> sorted() const;

    std::vector<Monomial> dominant_monomials() const;
    std::vector<Monomial> antidominant_monomials() const;

    /// Equality compares terms only.
    bool same_terms(const QCharacter& o) const { return terms_ == o.terms_; }

private:
    Monomial head_;
    std::unordered_map<Monomial, Mult> terms_;
    FmDiagnostics diag_;
};

QCharacter multiply(const QCharacter& a, const QCharacter& b);
/// Sum a + k*b on terms; the head of `a` is kept.
QCharacter add_scaled(const QCharacter& a, const QCharacter& b, Mult k = 1);
QCharacter sigma_map(const QCharacter& chi);
QCharacter shift_map(const QCharacter& chi, int s);

/// Terms sorted by grade (total v against the head, when the factorization
/// exists), then by canonical monomial order. Terms not below the head come last.
struct GradedTerm {
    Monomial m;
    Mult mult = 0;
    int grade = 0;  // -1 when the term is not <= head
};
std::vector<GradedTerm> graded_terms(const CartanData& cd, const QCharacter& chi);

/// The term-by-term pushforward along omega.
std::map<Weight, Mult> weight_character(const CartanData& cd, const QCharacter& chi);

/// First monomial where the two term maps differ, if any.
std::optional<Monomial> first_difference(const QCharacter& a, const QCharacter& b);

}  // namespace qchar
