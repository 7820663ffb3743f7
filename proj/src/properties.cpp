#include "qchar/properties.hpp"

namespace qchar {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

PropertyResult check_special(const CartanData& cd, const Monomial& m, const CheckOptions& opts, QCharacter* chi_out,
                             bool* trusted_out) {
    FmOptions fm = opts.fm;
    fm.mode = FmMode::Permissive;
    QCharacter chi = fm_qchar(cd, m, fm);
    const FmDiagnostics& d = chi.diagnostics();
    const auto dominant = chi.dominant_monomials();
    const bool trusted = d.converged && d.color_consistent && dominant.size() == 1 && dominant.front() == m;

    PropertyResult res;
    if (trusted) {
        res.verdict = Verdict::Yes;
        res.certificate = "FM converged, color-consistent, unique dominant monomial";
    } else {
        std::optional<ExploreResult> ex;
        std::string how;
        if (!opts.script.empty()) {
            ex = explore(cd, m, opts.script, opts.explore);
            how = "guided chain";
        }
        if ((!ex || ex->extra_dominant(m).empty()) && opts.auto_explore) {
            ex = explore_auto(cd, m, opts.explore);
            how = "auto chain";
        }
        if (ex && !ex->extra_dominant(m).empty()) {
            res.verdict = Verdict::No;
            res.witness = ex->extra_dominant(m).front();
            res.certificate = "certified by " + how;
        } else {
            res.verdict = Verdict::Unknown;
            if (!d.converged)
                res.certificate = "FM did not converge";
            else if (!d.color_consistent)
                res.certificate = "FM output not color-consistent";
            else
                res.certificate = "FM found other dominant monomials; none certified";
            if (dominant.size() > 1)
                for (const Monomial& x : dominant)
                    if (x != m) {
                        res.witness = x;
                        break;
                    }
        }
    }
    if (chi_out) *chi_out = std::move(chi);
    if (trusted_out) *trusted_out = trusted;
    return res;
}

PropertyReport check_properties(const CartanData& cd, const Monomial& m, const CheckOptions& opts) {
    PropertyReport rep;
    rep.head = m;
    rep.special = check_special(cd, m, opts, &rep.chi, &rep.trusted);

    if (opts.antispecial) {
        if (cd.has_twist()) {
            CheckOptions sub = opts;
            sub.script.clear();
            Monomial partner = sigma_partner(cd, m, 0);
            rep.antispecial = check_special(cd, partner, sub, nullptr, nullptr);
            rep.antispecial.certificate = "sigma partner " + to_string(partner) + ": " + rep.antispecial.certificate;
        } else if (rep.trusted) {
            auto anti = rep.chi.antidominant_monomials();
            rep.antispecial.verdict = anti.size() == 1 ? Verdict::Yes : Verdict::No;
            rep.antispecial.certificate = std::to_string(anti.size()) + " antidominant monomial(s) in the exact character";
            if (anti.size() > 1) rep.antispecial.witness = anti.back();
        } else {
            rep.antispecial.certificate = "no twist data and no trusted character";
        }
    }

    if (rep.trusted) {
        if (rep.chi.all_one()) {
            rep.thin.verdict = Verdict::Yes;
            rep.thin.certificate = "all multiplicities 1";
        } else {
            rep.thin.verdict = Verdict::No;
            for (const GradedTerm& t : graded_terms(cd, rep.chi))
                if (t.mult >= 2) {
                    rep.thin.witness = t.m;
                    rep.thin.certificate = "mult>=2";
                    break;
                }
        }
    } else {
        rep.thin.certificate = "character not trusted";
    }
    return rep;
}

}  // namespace qchar
