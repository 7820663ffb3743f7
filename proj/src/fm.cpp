#include "qchar/fm.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "qchar/sl2.hpp"

namespace qchar {

std::string_view to_string(FmStatus s) {
    switch (s) {
        case FmStatus::Converged: return "converged";
        case FmStatus::StrictAbort: return "strict_abort";
        case FmStatus::CapHit: return "cap_hit";
    }
    return "?";
}

namespace {

// Factors of A_{j,q^0}^{-1}; shifting every exponent by s gives A_{j,q^s}^{-1}.
std::vector<std::vector<Factor>> a_templates(const CartanData& cd) {
    std::vector<std::vector<Factor>> out;
    for (int j = 1; j <= cd.rank; ++j) {
        const Monomial a = a_inverse(cd, j, 0);
        out.emplace_back(a.factors().begin(), a.factors().end());
    }
    return out;
}

Monomial apply_piece(const Monomial& m, const std::vector<Factor>& tmpl, const std::vector<int>& a_exps) {
    std::vector<Factor> fs(m.factors().begin(), m.factors().end());
    fs.reserve(fs.size() + tmpl.size() * a_exps.size());
    for (int s : a_exps)
        for (const Factor& f : tmpl) fs.push_back({f.node, f.exp + s, f.pow});
    return Monomial::from_factors(std::move(fs));
}

std::vector<LPiece> pieces_for_restriction(const Monomial& restriction, int step) {
    std::vector<LPiece> acc{LPiece{}};
    for (const KrLabel& x : normal_writing(restriction, step)) {
        std::vector<int> steps = kr_a_steps(x.k, x.center, step);
        std::vector<LPiece> next;
        next.reserve(acc.size() * (steps.size() + 1));
        for (const LPiece& p : acc) {
            for (std::size_t t = 0; t <= steps.size(); ++t) {
                LPiece q = p;
                q.a_exps.insert(q.a_exps.end(), steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(t));
                next.push_back(std::move(q));
            }
        }
        acc = std::move(next);
    }
    std::map<std::vector<int>, Mult> merged;
    for (LPiece& p : acc) {
        std::sort(p.a_exps.begin(), p.a_exps.end());
        merged[p.a_exps] += p.coeff;
    }
    std::vector<LPiece> out;
    out.reserve(merged.size());
    for (auto& [exps, c] : merged) out.push_back({exps, c});
    // map order puts the empty vector first
    return out;
}

// Per-worker memo of restriction -> pieces, one table per node.
class PieceCache {
public:
    explicit PieceCache(const CartanData& cd) : cd_(cd), tables_(static_cast<std::size_t>(cd.rank)) {}

    const std::vector<LPiece>& get(const Monomial& m, int j) {
        Monomial key = m.restrict_to(j);
        auto& table = tables_[static_cast<std::size_t>(j - 1)];
        auto it = table.find(key);
        if (it != table.end()) return it->second;
        auto pieces = pieces_for_restriction(key, cd_.r(j));
        return table.emplace(std::move(key), std::move(pieces)).first->second;
    }

private:
    const CartanData& cd_;
    std::vector<std::unordered_map<Monomial, std::vector<LPiece>>> tables_;
};

struct Entry {
    int grade = 0;
    std::vector<Mult> demand;
    Mult mult = 0;
    bool processed = false;
};

struct Task {
    const Monomial* m;
    int color;
    Mult deficit;
    int grade;
};

struct Contribution {
    Monomial target;
    int color;
    Mult amount;
    int grade;
};

void expand_tasks(const std::vector<Task>& tasks, std::size_t begin, std::size_t end, PieceCache& cache,
                  const std::vector<std::vector<Factor>>& tmpl, std::vector<Contribution>& out) {
    for (std::size_t t = begin; t < end; ++t) {
        const Task& task = tasks[t];
        const auto& pieces = cache.get(*task.m, task.color);
        for (std::size_t p = 1; p < pieces.size(); ++p) {
            const LPiece& piece = pieces[p];
            out.push_back({apply_piece(*task.m, tmpl[static_cast<std::size_t>(task.color - 1)], piece.a_exps),
                           task.color, task.deficit * piece.coeff,
                           task.grade + static_cast<int>(piece.a_exps.size())});
        }
    }
}

}  // namespace

std::vector<LPiece> l_pieces(const CartanData& cd, const Monomial& m, int j) {
    if (j < 1 || j > cd.rank) throw std::invalid_argument("l_pieces: node out of range");
    if (!is_j_dominant(m, j)) throw std::invalid_argument("l_expansion needs a " + std::to_string(j) + "-dominant monomial");
    return pieces_for_restriction(m.restrict_to(j), cd.r(j));
}

QCharacter l_expansion(const CartanData& cd, const Monomial& m, int j) {
    check_nodes(cd, m);
    auto tmpl = a_templates(cd);
    QCharacter chi(m);
    for (const LPiece& p : l_pieces(cd, m, j))
        chi.add(apply_piece(m, tmpl[static_cast<std::size_t>(j - 1)], p.a_exps), p.coeff);
    return chi;
}

QCharacter fm_qchar(const CartanData& cd, const Monomial& m, const FmOptions& opts) {
    check_nodes(cd, m);
    if (!is_dominant(m)) throw std::invalid_argument("fm_qchar expects a dominant monomial, got " + to_string(m));
    if (opts.max_v <= 0 || opts.max_terms == 0) throw std::invalid_argument("FM caps must be positive");

    const int n = cd.rank;
    const auto tmpl = a_templates(cd);
    const int threads = std::max(1, opts.threads);
    std::vector<PieceCache> caches;
    for (int w = 0; w < threads; ++w) caches.emplace_back(cd);

    std::unordered_map<Monomial, Entry> table;
    std::vector<std::vector<Monomial>> buckets(1);
    table.emplace(m, Entry{0, std::vector<Mult>(static_cast<std::size_t>(n), 0), 0, false});
    buckets[0].push_back(m);

    QCharacter chi(m);
    FmDiagnostics& diag = chi.diagnostics();
    bool stop = false;

    for (std::size_t g = 0; g < buckets.size() && !stop; ++g) {
        std::vector<Monomial> level = std::move(buckets[g]);
        buckets[g].clear();
        if (level.empty()) continue;
        std::sort(level.begin(), level.end());
        if (opts.order_seed) {
            std::mt19937_64 rng(*opts.order_seed + g);
            std::shuffle(level.begin(), level.end(), rng);
        }
        diag.rounds += 1;
        diag.max_grade = static_cast<int>(g);

        std::vector<Task> tasks;
        for (const Monomial& mp : level) {
            Entry& e = table.at(mp);
            Mult mult = 0;
            if (mp == m) {
                mult = 1;
            } else {
                for (Mult d : e.demand) mult = std::max(mult, d);
            }
            e.mult = mult;
            e.processed = true;
            for (int i = 1; i <= n; ++i) {
                const Mult d = e.demand[static_cast<std::size_t>(i - 1)];
                if (!is_j_dominant(mp, i)) {
                    if (d != mult) {
                        if (diag.color_consistent)
                            diag.notes.push_back("color " + std::to_string(i) + " demand " + std::to_string(d) +
                                                 " != multiplicity " + std::to_string(mult) + " at " + to_string(mp));
                        diag.color_consistent = false;
                    }
                } else if (mult > d) {
                    tasks.push_back({&table.find(mp)->first, i, mult - d, static_cast<int>(g)});
                }
            }
        }

        // Expand in contiguous chunks, then merge in chunk order.
        std::vector<std::vector<Contribution>> parts(static_cast<std::size_t>(threads));
        if (threads == 1 || tasks.size() < 2) {
            expand_tasks(tasks, 0, tasks.size(), caches[0], tmpl, parts[0]);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (tasks.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
            for (int w = 0; w < threads; ++w) {
                const std::size_t begin = std::min(tasks.size(), chunk * static_cast<std::size_t>(w));
                const std::size_t end = std::min(tasks.size(), begin + chunk);
                if (begin == end) continue;
                pool.emplace_back([&, w, begin, end] {
                    expand_tasks(tasks, begin, end, caches[static_cast<std::size_t>(w)], tmpl,
                                 parts[static_cast<std::size_t>(w)]);
                });
            }
            for (auto& t : pool) t.join();
        }

        for (auto& part : parts) {
            for (Contribution& c : part) {
                if (c.grade > opts.max_v) {
                    diag.cap_hit = true;
                    stop = true;
                    continue;
                }
                auto it = table.find(c.target);
                if (it == table.end()) {
                    if (table.size() >= opts.max_terms) {
                        diag.cap_hit = true;
                        stop = true;
                        continue;
                    }
                    if (is_dominant(c.target)) {
                        diag.extra_dominant.push_back(c.target);
                        if (opts.mode == FmMode::Strict) {
                            diag.strict_abort = true;
                            stop = true;
                        }
                    }
                    it = table.emplace(c.target, Entry{c.grade, std::vector<Mult>(static_cast<std::size_t>(n), 0), 0, false})
                             .first;
                    if (buckets.size() <= static_cast<std::size_t>(c.grade)) buckets.resize(static_cast<std::size_t>(c.grade) + 1);
                    buckets[static_cast<std::size_t>(c.grade)].push_back(c.target);
                } else if (it->second.grade != c.grade) {
                    throw std::logic_error("FM: inconsistent grade for " + to_string(c.target));
                }
                it->second.demand[static_cast<std::size_t>(c.color - 1)] += c.amount;
            }
        }
    }

    std::sort(diag.extra_dominant.begin(), diag.extra_dominant.end());
    diag.converged = !diag.cap_hit && !diag.strict_abort;

    for (const auto& [mp, e] : table) {
        Mult mult = e.mult;
        if (!e.processed) {
            mult = 0;
            for (Mult d : e.demand) mult = std::max(mult, d);
        }
        if (mult > 0) chi.add(mp, mult);
    }

    if (diag.converged) {
        ColorCheck check = verify_color_decomposition(cd, chi);
        if (!check.ok) {
            diag.color_consistent = false;
            diag.notes.push_back("color decomposition: " + check.detail);
        }
    }
    return chi;
}

FmStatus fm_status(const QCharacter& chi) {
    const FmDiagnostics& d = chi.diagnostics();
    if (d.strict_abort) return FmStatus::StrictAbort;
    if (d.cap_hit) return FmStatus::CapHit;
    return FmStatus::Converged;
}

ColorCheck verify_color_decomposition(const CartanData& cd, const QCharacter& chi) {
    ColorCheck result;
    const auto tmpl = a_templates(cd);

    std::unordered_map<Monomial, AFactorization> factors;
    for (const auto& [mp, k] : chi.terms()) {
        if (k <= 0) return {false, 0, "nonpositive coefficient at " + to_string(mp)};
        auto f = factor_over_A(cd, mp, chi.head());
        if (!f) return {false, 0, to_string(mp) + " is not below the head"};
        factors.emplace(mp, std::move(*f));
    }

    for (int i = 1; i <= cd.rank; ++i) {
        std::unordered_map<Monomial, Mult> residual(chi.terms().begin(), chi.terms().end());
        std::map<int, std::vector<Monomial>> queue;
        std::unordered_set<Monomial> scheduled;
        std::unordered_map<Monomial, int> vi;
        for (const auto& [mp, f] : factors) {
            const int v = f.per_node[static_cast<std::size_t>(i - 1)];
            vi[mp] = v;
            queue[v].push_back(mp);
            scheduled.insert(mp);
        }
        while (!queue.empty()) {
            auto node = queue.extract(queue.begin());
            std::vector<Monomial>& level = node.mapped();
            std::sort(level.begin(), level.end());
            for (const Monomial& mp : level) {
                auto rit = residual.find(mp);
                const Mult c = rit == residual.end() ? 0 : rit->second;
                if (c == 0) continue;
                if (c < 0) return {false, i, "negative residual " + std::to_string(c) + " at " + to_string(mp)};
                if (!is_j_dominant(mp, i))
                    return {false, i, "residual " + std::to_string(c) + " at non-dominant " + to_string(mp)};
                auto pieces = pieces_for_restriction(mp.restrict_to(i), cd.r(i));
                residual.erase(rit);
                for (std::size_t p = 1; p < pieces.size(); ++p) {
                    Monomial target = apply_piece(mp, tmpl[static_cast<std::size_t>(i - 1)], pieces[p].a_exps);
                    residual[target] -= c * pieces[p].coeff;
                    if (scheduled.insert(target).second) {
                        int v = node.key() + static_cast<int>(pieces[p].a_exps.size());
                        queue[v].push_back(target);
                    }
                }
            }
        }
        for (const auto& [mp, c] : residual)
            if (c != 0) return {false, i, "leftover " + std::to_string(c) + " at " + to_string(mp)};
    }
    return result;
}

QCharacter standard_qchar(const CartanData& cd, const Monomial& m, const FmOptions& opts) {
    check_nodes(cd, m);
    if (!is_dominant(m)) throw std::invalid_argument("standard_qchar expects a dominant monomial");
    std::map<int, QCharacter> fundamentals;
    QCharacter out{Monomial{}};
    out.add(Monomial{});
    bool converged = true;
    for (const Factor& f : m.factors()) {
        auto it = fundamentals.find(f.node);
        if (it == fundamentals.end()) {
            it = fundamentals.emplace(f.node, fm_qchar(cd, Monomial::Y(f.node, 0), opts)).first;
            converged = converged && it->second.diagnostics().converged;
        }
        QCharacter shifted = shift_map(it->second, f.exp);
        for (int p = 0; p < f.pow; ++p) out = multiply(out, shifted);
    }
    out.set_head(m);
    out.diagnostics().converged = converged;
    return out;
}

std::optional<Monomial> lowest_monomial(const CartanData& cd, const QCharacter& chi) {
    auto graded = graded_terms(cd, chi);
    if (graded.empty()) return std::nullopt;
    int top = -1;
    for (const GradedTerm& t : graded) {
        if (t.grade < 0) return std::nullopt;
        top = std::max(top, t.grade);
    }
    std::optional<Monomial> cand;
    for (const GradedTerm& t : graded) {
        if (t.grade != top) continue;
        if (cand) return std::nullopt;
        cand = t.m;
    }
    for (const GradedTerm& t : graded)
        if (!factor_over_A(cd, *cand, t.m)) return std::nullopt;
    return cand;
}

bool check_lowest(const CartanData& cd, const Monomial& m, const QCharacter& chi) {
    auto low = lowest_monomial(cd, chi);
    return low && *low == lowest_formula(cd, m);
}

}  // namespace qchar
