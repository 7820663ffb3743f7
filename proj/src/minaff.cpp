#include "qchar/minaff.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qchar/sl2.hpp"

namespace qchar {

std::string_view to_string(Condition c) { return c == Condition::I ? "I" : "II"; }

Monomial kr_monomial(const CartanData& cd, int i, int k, int r) {
    if (i < 1 || i > cd.rank) throw std::invalid_argument("kr_monomial: node out of range");
    return kr_monomial_sl2(k, r, cd.r(i), i);
}

namespace {

void check_lambda(const CartanData& cd, const Weight& lambda) {
    if (static_cast<int>(lambda.coeffs.size()) != cd.rank)
        throw std::invalid_argument("weight has " + std::to_string(lambda.coeffs.size()) + " entries, rank is " +
                                    std::to_string(cd.rank));
    if (!lambda.dominant()) throw std::invalid_argument("weight must be dominant");
}

int lam(const Weight& w, int i) { return w.coeffs[static_cast<std::size_t>(i - 1)]; }

// Shift exponents so the anchor sits where requested.
void apply_anchor(const AffinizationSpec& spec, std::vector<int>& e) {
    const int n = spec.cd.rank;
    int node = 0;
    int at = 0;
    if (spec.anchor) {
        node = spec.anchor->first;
        at = spec.anchor->second;
        if (node < 1 || node > n) throw std::invalid_argument("anchor node out of range");
        if (lam(spec.lambda, node) == 0 && !spec.lambda.is_zero())
            throw std::invalid_argument("anchor node must carry lambda > 0");
    } else {
        for (int i = n; i >= 1; --i)
            if (lam(spec.lambda, i) > 0) {
                node = i;
                break;
            }
        if (node == 0) node = n;
    }
    const int shift = at - e[static_cast<std::size_t>(node)];
    for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i)] += shift;
}

Monomial assemble(const AffinizationSpec& spec, const std::vector<int>& e) {
    Monomial m;
    for (int i = 1; i <= spec.cd.rank; ++i)
        m *= kr_monomial(spec.cd, i, lam(spec.lambda, i), e[static_cast<std::size_t>(i)]);
    return m;
}

}  // namespace

std::vector<int> c_exponents(const CartanData& cd, const Weight& lambda) {
    check_lambda(cd, lambda);
    std::vector<int> c(static_cast<std::size_t>(cd.rank), 0);
    for (int i = 1; i < cd.rank; ++i)
        c[static_cast<std::size_t>(i)] =
            cd.r(i) * lam(lambda, i) + cd.r(i + 1) * lam(lambda, i + 1) + cd.r(i + 1) - cd.c(i + 1, i) - 1;
    return c;
}

std::vector<int> c_prime_exponents(const CartanData& cd, const Weight& lambda) {
    check_lambda(cd, lambda);
    std::vector<int> c(static_cast<std::size_t>(cd.rank), 0);
    for (int i = 1; i < cd.rank; ++i)
        c[static_cast<std::size_t>(i)] =
            cd.r(i) * lam(lambda, i) + cd.r(i + 1) * lam(lambda, i + 1) + cd.r(i) - cd.c(i, i + 1) - 1;
    return c;
}

std::vector<int> spectral_exponents(const AffinizationSpec& spec) {
    const CartanData& cd = spec.cd;
    check_lambda(cd, spec.lambda);
    const int n = cd.rank;
    std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);  // 1-based
    if (cd.kind == Kind::D) {
        auto c = c_exponents(cd, spec.lambda);
        const int sign = spec.condition == Condition::I ? -1 : 1;
        for (int s = 1; s <= n - 3; ++s)
            e[static_cast<std::size_t>(s + 1)] = e[static_cast<std::size_t>(s)] + sign * c[static_cast<std::size_t>(s)];
        const int cn2 = c[static_cast<std::size_t>(n - 2)];
        const int cn1 = lam(spec.lambda, n - 2) + lam(spec.lambda, n) + 1;
        e[static_cast<std::size_t>(n - 1)] = e[static_cast<std::size_t>(n - 2)] + sign * cn2;
        e[static_cast<std::size_t>(n)] = e[static_cast<std::size_t>(n - 2)] + sign * cn1;
    } else {
        if (!cd.is_linear()) throw std::invalid_argument("minimal affinization constructor needs a linear Dynkin diagram");
        if (spec.condition == Condition::I) {
            auto c = c_exponents(cd, spec.lambda);
            for (int i = 1; i < n; ++i)
                e[static_cast<std::size_t>(i + 1)] = e[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)];
        } else {
            auto c = c_prime_exponents(cd, spec.lambda);
            for (int i = 1; i < n; ++i)
                e[static_cast<std::size_t>(i + 1)] = e[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(i)];
        }
    }
    apply_anchor(spec, e);
    return e;
}

Monomial minaff_monomial(const AffinizationSpec& spec) {
    if (spec.cd.kind == Kind::D) throw std::invalid_argument("type D: use type_d_minaff");
    if (spec.cd.kind == Kind::E) throw std::invalid_argument("type E is not covered by the classification used here");
    return assemble(spec, spectral_exponents(spec));
}

Monomial type_d_minaff(const AffinizationSpec& spec) {
    if (spec.cd.kind != Kind::D) throw std::invalid_argument("type_d_minaff needs type D");
    return assemble(spec, spectral_exponents(spec));
}

Monomial affinization_monomial(const AffinizationSpec& spec) {
    return spec.cd.kind == Kind::D ? type_d_minaff(spec) : minaff_monomial(spec);
}

std::vector<std::vector<int>> positive_roots(const CartanData& cd) {
    const int n = cd.rank;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> roots;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        a[static_cast<std::size_t>(i)] = 1;
        layer.push_back(a);
        seen.insert(a);
    }
    const std::size_t cap = 100000;
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end());
        roots.insert(roots.end(), layer.begin(), layer.end());
        std::vector<std::vector<int>> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < n; ++i) {
                // <beta, alpha_i^vee> = sum_j c_j C(i,j)
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += beta[static_cast<std::size_t>(j)] * cd.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                // p: how far down the alpha_i string goes
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[static_cast<std::size_t>(i)] -= 1;
                    if (!seen.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    std::vector<int> up = beta;
                    up[static_cast<std::size_t>(i)] += 1;
                    if (seen.insert(up).second) next.push_back(up);
                }
            }
        }
        if (roots.size() > cap) throw std::invalid_argument("positive_roots: root system is not finite");
        layer = std::move(next);
    }
    return roots;
}

BigInt weyl_dim(const CartanData& cd, const Weight& lambda) {
    if (cd.kind == Kind::Custom) throw std::invalid_argument("weyl_dim needs a built-in finite type");
    check_lambda(cd, lambda);
    BigInt num = 1;
    BigInt den = 1;
    for (const auto& beta : positive_roots(cd)) {
        long long a = 0;
        long long b = 0;
        for (int i = 1; i <= cd.rank; ++i) {
            const long long c = beta[static_cast<std::size_t>(i - 1)];
            a += c * cd.r(i) * (lam(lambda, i) + 1);
            b += c * cd.r(i);
        }
        num *= a;
        den *= b;
    }
    if (num % den != 0) throw std::logic_error("weyl_dim: non-integral quotient");
    return num / den;
}

namespace {

// B_{n,p}: type B_n except C(n,n-1) = -p.
bool is_b_np(const CartanData& cd) {
    const int n = cd.rank;
    if (n < 2 || !cd.is_linear()) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j || std::abs(i - j) != 1) continue;
            const int expect = (i == n && j == n - 1) ? cd.c(n, n - 1) : -1;
            if (cd.c(i, j) != expect) return false;
        }
    return cd.c(n, n - 1) <= -2;
}

}  // namespace

Prediction predict(const AffinizationSpec& spec) {
    const CartanData& cd = spec.cd;
    const int n = cd.rank;
    Prediction p;
    const Verdict yes = Verdict::Yes;
    switch (cd.kind) {
        case Kind::A:
        case Kind::B:
            p.special = yes;
            p.antispecial = yes;
            p.thin = yes;
            p.source = "A/B: special, antispecial and thin";
            break;
        case Kind::G:
            p.special = yes;
            p.antispecial = yes;
            p.source = "G: special and antispecial";
            break;
        case Kind::C:
        case Kind::F:
            if (lam(spec.lambda, n) == 0) {
                if (spec.condition == Condition::I)
                    p.antispecial = yes;
                else
                    p.special = yes;
                p.source = "C/F4 with lambda_n = 0: (I) antispecial, (II) special";
            }
            break;
        case Kind::D: {
            auto e = spectral_exponents(spec);
            const bool equal_tail = lam(spec.lambda, n - 1) == lam(spec.lambda, n) &&
                                    (lam(spec.lambda, n) == 0 || e[static_cast<std::size_t>(n - 1)] == e[static_cast<std::size_t>(n)]);
            if (equal_tail) {
                if (spec.condition == Condition::I)
                    p.antispecial = yes;
                else
                    p.special = yes;
                p.source = "D with lambda_{n-1} = lambda_n and a_{n-1} = a_n: (I) antispecial, (II) special";
            }
            break;
        }
        case Kind::Custom:
            if (is_b_np(cd)) {
                if (spec.condition == Condition::I)
                    p.antispecial = yes;
                else
                    p.special = yes;
                p.source = "B_{n,p}: (I) antispecial, (II) special";
            }
            break;
        case Kind::E:
            break;
    }
    return p;
}

MinaffReport minaff_report(const AffinizationSpec& spec, const CheckOptions& opts) {
    MinaffReport rep;
    rep.m = affinization_monomial(spec);
    rep.props = check_properties(spec.cd, rep.m, opts);
    rep.prediction = predict(spec);
    auto compare = [&](const char* name, const std::optional<Verdict>& want, const PropertyResult& got) {
        if (want && *want != got.verdict)
            rep.disagreements.push_back(std::string(name) + ": predicted " + std::string(to_string(*want)) + ", observed " +
                                        std::string(to_string(got.verdict)));
    };
    compare("special", rep.prediction.special, rep.props.special);
    compare("antispecial", rep.prediction.antispecial, rep.props.antispecial);
    compare("thin", rep.prediction.thin, rep.props.thin);
    return rep;
}

Weight parse_weight(const std::string& text, int rank) {
    Weight w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad weight entry '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("bad weight entry '" + item + "'");
        w.coeffs.push_back(v);
    }
    if (static_cast<int>(w.coeffs.size()) != rank)
        throw std::invalid_argument("weight '" + text + "' needs " + std::to_string(rank) + " entries");
    return w;
}

}  // namespace qchar
