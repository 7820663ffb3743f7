#include "qchar/sl2.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qchar {

namespace {

Monomial sl2_a_inverse(int s, int step, int node) {
    return Monomial::from_factors({{node, s - step, -1}, {node, s + step, -1}});
}

// Is m (single node) exactly X_{k,a} for some k >= 1?
bool is_string(const Monomial& m, int step) {
    if (m.is_unit()) return false;
    auto fs = m.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].pow != 1) return false;
        if (i > 0 && fs[i].exp - fs[i - 1].exp != 2 * step) return false;
    }
    return true;
}

}  // namespace

Monomial kr_monomial_sl2(int k, int center, int step, int node) {
    if (k < 0) throw std::invalid_argument("kr_monomial_sl2: negative length");
    std::vector<Factor> fs;
    for (int kp = 1; kp <= k; ++kp) fs.push_back({node, center + step * (k - 2 * kp + 1), 1});
    return Monomial::from_factors(std::move(fs));
}

std::vector<int> kr_a_steps(int k, int center, int step) {
    std::vector<int> out;
    for (int t = 0; t < k; ++t) out.push_back(center + step * (k - 2 * t));
    return out;
}

QCharacter kr_qchar_sl2(int k, int center, int step, int node) {
    Monomial term = kr_monomial_sl2(k, center, step, node);
    QCharacter chi(term);
    chi.add(term);
    for (int s : kr_a_steps(k, center, step)) {
        term *= sl2_a_inverse(s, step, node);
        chi.add(term);
    }
    return chi;
}

bool in_special_position(const KrLabel& x, const KrLabel& y, int step) {
    Monomial m1 = kr_monomial_sl2(x.k, x.center, step);
    Monomial m2 = kr_monomial_sl2(y.k, y.center, step);
    std::vector<Factor> fs;
    for (const Factor& f : m1.factors()) fs.push_back({1, f.exp, std::max(f.pow, m2.power(1, f.exp))});
    for (const Factor& f : m2.factors())
        if (m1.power(1, f.exp) == 0) fs.push_back({1, f.exp, f.pow});
    Monomial m3 = Monomial::from_factors(std::move(fs));
    return is_string(m3, step) && m3 != m1 && m3 != m2;
}

std::vector<KrLabel> normal_writing(const Monomial& m, int step) {
    if (!is_dominant(m)) throw std::invalid_argument("normal_writing expects a dominant monomial");
    std::map<int, int> count;
    int node = 0;
    for (const Factor& f : m.factors()) {
        if (node != 0 && f.node != node) throw std::invalid_argument("normal_writing expects a single node");
        node = f.node;
        count[f.exp] = f.pow;
    }
    std::vector<KrLabel> out;
    while (!count.empty()) {
        const int start = count.begin()->first;
        int len = 0;
        for (int e = start;; e += 2 * step) {
            auto it = count.find(e);
            if (it == count.end()) break;
            ++len;
            if (--it->second == 0) count.erase(it);
        }
        out.push_back({len, start + step * (len - 1)});
    }
    std::sort(out.begin(), out.end());
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            if (in_special_position(out[a], out[b], step))
                throw std::logic_error("normal_writing produced strings in special position");
    return out;
}

QCharacter simple_qchar_sl2(const Monomial& m, int step) {
    int node = m.is_unit() ? 1 : m.factors().front().node;
    QCharacter chi(Monomial{});
    chi.add(Monomial{});
    for (const KrLabel& x : normal_writing(m, step)) chi = multiply(chi, kr_qchar_sl2(x.k, x.center, step, node));
    chi.set_head(m);
    return chi;
}

}  // namespace qchar
