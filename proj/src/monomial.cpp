#include "qchar/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>

namespace qchar {

Monomial Monomial::Y(int node, int exp, int pow) {
    Monomial m;
    if (pow != 0) m.factors_.push_back({node, exp, pow});
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
        return a.node != b.node ? a.node < b.node : a.exp < b.exp;
    });
    Monomial m;
    for (const Factor& f : factors) {
        if (!m.factors_.empty() && m.factors_.back().node == f.node && m.factors_.back().exp == f.exp) {
            m.factors_.back().pow += f.pow;
            if (m.factors_.back().pow == 0) m.factors_.pop_back();
        } else if (f.pow != 0) {
            m.factors_.push_back(f);
        }
    }
    return m;
}

int Monomial::power(int node, int exp) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{node, exp, INT_MIN});
    if (it != factors_.end() && it->node == node && it->exp == exp) return it->pow;
    return 0;
}

int Monomial::node_degree(int node) const {
    int total = 0;
    for (const Factor& f : factors_)
        if (f.node == node) total += f.pow;
    return total;
}

int Monomial::degree() const {
    int total = 0;
    for (const Factor& f : factors_) total += f.pow;
    return total;
}

int Monomial::max_exp() const {
    int best = INT_MIN;
    for (const Factor& f : factors_) best = std::max(best, f.exp);
    return best;
}

int Monomial::min_exp() const {
    int best = INT_MAX;
    for (const Factor& f : factors_) best = std::min(best, f.exp);
    return best;
}

Monomial Monomial::inverse() const {
    Monomial m = *this;
    for (Factor& f : m.factors_) f.pow = -f.pow;
    return m;
}

Monomial Monomial::restrict_to(int node) const {
    Monomial m;
    for (const Factor& f : factors_)
        if (f.node == node) m.factors_.push_back(f);
    return m;
}

Monomial Monomial::without(int node) const {
    Monomial m;
    for (const Factor& f : factors_)
        if (f.node != node) m.factors_.push_back(f);
    return m;
}

Monomial& Monomial::multiply(const Monomial& other, int k) {
    if (k == 0 || other.factors_.empty()) return *this;
    std::vector<Factor> out;
    out.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    auto key_less = [](const Factor& x, const Factor& y) {
        return x.node != y.node ? x.node < y.node : x.exp < y.exp;
    };
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && key_less(*a, *b))) {
            out.push_back(*a++);
        } else if (a == factors_.end() || key_less(*b, *a)) {
            out.push_back({b->node, b->exp, b->pow * k});
            ++b;
        } else {
            int p = a->pow + b->pow * k;
            if (p != 0) out.push_back({a->node, a->exp, p});
            ++a;
            ++b;
        }
    }
    factors_ = std::move(out);
    return *this;
}

std::size_t Monomial::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const Factor& f : factors_) {
        std::uint64_t x = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.node)) << 40) ^
                          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.exp)) << 16) ^
                          static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.pow));
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (const Factor& f : m.factors()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(f.node);
        out += '_';
        out += std::to_string(f.exp);
        if (f.pow != 1) {
            out += '^';
            out += std::to_string(f.pow);
        }
    }
    return out;
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    std::size_t pos() const { return pos_; }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_spaces() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char ch) {
        if (peek() != ch) throw ParseError(std::string("expected '") + ch + "'", pos_);
        ++pos_;
    }

    int integer() {
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", start);
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string_view digits = text_.substr(start, pos_ - start);
        if (digits.front() == '+') digits.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw ParseError("integer out of range", start);
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text) {
    Scanner sc(text);
    sc.skip_spaces();
    if (sc.at_end()) throw ParseError("empty monomial", sc.pos());
    std::vector<Factor> factors;
    bool saw_unit = false;
    bool first = true;
    while (true) {
        sc.skip_spaces();
        if (sc.at_end()) break;
        std::size_t token_start = sc.pos();
        if (!first && saw_unit) throw ParseError("'1' must be the only token", token_start);
        int node = sc.integer();
        if (sc.at_end() || std::isspace(static_cast<unsigned char>(sc.peek()))) {
            if (node == 1 && first) {
                saw_unit = true;
                first = false;
                continue;
            }
            throw ParseError("expected '_'", sc.pos());
        }
        if (saw_unit) throw ParseError("'1' must be the only token", token_start);
        sc.expect('_');
        int exp = sc.integer();
        int pow = 1;
        if (sc.peek() == '^') {
            sc.expect('^');
            std::size_t at = sc.pos();
            pow = sc.integer();
            if (pow == 0) throw ParseError("zero exponent", at);
        }
        if (!sc.at_end() && !std::isspace(static_cast<unsigned char>(sc.peek())))
            throw ParseError("unexpected character", sc.pos());
        if (node < 1) throw ParseError("node index must be positive", token_start);
        factors.push_back({node, exp, pow});
        first = false;
    }
    return Monomial::from_factors(std::move(factors));
}

}  // namespace qchar
