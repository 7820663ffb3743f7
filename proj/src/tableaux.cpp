#include "qchar/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qchar {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 0) throw std::invalid_argument("partition parts must be >= 0");
        if (k > 0 && parts[k] > parts[k - 1]) throw std::invalid_argument("partition must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

int Partition::operator[](int i) const {
    return i >= 1 && i <= length() ? parts[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> c(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
    for (int x : parts)
        for (int j = 0; j < x; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.parts.size(); ++k) s += (k ? "," : "") + std::to_string(p.parts[k]);
    return s + ")";
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    for (int r = 1; r <= inner.length(); ++r)
        if (inner[r] > outer[r]) throw std::invalid_argument("inner partition is not contained in outer");
}

int SkewShape::cells() const { return outer.size() - inner.size(); }

std::vector<std::pair<int, int>> SkewShape::cell_list() const {
    std::vector<std::pair<int, int>> out;
    const Partition oc = outer.conjugate();
    const Partition ic = inner.conjugate();
    for (int j = 1; j <= oc.length(); ++j)
        for (int i = ic[j] + 1; i <= oc[j]; ++i) out.emplace_back(i, j);
    return out;
}

int SkewShape::depth() const {
    const Partition oc = outer.conjugate();
    const Partition ic = inner.conjugate();
    int d = 0;
    for (int j = 1; j <= oc.length(); ++j) d = std::max(d, oc[j] - ic[j]);
    return d;
}

bool SkewShape::connected() const {
    if (outer.length() == 0 || inner[1] >= outer[1]) return false;
    for (int i = 1; i < outer.length(); ++i)
        if (inner[i] + 1 > outer[i + 1]) return false;
    return true;
}

bool SkewShape::canonical() const { return inner[outer.length()] == 0; }

std::string to_string(const SkewShape& s) {
    return s.inner.length() == 0 ? to_string(s.outer) : to_string(s.outer) + "/" + to_string(s.inner);
}

int letter_rank(int n, Letter x) {
    if (x >= 1 && x <= n) return x;
    if (x == 0) return n + 1;
    if (x <= -1 && x >= -n) return 2 * n + 2 + x;
    throw std::invalid_argument("letter " + std::to_string(x) + " is not in the alphabet for n = " + std::to_string(n));
}

Letter letter_at(int n, int rank) {
    if (rank >= 1 && rank <= n) return rank;
    if (rank == n + 1) return 0;
    if (rank >= n + 2 && rank <= 2 * n + 1) return rank - 2 * n - 2;
    throw std::invalid_argument("letter rank out of range");
}

std::string letter_name(Letter x) { return std::to_string(x); }

Monomial box_monomial(int n, Letter x, int r) {
    if (n < 2) throw std::invalid_argument("box_monomial needs n >= 2");
    letter_rank(n, x);
    if (x == 1) return Monomial::Y(1, r);
    if (x >= 2 && x <= n - 1) return Monomial::Y(x - 1, r + 2 * x, -1) * Monomial::Y(x, r + 2 * (x - 1));
    if (x == n)
        return Monomial::Y(n - 1, r + 2 * n, -1) * Monomial::Y(n, r + 2 * n - 1) * Monomial::Y(n, r + 2 * n - 3);
    if (x == 0) return Monomial::Y(n, r + 2 * n + 1, -1) * Monomial::Y(n, r + 2 * n - 3);
    if (x == -n)
        return Monomial::Y(n - 1, r + 2 * n - 2) * Monomial::Y(n, r + 2 * n + 1, -1) * Monomial::Y(n, r + 2 * n - 1, -1);
    if (x == -1) return Monomial::Y(1, r + 4 * n - 2, -1);
    const int i = -x;
    return Monomial::Y(i - 1, r + 4 * n - 2 * i - 2) * Monomial::Y(i, r + 4 * n - 2 * i, -1);
}

void check_shape(int n, const SkewShape& shape) {
    if (shape.cells() == 0) throw std::invalid_argument("empty skew shape");
    if (!shape.connected()) throw std::invalid_argument("skew shape " + to_string(shape) + " is not connected");
    if (shape.depth() > n)
        throw std::invalid_argument("skew shape " + to_string(shape) + " has a column longer than n = " + std::to_string(n));
}

namespace {

// Row rule between left a and right b; column rule between upper a and lower b.
bool row_ok(int n, Letter a, Letter b) { return letter_rank(n, a) <= letter_rank(n, b) && !(a == 0 && b == 0); }
bool col_ok(int n, Letter a, Letter b) { return letter_rank(n, a) < letter_rank(n, b) || (a == 0 && b == 0); }

}  // namespace

bool admissible(int n, const BTableau& t) {
    for (const auto& [cell, x] : t.entries) {
        const auto [i, j] = cell;
        auto right = t.entries.find({i, j + 1});
        if (right != t.entries.end() && !row_ok(n, x, right->second)) return false;
        auto below = t.entries.find({i + 1, j});
        if (below != t.entries.end() && !col_ok(n, x, below->second)) return false;
    }
    return true;
}

void for_each_tableau(int n, const SkewShape& shape, const std::function<void(const BTableau&)>& visit) {
    check_shape(n, shape);
    const auto cells = shape.cell_list();
    BTableau t;
    t.shape = shape;
    const int letters = 2 * n + 1;
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(t);
            return;
        }
        const auto [i, j] = cells[idx];
        auto left = t.entries.find({i, j - 1});
        auto above = t.entries.find({i - 1, j});
        for (int rank = 1; rank <= letters; ++rank) {
            const Letter x = letter_at(n, rank);
            if (left != t.entries.end() && !row_ok(n, left->second, x)) continue;
            if (above != t.entries.end() && !col_ok(n, above->second, x)) continue;
            t.entries[{i, j}] = x;
            fill(idx + 1);
            t.entries.erase({i, j});
        }
    };
    fill(0);
}

std::vector<BTableau> enumerate_tableaux(int n, const SkewShape& shape) {
    std::vector<BTableau> out;
    for_each_tableau(n, shape, [&](const BTableau& t) { out.push_back(t); });
    return out;
}

Monomial tableau_monomial(int n, const BTableau& t, int r) {
    Monomial m;
    for (const auto& [cell, x] : t.entries) m *= box_monomial(n, x, r + 4 * (cell.second - cell.first));
    return m;
}

BTableau top_tableau(int n, const SkewShape& shape) {
    check_shape(n, shape);
    const Partition ic = shape.inner.conjugate();
    BTableau t;
    t.shape = shape;
    for (const auto& [i, j] : shape.cell_list()) t.entries[{i, j}] = i - ic[j];
    if (!admissible(n, t)) throw std::logic_error("top tableau is not admissible");
    if (!is_dominant(tableau_monomial(n, t, 0))) throw std::logic_error("top tableau monomial is not dominant");
    return t;
}

QCharacter jt_qchar(int n, const SkewShape& shape, int r) {
    QCharacter chi{tableau_monomial(n, top_tableau(n, shape), r)};
    for_each_tableau(n, shape, [&](const BTableau& t) { chi.add(tableau_monomial(n, t, r)); });
    return chi;
}

std::string render(int n, const BTableau& t) {
    std::vector<std::vector<std::string>> rows;
    std::size_t width = 1;
    for (int i = 1; i <= t.shape.outer.length(); ++i) {
        std::vector<std::string> row;
        for (int j = 1; j <= t.shape.outer[i]; ++j) {
            auto it = t.entries.find({i, j});
            std::string s = it == t.entries.end() ? "." : letter_name(it->second);
            if (it != t.entries.end()) letter_rank(n, it->second);
            width = std::max(width, s.size());
            row.push_back(std::move(s));
        }
        rows.push_back(std::move(row));
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) os << ' ';
            os << std::string(width - row[k].size(), ' ') << row[k];
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Partitions with at most `rows` parts, each at most `max_part`.
void box_partitions(int rows, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = max_part; p >= 1; --p) {
        cur.push_back(p);
        box_partitions(rows, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SkewShape> skew_shapes(int max_cells, int max_depth) {
    // A connected canonical shape with c cells fits in a c x c box.
    std::vector<Partition> box;
    std::vector<int> cur;
    box_partitions(max_cells, max_cells, cur, box);
    std::vector<SkewShape> out;
    for (const Partition& o : box) {
        if (o.length() == 0) continue;
        for (const Partition& in : box) {
            if (in.length() > o.length()) continue;
            bool inside = true;
            for (int i = 1; i <= in.length() && inside; ++i) inside = in[i] <= o[i];
            if (!inside) continue;
            SkewShape s(o, in);
            const int c = s.cells();
            if (c < 1 || c > max_cells) continue;
            if (!s.canonical() || !s.connected() || s.depth() > max_depth) continue;
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const SkewShape& a, const SkewShape& b) {
        if (a.cells() != b.cells()) return a.cells() < b.cells();
        return a < b;
    });
    return out;
}

}  // namespace qchar
