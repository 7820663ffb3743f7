#include "qchar/cartan.hpp"

#include <cctype>
#include <numeric>
#include <queue>
#include <string>

namespace qchar {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix identity_cartan(int n) {
    Matrix m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    return m;
}

void link(Matrix& m, int i, int j, int cij = -1, int cji = -1) {
    // 1-based node labels
    m[i - 1][j - 1] = cij;
    m[j - 1][i - 1] = cji;
}

int gcd_all(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    return static_cast<int>(g);
}

}  // namespace

bool CartanData::simply_laced() const {
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (i != j && matrix[i][j] < -1) return false;
    return true;
}

bool CartanData::is_linear() const {
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            bool adjacent = (j == i + 1 || i == j + 1);
            if (adjacent != (matrix[i][j] != 0)) return false;
        }
    return true;
}

std::vector<int> CartanData::neighbors(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= rank; ++j)
        if (j != i && c(j, i) < 0) out.push_back(j);
    return out;
}

std::string_view kind_letter(Kind kind) {
    switch (kind) {
        case Kind::A: return "A";
        case Kind::B: return "B";
        case Kind::C: return "C";
        case Kind::D: return "D";
        case Kind::E: return "E";
        case Kind::F: return "F";
        case Kind::G: return "G";
        case Kind::Custom: return "custom";
    }
    return "?";
}

std::string CartanData::name() const { return std::string(kind_letter(kind)) + std::to_string(rank); }

CartanData build_cartan(Kind kind, int n) {
    CartanData cd;
    cd.kind = kind;
    cd.rank = n;
    auto bad_rank = [&] {
        throw CartanError("invalid rank " + std::to_string(n) + " for type " + std::string(kind_letter(kind)));
    };
    if (n < 1) bad_rank();

    Matrix m = identity_cartan(n);
    std::vector<int> r(n, 1);
    std::vector<int> bar(n);
    std::iota(bar.begin(), bar.end(), 0);
    int twist = 0;

    switch (kind) {
        case Kind::A:
            for (int i = 1; i < n; ++i) link(m, i, i + 1);
            for (int i = 0; i < n; ++i) bar[i] = n - 1 - i;
            twist = n + 1;
            break;
        case Kind::B:
            if (n < 2) bad_rank();
            for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
            link(m, n - 1, n, -1, -2);
            for (int i = 0; i < n - 1; ++i) r[i] = 2;
            twist = 2 * (2 * n - 1);
            break;
        case Kind::C:
            if (n < 2) bad_rank();
            for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
            link(m, n - 1, n, -2, -1);
            r[n - 1] = 2;
            twist = 2 * (n + 1);
            break;
        case Kind::D:
            if (n < 3) bad_rank();
            for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
            if (n >= 3) link(m, n - 2, n);
            if (n % 2 == 1) std::swap(bar[n - 2], bar[n - 1]);
            twist = 2 * n - 2;
            break;
        case Kind::E: {
            if (n < 6 || n > 8) bad_rank();
            // chain 1..n-1, node n hangs off the branch node
            for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
            int branch = (n == 6) ? 3 : (n == 7 ? 4 : 5);
            link(m, branch, n);
            if (n == 6) {
                bar = {4, 3, 2, 1, 0, 5};
            }
            twist = (n == 6) ? 12 : (n == 7 ? 18 : 30);
            break;
        }
        case Kind::F:
            if (n != 4) bad_rank();
            link(m, 1, 2);
            link(m, 2, 3, -1, -2);
            link(m, 3, 4);
            r = {2, 2, 1, 1};
            twist = 18;
            break;
        case Kind::G:
            if (n != 2) bad_rank();
            link(m, 1, 2, -1, -3);
            r = {3, 1};
            twist = 12;
            break;
        case Kind::Custom:
            throw CartanError("custom Cartan data must be built with custom_cartan()");
    }
    cd.matrix = std::move(m);
    cd.symmetrizers = std::move(r);
    cd.bar_map = std::move(bar);
    cd.twist = twist;
    validate(cd);
    return cd;
}

CartanData build_cartan(std::string_view name) {
    if (name.empty()) throw CartanError("empty Cartan type name");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    Kind kind;
    switch (letter) {
        case 'A': kind = Kind::A; break;
        case 'B': kind = Kind::B; break;
        case 'C': kind = Kind::C; break;
        case 'D': kind = Kind::D; break;
        case 'E': kind = Kind::E; break;
        case 'F': kind = Kind::F; break;
        case 'G': kind = Kind::G; break;
        default: throw CartanError("unknown Cartan type '" + std::string(name) + "'");
    }
    std::string digits(name.substr(1));
    if (digits.empty()) throw CartanError("missing rank in Cartan type '" + std::string(name) + "'");
    for (char ch : digits)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw CartanError("bad rank in Cartan type '" + std::string(name) + "'");
    return build_cartan(kind, std::stoi(digits));
}

CartanData custom_cartan(Matrix matrix, std::vector<int> symmetrizers) {
    CartanData cd;
    cd.kind = Kind::Custom;
    cd.rank = static_cast<int>(matrix.size());
    if (cd.rank < 1) throw CartanError("custom Cartan matrix is empty");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != cd.rank) throw CartanError("custom Cartan matrix is not square");
    cd.matrix = std::move(matrix);
    const int n = cd.rank;

    if (symmetrizers.empty()) {
        // r_j / r_i = C(i,j) / C(j,i); propagate as fractions num/den per node.
        std::vector<long long> num(n, 0), den(n, 1);
        for (int start = 0; start < n; ++start) {
            if (num[start] != 0) continue;
            num[start] = 1;
            den[start] = 1;
            std::vector<int> component{start};
            std::queue<int> todo;
            todo.push(start);
            while (!todo.empty()) {
                int i = todo.front();
                todo.pop();
                for (int j = 0; j < n; ++j) {
                    if (j == i || cd.matrix[i][j] == 0) continue;
                    if (cd.matrix[j][i] == 0) throw CartanError("custom Cartan matrix has asymmetric zero pattern");
                    long long nj = num[i] * cd.matrix[i][j];
                    long long dj = den[i] * cd.matrix[j][i];
                    if (dj < 0) {
                        nj = -nj;
                        dj = -dj;
                    }
                    long long g = std::gcd(nj, dj);
                    nj /= g;
                    dj /= g;
                    if (num[j] == 0) {
                        num[j] = nj;
                        den[j] = dj;
                        component.push_back(j);
                        todo.push(j);
                    } else if (num[j] * dj != nj * den[j]) {
                        throw CartanError("custom Cartan matrix is not symmetrizable");
                    }
                }
            }
            long long l = 1;
            for (int j : component) l = std::lcm(l, den[j]);
            std::vector<long long> scaled;
            for (int j : component) scaled.push_back(num[j] * (l / den[j]));
            int g = gcd_all(scaled);
            for (int j : component) {
                num[j] = num[j] * (l / den[j]) / g;
                den[j] = 1;
            }
        }
        symmetrizers.assign(num.begin(), num.end());
    }
    cd.symmetrizers = std::move(symmetrizers);
    cd.bar_map.resize(n);
    std::iota(cd.bar_map.begin(), cd.bar_map.end(), 0);
    validate(cd);
    return cd;
}

void validate(const CartanData& cd) {
    const int n = cd.rank;
    if (n < 1) throw CartanError("rank must be positive");
    if (static_cast<int>(cd.matrix.size()) != n || static_cast<int>(cd.symmetrizers.size()) != n ||
        static_cast<int>(cd.bar_map.size()) != n)
        throw CartanError("Cartan data has inconsistent dimensions");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(cd.matrix[i].size()) != n) throw CartanError("Cartan matrix is not square");
        if (cd.matrix[i][i] != 2) throw CartanError("Cartan matrix diagonal must be 2");
        if (cd.symmetrizers[i] <= 0) throw CartanError("symmetrizers must be positive");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cd.matrix[i][j] > 0) throw CartanError("off-diagonal Cartan entries must be <= 0");
            if ((cd.matrix[i][j] == 0) != (cd.matrix[j][i] == 0))
                throw CartanError("Cartan matrix has asymmetric zero pattern");
            if (cd.symmetrizers[i] * cd.matrix[i][j] != cd.symmetrizers[j] * cd.matrix[j][i])
                throw CartanError("diag(r) * C is not symmetric");
        }
        int b = cd.bar_map[i];
        if (b < 0 || b >= n || cd.bar_map[b] != i) throw CartanError("bar map is not an involution");
    }
}

}  // namespace qchar
