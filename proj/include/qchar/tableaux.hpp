#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qchar/character.hpp"

namespace qchar {

/// Weakly decreasing parts, trailing zeros trimmed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::vector<int> p);  // validates and trims

    int operator[](int i) const;  // 1-based, 0 past the end
    int length() const { return static_cast<int>(parts.size()); }
    int size() const;
    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);

/// Cells (i, j) with inner_i + 1 <= j <= outer_i, rows and columns 1-based.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition outer, Partition inner = {});  // requires inner inside outer

    int cells() const;
    std::vector<std::pair<int, int>> cell_list() const;  // column-major
    /// Length of the longest column.
    int depth() const;
    /// inner_i + 1 <= outer_{i+1} whenever outer_{i+1} != 0, and row 1 nonempty.
    bool connected() const;
    /// No empty leading column (inner has a zero part within the rows of outer).
    bool canonical() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
};

std::string to_string(const SkewShape& s);

/// Letters of the type-B alphabet: 1..n, 0, and -i for i-bar. Order
/// 1 < 2 < ... < n < 0 < -n < ... < -1.
using Letter = int;

/// Position of a letter in the order above (1 .. 2n+1).
int letter_rank(int n, Letter x);
Letter letter_at(int n, int rank);
std::string letter_name(Letter x);

/// The box monomial of `letter` at spectral parameter q^r, type B_n.
Monomial box_monomial(int n, Letter letter, int r);

struct BTableau {
    SkewShape shape;
    std::map<std::pair<int, int>, Letter> entries;
};

/// Throws std::invalid_argument unless the shape is connected with depth <= n.
void check_shape(int n, const SkewShape& shape);

bool admissible(int n, const BTableau& t);

/// Calls `visit` on every admissible filling, cells filled column by column.
void for_each_tableau(int n, const SkewShape& shape, const std::function<void(const BTableau&)>& visit);
std::vector<BTableau> enumerate_tableaux(int n, const SkewShape& shape);

/// prod over cells of box_{T(i,j)} at q^{r + 4(j-i)}.
Monomial tableau_monomial(int n, const BTableau& t, int r);

/// Entries i - inner'_j.
BTableau top_tableau(int n, const SkewShape& shape);

/// Sum of the tableau monomials, head m_{T_0}.
QCharacter jt_qchar(int n, const SkewShape& shape, int r);

/// Rows top to bottom, '.' for cells of the inner shape.
std::string render(int n, const BTableau& t);

/// Connected canonical skew shapes with 1..max_cells cells and depth <= max_depth.
std::vector<SkewShape> skew_shapes(int max_cells, int max_depth);

}  // namespace qchar
