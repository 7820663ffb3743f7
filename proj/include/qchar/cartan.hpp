#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qchar {

/// Raised for malformed Cartan input: bad rank, unknown kind, or a custom
/// matrix that is not a symmetrizable generalized Cartan matrix.
struct CartanError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Kind { A, B, C, D, E, F, G, Custom };

/// Cartan data of a (generalized) symmetrizable Cartan matrix.
///
/// Nodes are 1-based throughout the public API, matching the `i_r` monomial
/// syntax. The matrix convention is C(i,j) = alpha_j(alpha_i^vee), so that
/// diag(r) * C is symmetric. Built-in non simply-laced types follow:
///   B_n: node n short, C(n,n-1) = -2, r = (2,..,2,1)
///   C_n: node n long,  C(n-1,n) = -2, r = (1,..,1,2)
///   F_4: nodes 1,2 long, C(3,2) = -2, r = (2,2,1,1)
///   G_2: node 1 long,  C(2,1) = -3, r = (3,1)
struct CartanData {
    Kind kind = Kind::A;
    int rank = 0;
    std::vector<std::vector<int>> matrix;  // row-major, 0-based storage
    std::vector<int> symmetrizers;         // r_i, 0-based storage
    std::vector<int> bar_map;              // i -> i-bar, 0-based storage
    std::optional<int> twist;              // r^vee * h^vee; absent for custom kinds

    int n() const { return rank; }
    int c(int i, int j) const { return matrix[i - 1][j - 1]; }
    int r(int i) const { return symmetrizers[i - 1]; }
    int bar(int i) const { return bar_map[i - 1] + 1; }
    bool has_twist() const { return twist.has_value(); }
    bool simply_laced() const;

    /// True when the Dynkin diagram is the path 1 - 2 - ... - n.
    bool is_linear() const;

    /// Nodes j != i with C(j,i) < 0.
    std::vector<int> neighbors(int i) const;

    /// "A2", "B3", "G2", or "custom3".
    std::string name() const;
};

CartanData build_cartan(Kind kind, int rank);

/// Parses names such as "A1", "B3", "E6", "G2" (case-insensitive letter).
CartanData build_cartan(std::string_view name);

/// Validates a user-supplied matrix. When `symmetrizers` is empty the minimal
/// positive integer symmetrizer is computed per connected component.
CartanData custom_cartan(std::vector<std::vector<int>> matrix, std::vector<int> symmetrizers = {});

/// Throws CartanError if any structural invariant fails.
void validate(const CartanData& cd);

std::string_view kind_letter(Kind kind);

}  // namespace qchar
