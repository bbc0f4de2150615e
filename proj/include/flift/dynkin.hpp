#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace flift {

enum class DynkinType { A, B, C, D, E, F, G };

DynkinType dynkin_type_from_char(char c);
char dynkin_type_char(DynkinType t);

/**
 * Marked Dynkin diagram: type, rank, and a set of marked nodes (Humphreys
 * numbering).  The marked nodes cut out the parabolic P with Levi spanned by
 * the unmarked simple roots; G/P(alpha) marks the single node alpha.
 * Legal ranks: A n>=1, B n>=2, C n>=2, D n>=4, E 6..8, F 4, G 2.
 */
struct MarkedDynkinDiagram {
    DynkinType type;
    int rank;
    std::set<int> marked;   // 1-based

    MarkedDynkinDiagram(DynkinType t, int n, std::set<int> m);
    static MarkedDynkinDiagram parse(const std::string& s);   // "A3:1" or "A2:1,2"
    std::string to_string() const;
};

/// positive roots in the simple-root basis (rows of coefficients)
std::vector<std::vector<int>> positive_roots(DynkinType t, int rank);

/// dim G/P = number of positive roots with support on a marked node
int64_t dim_G_mod_P(const MarkedDynkinDiagram& d);

/// r when G/P(alpha) is P^r by the classification; nullopt otherwise
std::optional<int> is_projective_space(const MarkedDynkinDiagram& d);

enum class QuotientClass { ProjSpace, Incidence, Neither };
struct QuotientVerdict {
    QuotientClass cls;
    int n = 0;             // P^n or F_{1,n}
    std::string reason;
};

/// all maximal parabolics above P must be projective spaces; then P^n when a
/// single node is marked and F_{1,n} exactly for A_n with {1, n} marked
QuotientVerdict classify_max_parabolic_quotients(const MarkedDynkinDiagram& d);

/// legal (type, rank) pairs up to the given rank, for exhaustive sweeps
std::vector<std::pair<DynkinType, int>> legal_diagrams(int max_rank);

} // namespace flift
