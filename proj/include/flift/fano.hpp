#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace flift {

/// Numerical invariants of a Fano threefold family, as read off the
/// classification tables: Picard rank, (-K)^3, and the third Betti number.
struct FanoInvariants {
    std::string id;      // "rho.n" label
    int rho = 0;
    int64_t minus_k_cubed = 0;
    int64_t b3 = 0;
    std::string category;   // optional

    void validate() const;
};

struct FanoScreenRow {
    FanoInvariants inv;
    int64_t chi_tangent;
    bool flagged_nonrigid;        // chi < 0: not F-liftable
    bool requires_external;       // rows the screen cannot decide
};

struct FanoScreenReport {
    std::vector<FanoScreenRow> rows;
    std::vector<std::string> negative_ids;
    /// category -> ids, mirroring the classification table when present
    std::vector<std::pair<std::string, std::vector<std::string>>> partition;
};

/// chi(T_X) = (1/2)(-K)^3 - 18 + rho - (1/2) b3
int64_t fano_chi_tangent(const FanoInvariants& row);

FanoScreenReport fano_rigidity_screen(const std::vector<FanoInvariants>& rows);

/// CSV schema: id,rho,minusK3,b3[,category]; '#' comments allowed
std::vector<FanoInvariants> parse_fano_csv(std::istream& in);
std::vector<FanoInvariants> load_fano_csv(const std::string& path);

} // namespace flift
