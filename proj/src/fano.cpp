#include "flift/fano.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flift {

void FanoInvariants::validate() const {
    if (minus_k_cubed <= 0)
        throw std::invalid_argument(id + ": (-K)^3 must be positive");
    if (minus_k_cubed % 2 != 0)
        throw std::invalid_argument(id + ": (-K)^3 must be even");
    if (b3 < 0 || b3 % 2 != 0)
        throw std::invalid_argument(id + ": b3 must be even and nonnegative");
    if (rho < 1) throw std::invalid_argument(id + ": Picard rank must be positive");
}

int64_t fano_chi_tangent(const FanoInvariants& row) {
    return row.minus_k_cubed / 2 - 18 + row.rho - row.b3 / 2;
}

FanoScreenReport fano_rigidity_screen(const std::vector<FanoInvariants>& rows) {
    FanoScreenReport rep;
    std::map<std::string, std::vector<std::string>> part;
    std::vector<std::string> order;
    for (const auto& r : rows) {
        r.validate();
        FanoScreenRow out;
        out.inv = r;
        out.chi_tangent = fano_chi_tangent(r);
        out.flagged_nonrigid = out.chi_tangent < 0;
        out.requires_external = (r.category == "other");
        rep.rows.push_back(out);
        if (out.flagged_nonrigid) rep.negative_ids.push_back(r.id);
        if (!r.category.empty()) {
            if (!part.count(r.category)) order.push_back(r.category);
            part[r.category].push_back(r.id);
        }
    }
    for (const auto& c : order) rep.partition.push_back({c, part[c]});
    return rep;
}

std::vector<FanoInvariants> parse_fano_csv(std::istream& in) {
    std::vector<FanoInvariants> rows;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) fields.push_back(tok);
        if (!header_seen) {
            header_seen = true;
            if (!fields.empty() && fields[0] == "id") continue;   // header row
        }
        if (fields.size() < 4)
            throw std::invalid_argument("fano csv line " + std::to_string(lineno) +
                                        ": expected id,rho,minusK3,b3[,category]");
        FanoInvariants r;
        r.id = fields[0];
        try {
            r.rho = std::stoi(fields[1]);
            r.minus_k_cubed = std::stoll(fields[2]);
            r.b3 = std::stoll(fields[3]);
        } catch (const std::exception&) {
            throw std::invalid_argument("fano csv line " + std::to_string(lineno) +
                                        ": malformed numeric field");
        }
        if (fields.size() >= 5) r.category = fields[4];
        r.validate();
        rows.push_back(r);
    }
    return rows;
}

std::vector<FanoInvariants> load_fano_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parse_fano_csv(in);
}

} // namespace flift
