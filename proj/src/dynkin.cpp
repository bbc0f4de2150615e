#include "flift/dynkin.hpp"

#include "flift/intlin.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flift {

DynkinType dynkin_type_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return DynkinType::A;
        case 'B': case 'b': return DynkinType::B;
        case 'C': case 'c': return DynkinType::C;
        case 'D': case 'd': return DynkinType::D;
        case 'E': case 'e': return DynkinType::E;
        case 'F': case 'f': return DynkinType::F;
        case 'G': case 'g': return DynkinType::G;
    }
    throw std::invalid_argument(std::string("unknown Dynkin type '") + c + "'");
}

char dynkin_type_char(DynkinType t) {
    switch (t) {
        case DynkinType::A: return 'A';
        case DynkinType::B: return 'B';
        case DynkinType::C: return 'C';
        case DynkinType::D: return 'D';
        case DynkinType::E: return 'E';
        case DynkinType::F: return 'F';
        case DynkinType::G: return 'G';
    }
    return '?';
}

namespace {

bool rank_legal(DynkinType t, int n) {
    switch (t) {
        case DynkinType::A: return n >= 1 && n <= 8;
        case DynkinType::B: return n >= 2 && n <= 8;
        case DynkinType::C: return n >= 2 && n <= 8;
        case DynkinType::D: return n >= 4 && n <= 8;
        case DynkinType::E: return n >= 6 && n <= 8;
        case DynkinType::F: return n == 4;
        case DynkinType::G: return n == 2;
    }
    return false;
}

// simple roots in integer coordinates (F and E scaled by 2)
std::vector<ZVec> simple_roots(DynkinType t, int n) {
    std::vector<ZVec> s;
    auto e = [&](int dim, int i, int64_t c) {
        ZVec v(dim, 0);
        v[i] = c;
        return v;
    };
    switch (t) {
        case DynkinType::A: {
            for (int i = 0; i < n; ++i) {
                ZVec v(n + 1, 0);
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            break;
        }
        case DynkinType::B: {
            for (int i = 0; i + 1 < n; ++i) {
                ZVec v(n, 0);
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            s.push_back(e(n, n - 1, 1));
            break;
        }
        case DynkinType::C: {
            for (int i = 0; i + 1 < n; ++i) {
                ZVec v(n, 0);
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            s.push_back(e(n, n - 1, 2));
            break;
        }
        case DynkinType::D: {
            for (int i = 0; i + 1 < n; ++i) {
                ZVec v(n, 0);
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            ZVec v(n, 0);
            v[n - 2] = 1;
            v[n - 1] = 1;
            s.push_back(v);
            break;
        }
        case DynkinType::E: {
            // Bourbaki E_8 simple roots scaled by 2, truncated for E_6, E_7
            std::vector<ZVec> e8 = {
                {1, -1, -1, -1, -1, -1, -1, 1},
                {2, 2, 0, 0, 0, 0, 0, 0},
                {-2, 2, 0, 0, 0, 0, 0, 0},
                {0, -2, 2, 0, 0, 0, 0, 0},
                {0, 0, -2, 2, 0, 0, 0, 0},
                {0, 0, 0, -2, 2, 0, 0, 0},
                {0, 0, 0, 0, -2, 2, 0, 0},
                {0, 0, 0, 0, 0, -2, 2, 0},
            };
            for (int i = 0; i < n; ++i) s.push_back(e8[i]);
            break;
        }
        case DynkinType::F: {
            s = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
            break;
        }
        case DynkinType::G: {
            s = {{1, -1, 0}, {-2, 1, 1}};
            break;
        }
    }
    return s;
}

struct RootSystem {
    std::vector<ZVec> simples;
    std::vector<std::vector<int>> positives;   // coefficients in the simple basis
};

const RootSystem& root_system(DynkinType t, int n) {
    static std::map<std::pair<DynkinType, int>, RootSystem> cache;
    auto key = std::make_pair(t, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    RootSystem rs;
    rs.simples = simple_roots(t, n);
    // closure of the simples under simple reflections
    std::vector<ZVec> roots = rs.simples;
    auto contains = [&](const ZVec& v) {
        return std::find(roots.begin(), roots.end(), v) != roots.end();
    };
    bool grew = true;
    while (grew) {
        grew = false;
        size_t cur = roots.size();
        for (size_t i = 0; i < cur; ++i)
            for (const auto& a : rs.simples) {
                int64_t num = 2 * dot(roots[i], a), den = dot(a, a);
                if (num % den != 0) throw std::logic_error("non-crystallographic reflection");
                ZVec refl = roots[i];
                int64_t c = num / den;
                for (size_t k = 0; k < refl.size(); ++k) refl[k] -= c * a[k];
                if (!contains(refl)) {
                    roots.push_back(refl);
                    grew = true;
                }
            }
    }
    // express each root in the simple basis; keep the nonnegative ones
    size_t dim = rs.simples[0].size();
    for (const auto& r : roots) {
        std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(n));
        std::vector<Rat> b(dim);
        for (size_t row = 0; row < dim; ++row) {
            for (int c = 0; c < n; ++c) a[row][c] = Rat(rs.simples[c][row]);
            b[row] = Rat(r[row]);
        }
        std::vector<Rat> x;
        if (!solve_rational(a, b, x)) throw std::logic_error("root outside the simple span");
        bool nonneg = true, integral = true;
        std::vector<int> coeffs(n);
        for (int c = 0; c < n; ++c) {
            if (!x[c].is_integer()) integral = false;
            else coeffs[c] = (int)x[c].num;
            if (x[c] < Rat(0)) nonneg = false;
        }
        if (!integral) throw std::logic_error("non-integral root coefficient");
        if (nonneg) rs.positives.push_back(coeffs);
    }
    // sanity: positives are half of all roots
    if (rs.positives.size() * 2 != roots.size())
        throw std::logic_error("positive root count mismatch");
    return cache.emplace(key, std::move(rs)).first->second;
}

} // namespace

MarkedDynkinDiagram::MarkedDynkinDiagram(DynkinType t, int n, std::set<int> m)
    : type(t), rank(n), marked(std::move(m)) {
    if (!rank_legal(t, n))
        throw std::invalid_argument("illegal rank " + std::to_string(n) + " for type " +
                                    dynkin_type_char(t));
    for (int i : marked)
        if (i < 1 || i > n) throw std::invalid_argument("marked node out of range");
}

MarkedDynkinDiagram MarkedDynkinDiagram::parse(const std::string& s) {
    auto colon = s.find(':');
    std::string head = colon == std::string::npos ? s : s.substr(0, colon);
    if (head.empty()) throw std::invalid_argument("empty diagram spec");
    DynkinType t = dynkin_type_from_char(head[0]);
    int n = std::stoi(head.substr(1));
    std::set<int> marked;
    if (colon != std::string::npos) {
        std::stringstream ss(s.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) marked.insert(std::stoi(tok));
    }
    return MarkedDynkinDiagram(t, n, marked);
}

std::string MarkedDynkinDiagram::to_string() const {
    std::string s(1, dynkin_type_char(type));
    s += std::to_string(rank);
    if (!marked.empty()) {
        s += ":";
        bool first = true;
        for (int i : marked) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(i);
        }
    }
    return s;
}

std::vector<std::vector<int>> positive_roots(DynkinType t, int rank) {
    if (!rank_legal(t, rank)) throw std::invalid_argument("illegal rank");
    return root_system(t, rank).positives;
}

int64_t dim_G_mod_P(const MarkedDynkinDiagram& d) {
    const auto& rs = root_system(d.type, d.rank);
    int64_t count = 0;
    for (const auto& root : rs.positives) {
        for (int m : d.marked)
            if (root[m - 1] > 0) {
                ++count;
                break;
            }
    }
    return count;
}

std::optional<int> is_projective_space(const MarkedDynkinDiagram& d) {
    if (d.marked.size() != 1) throw std::invalid_argument("expected a single marked node");
    int alpha = *d.marked.begin();
    int n = d.rank;
    if (d.type == DynkinType::A && (alpha == 1 || alpha == n)) return n;
    if (d.type == DynkinType::C && alpha == 1 && 2 * n - 1 >= 3) return 2 * n - 1;
    return std::nullopt;
}

QuotientVerdict classify_max_parabolic_quotients(const MarkedDynkinDiagram& d) {
    if (d.marked.empty()) throw std::invalid_argument("at least one node must be marked");
    QuotientVerdict v;
    for (int m : d.marked) {
        MarkedDynkinDiagram single(d.type, d.rank, {m});
        auto r = is_projective_space(single);
        if (!r) {
            v.cls = QuotientClass::Neither;
            v.reason = "maximal quotient at node " + std::to_string(m) +
                       " is not a projective space";
            return v;
        }
    }
    if (d.marked.size() == 1) {
        v.cls = QuotientClass::ProjSpace;
        v.n = *is_projective_space(d);
        v.reason = "single marked node classifies as P^" + std::to_string(v.n);
        return v;
    }
    if (d.type == DynkinType::A && d.rank >= 2 &&
        d.marked == std::set<int>{1, d.rank}) {
        v.cls = QuotientClass::Incidence;
        v.n = d.rank;
        v.reason = "A_n with endpoints marked: the incidence variety F_{1,n}";
        return v;
    }
    v.cls = QuotientClass::Neither;
    v.reason = "multiple marked nodes not of the A_n {1,n} form";
    return v;
}

std::vector<std::pair<DynkinType, int>> legal_diagrams(int max_rank) {
    std::vector<std::pair<DynkinType, int>> out;
    for (DynkinType t : {DynkinType::A, DynkinType::B, DynkinType::C, DynkinType::D,
                         DynkinType::E, DynkinType::F, DynkinType::G})
        for (int n = 1; n <= max_rank; ++n)
            if (rank_legal(t, n)) out.push_back({t, n});
    return out;
}

} // namespace flift
