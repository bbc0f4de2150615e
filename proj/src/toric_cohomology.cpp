#include "flift/toric_cohomology.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace flift {

ToricDivisor::ToricDivisor(const Fan* f, std::vector<int64_t> a) : fan(f), coeffs(std::move(a)) {
    if ((int)coeffs.size() != fan->ray_count())
        throw std::invalid_argument("divisor coefficient count must match ray count");
}

ToricDivisor ToricDivisor::canonical(const Fan* f) {
    return ToricDivisor(f, std::vector<int64_t>(f->ray_count(), -1));
}

ToricDivisor ToricDivisor::operator+(const ToricDivisor& o) const {
    if (fan != o.fan) throw std::invalid_argument("divisors on different fans");
    std::vector<int64_t> c(coeffs);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs[i];
    return ToricDivisor(fan, c);
}

ToricDivisor ToricDivisor::operator-(const ToricDivisor& o) const {
    return *this + o.scaled(-1);
}

ToricDivisor ToricDivisor::scaled(int64_t s) const {
    std::vector<int64_t> c(coeffs);
    for (auto& x : c) x *= s;
    return ToricDivisor(fan, c);
}

namespace {

// certified coordinate bounds for {m : <m, v_rho> >= -a_rho} on a complete
// fan: +-e_i lies in some maximal cone, whose ray inequalities bound <m, e_i>
std::pair<ZVec, ZVec> polytope_box(const ToricDivisor& d) {
    const Fan* fan = d.fan;
    int n = fan->rank();
    ZVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        for (int sign : {+1, -1}) {
            ZVec e(n, 0);
            e[i] = sign;
            auto mc = fan->containing_max_cone(e);
            if (!mc) throw std::invalid_argument("unbounded section polytope (fan not complete)");
            const auto& cone = fan->max_cones()[*mc];
            // e = sum lambda_rho v_rho, lambda >= 0  =>
            // <m, e> = sum lambda_rho <m, v_rho> >= -sum lambda_rho a_rho
            std::vector<std::vector<Rat>> a(n, std::vector<Rat>(cone.size()));
            std::vector<Rat> b(n);
            int col = 0;
            for (int ri : cone) {
                for (int r = 0; r < n; ++r) a[r][col] = Rat(fan->ray(ri)[r]);
                ++col;
            }
            for (int r = 0; r < n; ++r) b[r] = Rat(e[r]);
            std::vector<Rat> lam;
            if (!solve_rational(a, b, lam))
                throw std::logic_error("cone membership inconsistent");
            Rat bound(0);
            col = 0;
            for (int ri : cone) {
                bound = bound - lam[col] * Rat(d.coeffs[ri]);
                ++col;
            }
            // <m, e_i> >= bound  (sign folded into e)
            int64_t ib = bound.num >= 0 ? (bound.num + bound.den - 1) / bound.den
                                        : -((-bound.num) / bound.den);
            if (sign > 0) lo[i] = ib;
            else hi[i] = -ib;
        }
    }
    return {lo, hi};
}

void enumerate_box(const ZVec& lo, const ZVec& hi, ZVec& cur, size_t i,
                   const std::function<void(const ZVec&)>& fn) {
    if (i == cur.size()) {
        fn(cur);
        return;
    }
    for (int64_t v = lo[i]; v <= hi[i]; ++v) {
        cur[i] = v;
        enumerate_box(lo, hi, cur, i + 1, fn);
    }
}

// reduced homology dimension h~_k of the subcomplex of the fan's nerve
// induced on the ray set neg (faces = cones with all rays in neg)
int64_t reduced_homology_dim(const Fan* fan, const std::vector<int>& neg, int k) {
    if (neg.empty()) return 0;   // empty complex contributes via the h^0 path only
    // collect faces as sorted vertex tuples per dimension
    std::map<int, std::vector<std::vector<int>>> faces;
    for (const auto& c : fan->cones()) {
        if (c.empty()) continue;
        bool inside = true;
        for (int i : c)
            if (!std::binary_search(neg.begin(), neg.end(), i)) { inside = false; break; }
        if (!inside) continue;
        faces[(int)c.size() - 1].push_back(std::vector<int>(c.begin(), c.end()));
    }
    auto count = [&](int dim) -> int64_t {
        auto it = faces.find(dim);
        return it == faces.end() ? 0 : (int64_t)it->second.size();
    };
    auto boundary_rank = [&](int dim) -> int64_t {
        // rank of d: C_dim -> C_{dim-1}; d on the augmentation (dim 0 -> empty) has rank 1
        if (dim == 0) return count(0) > 0 ? 1 : 0;
        auto it = faces.find(dim);
        if (it == faces.end() || it->second.empty()) return 0;
        auto lower = faces.find(dim - 1);
        if (lower == faces.end()) return 0;
        std::map<std::vector<int>, int> row_index;
        for (size_t i = 0; i < lower->second.size(); ++i) row_index[lower->second[i]] = (int)i;
        ZMat m(lower->second.size(), ZVec(it->second.size(), 0));
        for (size_t j = 0; j < it->second.size(); ++j) {
            const auto& f = it->second[j];
            for (size_t omit = 0; omit < f.size(); ++omit) {
                std::vector<int> sub;
                for (size_t t = 0; t < f.size(); ++t)
                    if (t != omit) sub.push_back(f[t]);
                auto rit = row_index.find(sub);
                if (rit == row_index.end()) throw std::logic_error("complex not closed under faces");
                m[rit->second][j] = (omit % 2 == 0) ? 1 : -1;
            }
        }
        // dimensions only; Smith normal form gives the rank over Q as well
        return (int64_t)smith_divisors(m).size();
    };
    if (k < 0 || k > fan->rank() - 1) return 0;
    // reduced: h~_k = dim C_k - rank d_k - rank d_{k+1}
    return count(k) - boundary_rank(k) - boundary_rank(k + 1);
}

} // namespace

SectionLattice global_sections(const ToricDivisor& d) {
    const Fan* fan = d.fan;
    auto [lo, hi] = polytope_box(d);
    SectionLattice out;
    ZVec cur(fan->rank());
    enumerate_box(lo, hi, cur, 0, [&](const ZVec& m) {
        for (int i = 0; i < fan->ray_count(); ++i)
            if (dot(m, fan->ray(i)) < -d.coeffs[i]) return;
        out.points.push_back(m);
    });
    return out;
}

int64_t cohomology(const ToricDivisor& d, int deg) {
    const Fan* fan = d.fan;
    if (fan->rank() > 3) throw std::invalid_argument("cohomology: rank <= 3 only");
    if (!is_smooth(*fan) || !is_complete(*fan))
        throw std::invalid_argument("cohomology requires a smooth complete fan");
    if (deg < 0 || deg > fan->rank()) return 0;
    if (deg == 0) return (int64_t)global_sections(d).h0();

    // Character window: padded bounding box of the vertices of the
    // arrangement <m, v_rho> = -a_rho.  Outside it a character sits in an
    // unbounded chamber whose support subcomplex is empty or contractible,
    // so it contributes nothing; inside, everything is enumerated exactly.
    int n = fan->rank();
    ZVec lo(n, 0), hi(n, 0);
    bool have_vertex = false;
    std::vector<int> rays_idx(fan->ray_count());
    for (int i = 0; i < fan->ray_count(); ++i) rays_idx[i] = i;
    std::vector<int> comb(n);
    std::function<void(int, int)> vertices = [&](int start, int depth) {
        if (depth == n) {
            std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
            std::vector<Rat> b(n);
            ZMat rows;
            for (int t = 0; t < n; ++t) rows.push_back(fan->ray(comb[t]));
            if (zmat_rank(rows) != n) return;
            for (int t = 0; t < n; ++t) {
                for (int k = 0; k < n; ++k) a[t][k] = Rat(fan->ray(comb[t])[k]);
                b[t] = Rat(-d.coeffs[comb[t]]);
            }
            std::vector<Rat> m;
            if (!solve_rational(a, b, m)) return;
            for (int k = 0; k < n; ++k) {
                int64_t fl = m[k].num >= 0 ? m[k].num / m[k].den
                                           : -(((-m[k].num) + m[k].den - 1) / m[k].den);
                int64_t ce = m[k].num >= 0 ? (m[k].num + m[k].den - 1) / m[k].den
                                           : -((-m[k].num) / m[k].den);
                if (!have_vertex) { lo[k] = fl - 1; hi[k] = ce + 1; }
                else {
                    lo[k] = std::min(lo[k], fl - 1);
                    hi[k] = std::max(hi[k], ce + 1);
                }
            }
            have_vertex = true;
            return;
        }
        for (int i = start; i < fan->ray_count(); ++i) {
            comb[depth] = i;
            vertices(i + 1, depth + 1);
        }
    };
    // first vertex initializes the box
    for (int k = 0; k < n; ++k) { lo[k] = 0; hi[k] = 0; }
    vertices(0, 0);
    if (!have_vertex) return 0;

    int64_t total = 0;
    ZVec cur(n);
    enumerate_box(lo, hi, cur, 0, [&](const ZVec& m) {
        std::vector<int> neg;
        for (int i = 0; i < fan->ray_count(); ++i)
            if (dot(m, fan->ray(i)) < -d.coeffs[i]) neg.push_back(i);
        if (neg.empty()) return;   // handled by the h^0 path
        total += reduced_homology_dim(fan, neg, deg - 1);
    });
    return total;
}

int64_t riemann_roch_surface(const ToricDivisor& d) {
    const Fan* fan = d.fan;
    if (fan->rank() != 2) throw std::invalid_argument("riemann_roch_surface: rank-2 fans only");
    auto si = toric_surface_intersections(*fan);
    std::vector<Rat> dc(fan->ray_count()), kc(fan->ray_count());
    for (int i = 0; i < fan->ray_count(); ++i) {
        dc[i] = Rat(d.coeffs[i]);
        kc[i] = Rat(-1);
    }
    Rat chi = Rat(1) + (si.pair(dc, dc) - si.pair(dc, kc)) / Rat(2);
    if (!chi.is_integer()) throw std::logic_error("Riemann-Roch value is not an integer");
    return chi.num;
}

bool ample_test(const ToricDivisor& d) {
    const Fan* fan = d.fan;
    if (!is_complete(*fan)) throw std::invalid_argument("ample_test requires a complete fan");
    int n = fan->rank();
    // m_sigma with <m_sigma, v_rho> = -a_rho on each maximal cone
    std::vector<std::vector<Rat>> ms;
    for (const auto& c : fan->max_cones()) {
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> b;
        for (int ri : c) {
            std::vector<Rat> row(n);
            for (int k = 0; k < n; ++k) row[k] = Rat(fan->ray(ri)[k]);
            a.push_back(row);
            b.push_back(Rat(-d.coeffs[ri]));
        }
        std::vector<Rat> m;
        if (!solve_rational(a, b, m)) return false;  // not even a Cartier support function
        ms.push_back(m);
    }
    // strict convexity across each wall: for adjacent cones sigma, sigma',
    // <m_sigma, v'> > -a_{v'} for the ray v' of sigma' opposite the wall
    for (size_t i = 0; i < fan->max_cones().size(); ++i)
        for (size_t j = 0; j < fan->max_cones().size(); ++j) {
            if (i == j) continue;
            const auto &ci = fan->max_cones()[i], &cj = fan->max_cones()[j];
            std::set<int> inter;
            std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(),
                                  std::inserter(inter, inter.begin()));
            if ((int)inter.size() != n - 1) continue;
            for (int rj : cj) {
                if (inter.count(rj)) continue;
                Rat val(0);
                for (int k = 0; k < n; ++k) val = val + ms[i][k] * Rat(fan->ray(rj)[k]);
                if (!(val > Rat(-d.coeffs[rj]))) return false;
            }
        }
    return true;
}

BottVanishingReport bott_vanishing_log(const ToricDivisor& ld) {
    BottVanishingReport rep;
    const Fan* fan = ld.fan;
    int n = fan->rank();
    rep.ample = ample_test(ld);
    if (!rep.ample)
        throw std::invalid_argument("bott_vanishing_log: divisor is not ample");
    // Omega^i(log D) is free of rank C(n,i) for the full toric boundary, so
    // H^j(Omega^i(log D) (x) L) = h^j(L)^(C(n,i)); only the log case is exact
    // here - Omega^i without log poles is out of scope for 0 < i < n.
    std::vector<int64_t> hj(n + 1);
    for (int j = 0; j <= n; ++j) hj[j] = cohomology(ld, j);
    std::vector<std::vector<int64_t>> binom(n + 1, std::vector<int64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    rep.h.assign(n + 1, std::vector<int64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            rep.h[i][j] = binom[n][i] * hj[j];
            if (j > 0 && rep.h[i][j] != 0) rep.all_vanish = false;
        }
    rep.note = "log cotangent sheaf of the toric pair is free; verdicts reduce to h^j(L)";
    return rep;
}

FlatnessReport section_ring_flatness(const Fan* fan, const std::vector<ToricDivisor>& ls,
                                     const std::vector<std::pair<int64_t, int64_t>>& window) {
    if (ls.empty() || window.size() != ls.size())
        throw std::invalid_argument("flatness: window arity must match divisor count");
    for (const auto& [lo, hi] : window)
        if (lo > hi) throw std::invalid_argument("flatness: empty window");
    FlatnessReport rep;
    std::vector<int64_t> lambda(ls.size());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == ls.size()) {
            ToricDivisor acc(fan, std::vector<int64_t>(fan->ray_count(), 0));
            for (size_t k = 0; k < ls.size(); ++k) acc = acc + ls[k].scaled(lambda[k]);
            int64_t h1 = cohomology(acc, 1);
            if (h1 != 0) {
                rep.criterion_holds = false;
                rep.violations.push_back({lambda, h1});
            }
            return;
        }
        for (int64_t v = window[i].first; v <= window[i].second; ++v) {
            lambda[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return rep;
}

} // namespace flift
