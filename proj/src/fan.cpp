#include "flift/fan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace flift {

namespace {

// all subsets of a cone index set (the faces of a simplicial cone)
void add_faces(std::set<std::set<int>>& out, const std::set<int>& cone) {
    std::vector<int> v(cone.begin(), cone.end());
    size_t n = v.size();
    for (size_t mask = 0; mask < (1u << n); ++mask) {
        std::set<int> f;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) f.insert(v[i]);
        out.insert(f);
    }
}

} // namespace

Fan::Fan(int rank, std::vector<ZVec> rays, std::vector<std::set<int>> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    for (const auto& c : max_cones_) add_faces(cones_, c);
    validate();
}

void Fan::validate() const {
    if (rank_ < 1 || rank_ > 3)
        throw std::invalid_argument("fan rank must be between 1 and 3");
    for (const auto& r : rays_) {
        if ((int)r.size() != rank_) throw std::invalid_argument("ray dimension mismatch");
        if (vec_gcd(r) != 1) throw std::invalid_argument("ray is not primitive");
    }
    for (size_t i = 0; i < rays_.size(); ++i)
        for (size_t j = i + 1; j < rays_.size(); ++j)
            if (rays_[i] == rays_[j]) throw std::invalid_argument("duplicate ray");
    for (const auto& c : max_cones_) {
        if (c.empty()) throw std::invalid_argument("empty maximal cone");
        ZMat m;
        for (int i : c) {
            if (i < 0 || i >= (int)rays_.size())
                throw std::invalid_argument("cone ray index out of range");
            m.push_back(rays_[i]);
        }
        if (zmat_rank(m) != (int)c.size())
            throw std::invalid_argument("cone is not simplicial (dependent rays)");
    }
    // rank-2 fans: sectors must tile without overlap wherever two
    // 2-dimensional cones meet, i.e. no ray interior to another cone
    for (const auto& c : max_cones_) {
        for (int i = 0; i < (int)rays_.size(); ++i) {
            if (c.count(i)) continue;
            if (cone_contains(c, rays_[i]))
                throw std::invalid_argument("ray lies inside another cone");
        }
    }
}

bool Fan::cone_contains(const std::set<int>& c, const ZVec& v) const {
    // v = sum lambda_i u_i with lambda_i >= 0, solved exactly
    std::vector<std::vector<Rat>> a(rank_, std::vector<Rat>(c.size()));
    std::vector<Rat> b(rank_);
    int col = 0;
    for (int i : c) {
        for (int r = 0; r < rank_; ++r) a[r][col] = Rat(rays_[i][r]);
        ++col;
    }
    for (int r = 0; r < rank_; ++r) b[r] = Rat(v[r]);
    std::vector<Rat> x;
    if (!solve_rational(a, b, x)) return false;
    for (const auto& lam : x)
        if (lam < Rat(0)) return false;
    // simplicial cones: solution is unique when consistent, but verify exactly
    for (int r = 0; r < rank_; ++r) {
        Rat s(0);
        for (size_t k = 0; k < x.size(); ++k) s = s + a[r][k] * x[k];
        if (s != b[r]) return false;
    }
    return true;
}

std::optional<int> Fan::containing_max_cone(const ZVec& v) const {
    for (size_t i = 0; i < max_cones_.size(); ++i)
        if (cone_contains(max_cones_[i], v)) return (int)i;
    return std::nullopt;
}

int Fan::ray_index(const ZVec& v) const {
    for (size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i] == v) return (int)i;
    return -1;
}

Fan Fan::projective_space(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("projective_space: 1 <= n <= 3");
    std::vector<ZVec> rays;
    for (int i = 0; i < n; ++i) {
        ZVec e(n, 0);
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(ZVec(n, -1));
    std::vector<std::set<int>> cones;
    for (int omit = 0; omit <= n; ++omit) {
        std::set<int> c;
        for (int i = 0; i <= n; ++i)
            if (i != omit) c.insert(i);
        cones.push_back(c);
    }
    return Fan(n, rays, cones);
}

Fan Fan::hirzebruch(int n) {
    if (n < 0) throw std::invalid_argument("hirzebruch: n >= 0");
    // rays: e1 (fiber), e2 (negative section C), -e1 + n e2 (fiber), -e2
    std::vector<ZVec> rays = {{1, 0}, {0, 1}, {-1, n}, {0, -1}};
    std::vector<std::set<int>> cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return Fan(2, rays, cones);
}

Fan Fan::product_p1(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("product_p1: 1 <= k <= 3");
    std::vector<ZVec> rays;
    for (int i = 0; i < k; ++i) {
        ZVec e(k, 0);
        e[i] = 1;
        rays.push_back(e);
        e[i] = -1;
        rays.push_back(e);
    }
    // maximal cones: one sign choice per factor
    std::vector<std::set<int>> cones;
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::set<int> c;
        for (int i = 0; i < k; ++i) c.insert(2 * i + ((mask >> i) & 1));
        cones.push_back(c);
    }
    return Fan(k, rays, cones);
}

Fan Fan::affine_line() { return Fan(1, {{1}}, {{0}}); }

Fan Fan::del_pezzo(int blowups) {
    if (blowups < 0 || blowups > 3) throw std::invalid_argument("del_pezzo: 0 <= k <= 3");
    Fan f = projective_space(2);
    // successively subdivide the torus-fixed corners of the original triangle
    std::vector<std::set<int>> corners = {{0, 1}, {1, 2}, {0, 2}};
    for (int k = 0; k < blowups; ++k) f = star_subdivision(f, corners[k]);
    return f;
}

bool is_smooth_cone(const Fan& fan, const std::set<int>& cone) {
    ZMat m;
    for (int i : cone) m.push_back(fan.ray(i));
    if (m.empty()) return true;
    auto divs = smith_divisors(m);
    if (divs.size() != cone.size()) return false;  // dependent rays
    for (int64_t d : divs)
        if (d != 1) return false;
    return true;
}

bool is_smooth(const Fan& fan) {
    for (const auto& c : fan.max_cones())
        if (!is_smooth_cone(fan, c)) return false;
    return true;
}

std::vector<int> cyclic_ray_order(const std::vector<ZVec>& rays) {
    // exact angular sort: half-plane class first, cross products inside
    auto half = [](const ZVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    std::vector<int> idx(rays.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int ha = half(rays[a]), hb = half(rays[b]);
        if (ha != hb) return ha < hb;
        int64_t cross = rays[a][0] * rays[b][1] - rays[a][1] * rays[b][0];
        return cross > 0;
    });
    return idx;
}

bool is_complete(const Fan& fan) {
    int n = fan.rank();
    if (fan.max_cones().empty()) return false;
    if (n == 1) {
        return fan.ray_index({1}) >= 0 && fan.ray_index({-1}) >= 0;
    }
    for (const auto& c : fan.max_cones())
        if ((int)c.size() != n) return false;
    if (n == 2) {
        // sectors between cyclically consecutive rays must each be a cone
        auto order = cyclic_ray_order(fan.rays());
        size_t r = order.size();
        if (r < 3) return false;
        for (size_t i = 0; i < r; ++i) {
            std::set<int> sector = {order[i], order[(i + 1) % r]};
            if (!fan.has_cone(sector)) return false;
        }
        return fan.max_cones().size() == r;
    }
    // n = 3: every facet shared by exactly two maximal cones, plus connectivity
    std::map<std::set<int>, int> facet_count;
    for (const auto& c : fan.max_cones())
        for (int omit : c) {
            std::set<int> f = c;
            f.erase(omit);
            facet_count[f]++;
        }
    for (const auto& [f, cnt] : facet_count)
        if (cnt != 2) return false;
    // connectivity across facets
    size_t m = fan.max_cones().size();
    std::vector<bool> seen(m, false);
    std::vector<size_t> stack = {0};
    seen[0] = true;
    size_t visited = 1;
    while (!stack.empty()) {
        size_t cur = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < m; ++j) {
            if (seen[j]) continue;
            std::set<int> inter;
            std::set_intersection(fan.max_cones()[cur].begin(), fan.max_cones()[cur].end(),
                                  fan.max_cones()[j].begin(), fan.max_cones()[j].end(),
                                  std::inserter(inter, inter.begin()));
            if ((int)inter.size() == fan.rank() - 1) {
                seen[j] = true;
                ++visited;
                stack.push_back(j);
            }
        }
    }
    return visited == m;
}

Fan star_subdivision(const Fan& fan, const std::set<int>& cone) {
    if (!fan.has_cone(cone) || cone.empty())
        throw std::invalid_argument("star subdivision: not a cone of the fan");
    if (!is_smooth_cone(fan, cone))
        throw std::invalid_argument("star subdivision: cone is not smooth");
    ZVec bary(fan.rank(), 0);
    for (int i : cone)
        for (int r = 0; r < fan.rank(); ++r) bary[r] += fan.ray(i)[r];
    std::vector<ZVec> rays = fan.rays();
    int new_idx = (int)rays.size();
    rays.push_back(primitive(bary));
    std::vector<std::set<int>> cones;
    for (const auto& mc : fan.max_cones()) {
        bool contains = std::includes(mc.begin(), mc.end(), cone.begin(), cone.end());
        if (!contains) {
            cones.push_back(mc);
            continue;
        }
        for (int omit : cone) {
            std::set<int> nc = mc;
            nc.erase(omit);
            nc.insert(new_idx);
            cones.push_back(nc);
        }
    }
    return Fan(fan.rank(), rays, cones);
}

namespace {

// integer inverse of a unimodular matrix via adjugate
ZMat unimodular_inverse(const ZMat& m) {
    int64_t det = zmat_det(m);
    if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
    size_t n = m.size();
    ZMat inv(n, ZVec(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            ZMat minor;
            for (size_t i = 0; i < n; ++i) {
                if (i == c) continue;
                ZVec row;
                for (size_t j = 0; j < n; ++j)
                    if (j != r) row.push_back(m[i][j]);
                minor.push_back(row);
            }
            int64_t cof = zmat_det(minor);
            if ((r + c) % 2) cof = -cof;
            inv[r][c] = cof * det;  // det = 1/det for unimodular
        }
    return inv;
}

ZVec mat_apply(const ZMat& m, const ZVec& v) {
    ZVec out(m.size(), 0);
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

ZMat mat_mul(const ZMat& a, const ZMat& b) {
    size_t n = a.size();
    ZMat c(n, ZVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// matrices mapping fan a onto fan b (rays to rays, cones to cones)
std::vector<ZMat> fan_maps(const Fan& a, const Fan& b) {
    std::vector<ZMat> out;
    if (a.rank() != b.rank() || a.ray_count() != b.ray_count() ||
        a.max_cones().size() != b.max_cones().size())
        return out;
    int n = a.rank();
    // pick a smooth full-dimensional source cone as a basis
    const std::set<int>* base = nullptr;
    for (const auto& c : a.max_cones())
        if ((int)c.size() == n && is_smooth_cone(a, c)) { base = &c; break; }
    if (!base) throw std::invalid_argument("fan symmetry search needs a smooth maximal cone");
    std::vector<int> base_rays(base->begin(), base->end());
    ZMat U;  // columns = base rays
    U.assign(n, ZVec(n));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) U[r][c] = a.ray(base_rays[c])[r];
    ZMat Uinv = unimodular_inverse(U);

    // candidates: ordered ray tuples of target maximal cones
    for (const auto& tc : b.max_cones()) {
        if ((int)tc.size() != n) continue;
        std::vector<int> t(tc.begin(), tc.end());
        std::sort(t.begin(), t.end());
        do {
            ZMat W(n, ZVec(n));
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < n; ++r) W[r][c] = b.ray(t[c])[r];
            ZMat M = mat_mul(W, Uinv);
            int64_t det = zmat_det(M);
            if (det != 1 && det != -1) continue;
            // rays must map bijectively onto rays
            std::vector<int> image(a.ray_count(), -1);
            bool ok = true;
            for (int i = 0; i < a.ray_count() && ok; ++i) {
                int j = b.ray_index(mat_apply(M, a.ray(i)));
                if (j < 0) ok = false;
                else image[i] = j;
            }
            if (!ok) continue;
            std::vector<bool> hit(a.ray_count(), false);
            for (int j : image) {
                if (hit[j]) { ok = false; break; }
                hit[j] = true;
            }
            if (!ok) continue;
            // cones must map onto cones
            for (const auto& c : a.cones()) {
                std::set<int> ic;
                for (int i : c) ic.insert(image[i]);
                if (!b.has_cone(ic)) { ok = false; break; }
            }
            if (ok) out.push_back(M);
        } while (std::next_permutation(t.begin(), t.end()));
    }
    return out;
}

} // namespace

FanAutomorphismGroup fan_automorphisms(const Fan& fan) {
    if (!is_complete(fan)) throw std::invalid_argument("fan_automorphisms requires a complete fan");
    FanAutomorphismGroup g;
    g.matrices = fan_maps(fan, fan);
    return g;
}

std::optional<ZMat> fan_isomorphism(const Fan& a, const Fan& b) {
    auto maps = fan_maps(a, b);
    if (maps.empty()) return std::nullopt;
    return maps.front();
}

MultiplicationByPWitness multiplication_by_p_witness(const Fan& fan, const Field* F) {
    MultiplicationByPWitness w;
    w.p = F->p();
    w.cones_preserved = true;
    for (const auto& c : fan.cones()) {
        if (c.empty()) continue;
        ZVec sum(fan.rank(), 0);
        for (int i : c) {
            ZVec pv = fan.ray(i);
            for (auto& x : pv) x *= F->p();
            if (!fan.cone_contains(c, pv)) w.cones_preserved = false;
            for (int r = 0; r < fan.rank(); ++r) sum[r] += pv[r];
        }
        if (!fan.cone_contains(c, sum)) w.cones_preserved = false;
    }
    for (const auto& c : fan.max_cones())
        w.charts.push_back(FrobeniusLiftChart::standard(F, (int)c.size()));
    w.monomial_action = "x^m -> x^{" + std::to_string(F->p()) + "m}";
    return w;
}

SurfaceIntersections toric_surface_intersections(const Fan& fan) {
    if (fan.rank() != 2) throw std::invalid_argument("intersection theory: surface fans only");
    if (!is_smooth(fan) || !is_complete(fan))
        throw std::invalid_argument("intersection theory requires a smooth complete fan");
    int r = fan.ray_count();
    SurfaceIntersections si;
    si.cyclic_order = cyclic_ray_order(fan.rays());
    std::vector<int> pos(r);
    for (int i = 0; i < r; ++i) pos[si.cyclic_order[i]] = i;
    si.pairing.assign(r, std::vector<Rat>(r, Rat(0)));
    for (int i = 0; i < r; ++i) {
        int prev = si.cyclic_order[(pos[i] + r - 1) % r];
        int next = si.cyclic_order[(pos[i] + 1) % r];
        // wheel relation v_prev + v_next = b * v_i
        const ZVec &vp = fan.ray(prev), &vn = fan.ray(next), &vi = fan.ray(i);
        int64_t b;
        if (vi[0] != 0) b = (vp[0] + vn[0]) / vi[0];
        else b = (vp[1] + vn[1]) / vi[1];
        for (int k = 0; k < 2; ++k)
            if (vp[k] + vn[k] != b * vi[k])
                throw std::logic_error("wheel relation failed (fan not smooth/complete?)");
        si.pairing[i][i] = Rat(-b);
        si.pairing[i][prev] = Rat(1);
        si.pairing[i][next] = Rat(1);
    }
    return si;
}

Rat SurfaceIntersections::pair(const std::vector<Rat>& d1, const std::vector<Rat>& d2) const {
    size_t r = pairing.size();
    if (d1.size() != r || d2.size() != r)
        throw std::invalid_argument("divisor coefficient count mismatch");
    Rat s(0);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) s = s + d1[i] * pairing[i][j] * d2[j];
    return s;
}

} // namespace flift
