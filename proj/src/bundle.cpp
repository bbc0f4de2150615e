#include "flift/bundle.hpp"

#include "flift/gf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace flift {

LaurentTransitionMatrix::LaurentTransitionMatrix(const Field* F, int r_) : r(r_) {
    m.assign(r, std::vector<Laurent>(r, Laurent::zero(F)));
}

Laurent LaurentTransitionMatrix::det() const {
    // Laplace expansion; r <= 4 here
    std::function<Laurent(const std::vector<std::vector<Laurent>>&)> rec =
        [&](const std::vector<std::vector<Laurent>>& a) -> Laurent {
        size_t n = a.size();
        if (n == 1) return a[0][0];
        Laurent out = Laurent::zero(a[0][0].field());
        for (size_t c = 0; c < n; ++c) {
            if (a[0][c].is_zero()) continue;
            std::vector<std::vector<Laurent>> minor(n - 1);
            for (size_t rr = 1; rr < n; ++rr)
                for (size_t cc = 0; cc < n; ++cc)
                    if (cc != c) minor[rr - 1].push_back(a[rr][cc]);
            Laurent term = a[0][c] * rec(minor);
            out = (c % 2 == 0) ? out + term : out - term;
        }
        return out;
    };
    return rec(m);
}

bool LaurentTransitionMatrix::invertible() const {
    Laurent d = det();
    return !d.is_zero() && d.is_monomial();
}

int64_t SplittingType::sum() const {
    int64_t s = 0;
    for (int64_t x : a) s += x;
    return s;
}

namespace {

struct BirkhoffState {
    const Field* F;
    int r;
    std::vector<std::vector<Laurent>> w, u, v;   // invariant: w = u * w0 * v

    void row_axpy(int i, int j, const Laurent& q) {   // row_i += q * row_j
        for (int c = 0; c < r; ++c) {
            w[i][c] += q * w[j][c];
            u[i][c] += q * u[j][c];
        }
    }
    void row_swap(int i, int j) {
        std::swap(w[i], w[j]);
        std::swap(u[i], u[j]);
    }
    void row_scale(int i, int c) {
        for (int k = 0; k < r; ++k) {
            w[i][k] = w[i][k].scaled(c);
            u[i][k] = u[i][k].scaled(c);
        }
    }
    void col_axpy(int j, int i, const Laurent& q) {   // col_j += q * col_i
        for (int rr = 0; rr < r; ++rr) {
            w[rr][j] += q * w[rr][i];
            v[rr][j] += q * v[rr][i];
        }
    }
    void col_swap(int i, int j) {
        for (int rr = 0; rr < r; ++rr) {
            std::swap(w[rr][i], w[rr][j]);
            std::swap(v[rr][i], v[rr][j]);
        }
    }
};

Laurent mat_det(const Field* F, const std::vector<std::vector<Laurent>>& a) {
    LaurentTransitionMatrix t(F, (int)a.size());
    t.m = a;
    return t.det();
}

} // namespace

SplittingType splitting_type(const LaurentTransitionMatrix& mat) {
    const Field* F = mat.m.at(0).at(0).field();
    int r = mat.r;
    {
        Laurent d = mat.det();
        if (d.is_zero() || !d.is_monomial())
            throw std::invalid_argument("matrix is not invertible over the Laurent ring");
    }
    // shift to polynomial entries
    int64_t shift = 0;
    for (const auto& row : mat.m)
        for (const auto& e : row)
            if (!e.is_zero()) shift = std::min(shift, e.val());

    BirkhoffState st;
    st.F = F;
    st.r = r;
    st.w.assign(r, std::vector<Laurent>(r, Laurent::zero(F)));
    st.u = st.v = st.w;
    for (int i = 0; i < r; ++i) {
        st.u[i][i] = Laurent::constant(F, 1);
        st.v[i][i] = Laurent::constant(F, 1);
        for (int j = 0; j < r; ++j) st.w[i][j] = mat.m[i][j].shifted(-shift);
    }
    auto w0 = st.w;

    for (int round = 0; round < 500; ++round) {
        // 1. row Hermite form over k[t]: upper triangular, monic diagonal
        for (int c = 0; c < r; ++c) {
            while (true) {
                int piv = -1;
                for (int rr = c; rr < r; ++rr)
                    if (!st.w[rr][c].is_zero() &&
                        (piv < 0 || st.w[rr][c].deg() < st.w[piv][c].deg()))
                        piv = rr;
                if (piv < 0) throw std::logic_error("birkhoff: singular column");
                if (piv != c) st.row_swap(c, piv);
                bool again = false;
                for (int rr = c + 1; rr < r; ++rr) {
                    if (st.w[rr][c].is_zero()) continue;
                    auto [q, rem] = poly_divrem(st.w[rr][c], st.w[c][c]);
                    st.row_axpy(rr, c, -q);
                    if (!st.w[rr][c].is_zero()) again = true;
                }
                if (!again) break;
            }
            st.row_scale(c, F->inv(st.w[c][c].lead_coeff()));
        }
        for (int i = 0; i < r; ++i)
            if (!st.w[i][i].is_monomial())
                throw std::logic_error("birkhoff: non-monomial diagonal");

        // 2. clear off-diagonal entries: exponents <= d_i by column ops over
        // k[t^{-1}], exponents >= d_j by row ops over k[t]
        for (int pass = 0; pass < 200; ++pass) {
            bool changed = false;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    int64_t di = st.w[i][i].val(), dj = st.w[j][j].val();
                    Laurent lowq = Laurent::zero(F), highq = Laurent::zero(F);
                    for (const auto& [e, cf] : st.w[i][j].terms()) {
                        if (e <= di) lowq.set_coeff(e - di, cf);
                        else if (e >= dj) highq.set_coeff(e - dj, cf);
                    }
                    if (!lowq.is_zero()) {
                        st.col_axpy(j, i, -lowq);
                        changed = true;
                    }
                    if (!highq.is_zero()) {
                        st.row_axpy(i, j, -highq);
                        changed = true;
                    }
                }
            if (!changed) break;
            if (pass == 199) throw std::logic_error("birkhoff: clearing did not stabilize");
        }

        // 3. done, or 4. exchange a blocked pair and start over
        int bi = -1, bj = -1;
        for (int i = 0; i < r && bi < 0; ++i)
            for (int j = i + 1; j < r && bi < 0; ++j)
                if (!st.w[i][j].is_zero()) { bi = i; bj = j; }
        if (bi < 0) break;
        st.col_swap(bi, bj);
        if (round == 499) throw std::logic_error("birkhoff: did not terminate");
    }

    // certify: U in GL(k[t]), V in GL(k[t^{-1}]), U w0 V = diagonal
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (!st.u[i][j].is_polynomial())
                throw std::logic_error("birkhoff: U left k[t]");
            if (!st.v[i][j].is_antipolynomial())
                throw std::logic_error("birkhoff: V left k[t^{-1}]");
        }
    Laurent du = mat_det(F, st.u), dv = mat_det(F, st.v);
    if (du.is_zero() || !du.is_monomial() || du.val() != 0 ||
        dv.is_zero() || !dv.is_monomial() || dv.val() != 0)
        throw std::logic_error("birkhoff: transformation is not a unit");
    // recompute U * w0 * V
    auto matmul = [&](const std::vector<std::vector<Laurent>>& a,
                      const std::vector<std::vector<Laurent>>& b) {
        std::vector<std::vector<Laurent>> c(r, std::vector<Laurent>(r, Laurent::zero(F)));
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                for (int j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    auto check = matmul(matmul(st.u, w0), st.v);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (check[i][j] != st.w[i][j])
                throw std::logic_error("birkhoff: certification failed");

    SplittingType t;
    for (int i = 0; i < r; ++i) t.a.push_back(st.w[i][i].val() + shift);
    std::sort(t.a.rbegin(), t.a.rend());
    return t;
}

bool nef_obstruction(const SplittingType& t, int) { return t.max() <= 0; }

namespace {

RatFunc subst_rat(const Poly& f, const RatFunc& x, const RatFunc& y) {
    const Field* F = f.field();
    RatFunc acc = RatFunc::constant(F, 0);
    for (const auto& [e, c] : f.terms()) {
        RatFunc t = RatFunc::constant(F, c);
        for (int64_t i = 0; i < e[0]; ++i) t = t * x;
        for (int64_t i = 0; i < e[1]; ++i) t = t * y;
        acc = acc + t;
    }
    return acc;
}

// f(1, t) for homogeneous f in (T0, T1)
Laurent dehomog_t(const Poly& f) {
    const Field* F = f.field();
    Laurent out = Laurent::zero(F);
    for (const auto& [e, c] : f.terms()) out.set_coeff(e[1], F->add(out.coeff(e[1]), c));
    return out;
}

struct FrameVec {
    RatFunc da, db;   // coordinates in (d alpha, d beta) along the curve
};

RatFunc det2(const FrameVec& r1, const FrameVec& r2) {
    return r1.da * r2.db - r1.db * r2.da;
}

} // namespace

LaurentTransitionMatrix restrict_log_cotangent(const std::vector<Poly>& divisor_components,
                                               const CurveInP2& curve) {
    const Field* F = curve.F;
    if (curve.phi.size() != 3) throw std::invalid_argument("curve needs three forms");
    for (const auto& f : curve.phi) {
        int64_t d;
        if (f.nvars() != 2 || !f.is_homogeneous(&d) || (d != -1 && d != curve.degree))
            throw std::invalid_argument("curve forms must be homogeneous of the stated degree");
    }
    Laurent p0 = dehomog_t(curve.phi[0]), p1 = dehomog_t(curve.phi[1]);
    if (p0.is_zero() || !p0.is_monomial() || p0.val() != 0)
        throw std::invalid_argument("charts fail to cover: phi_0(1,t) must be a nonzero constant");
    if (p1.is_zero() || p1.deg() != curve.degree)
        throw std::invalid_argument("charts fail to cover: phi_1(1,t) must have full degree");

    RatFunc x(dehomog_t(curve.phi[1]), p0);
    RatFunc y(dehomog_t(curve.phi[2]), p0);

    // which components constrain which chart's frame:
    //   chart 0 covers all finite t; a component matters there when it meets
    //   the curve at finite t.  chart 1 covers t != 0 (including infinity);
    //   a component matters when it meets the curve there at a point with
    //   phi_1 != 0 (otherwise the point is not in chart 1 at all).
    struct CompInfo {
        Poly h;             // the homogeneous component
        int64_t deg;
        RatFunc value;      // h(1, x(t), y(t))
        RatFunc da, db;     // dlog h in chart-0 coordinates
        bool needed0, needed1;
    };
    std::vector<CompInfo> comps;
    for (const auto& H : divisor_components) {
        int64_t hd;
        if (H.nvars() != 3 || !H.is_homogeneous(&hd) || H.is_zero())
            throw std::invalid_argument("divisor components must be nonzero homogeneous forms");
        CompInfo ci;
        ci.h = H;
        ci.deg = hd;
        // H(phi) as a univariate polynomial in t
        std::vector<Poly> sub = {curve.phi[0], curve.phi[1], curve.phi[2]};
        Poly pullback = H.substitute(sub);
        if (pullback.is_zero())
            throw std::invalid_argument("curve is contained in a divisor component");
        Laurent g = dehomog_t(pullback);
        // chart 0: any finite root, i.e. g is nonconstant
        ci.needed0 = !(g.deg() == 0);
        // chart 1: a root at infinity (deg drop) or a root t != 0 away from phi_1 = 0
        bool at_infinity = g.deg() < curve.degree * hd;
        Laurent g1 = g.shifted(-g.val());   // strip roots at t = 0
        Laurent p1poly = p1;
        // saturate away roots shared with phi_1 (those points are not in chart 1)
        while (true) {
            if (g1.deg() == 0) break;
            Laurent c = poly_gcd(g1, p1poly);
            if (c.deg() == 0) break;
            g1 = poly_divrem(g1, c).first;
        }
        ci.needed1 = at_infinity || g1.deg() > 0;

        Poly h0(F, 2);   // H(1, a, b)
        {
            std::vector<Poly> s0 = {Poly::constant(F, 2, 1), Poly::variable(F, 2, 0),
                                    Poly::variable(F, 2, 1)};
            h0 = H.substitute(s0);
        }
        RatFunc hv = subst_rat(h0, x, y);
        RatFunc hda = subst_rat(h0.derivative(0), x, y);
        RatFunc hdb = subst_rat(h0.derivative(1), x, y);
        ci.value = hv;
        ci.da = hda / hv;
        ci.db = hdb / hv;
        comps.push_back(ci);
    }

    RatFunc one = RatFunc::constant(F, 1), zero = RatFunc::constant(F, 0);
    RatFunc xinv2 = one / (x * x);

    auto build_frame = [&](int chart) -> std::vector<FrameVec> {
        std::vector<FrameVec> logs;
        for (const auto& ci : comps) {
            bool needed = chart == 0 ? ci.needed0 : ci.needed1;
            if (!needed) continue;
            FrameVec fv;
            if (chart == 0) {
                fv = {ci.da, ci.db};
            } else {
                // dlog h^(1) = dlog h^(0) - deg * dlog alpha
                fv = {ci.da - RatFunc::constant(F, F->from_int(ci.deg)) / x, ci.db};
            }
            logs.push_back(fv);
        }
        if (logs.size() > 2)
            throw std::invalid_argument("cannot frame the log cotangent sheaf: chart meets "
                                        "more than two divisor components along the curve");
        std::vector<FrameVec> completions;
        if (chart == 0) {
            completions = {{one, zero}, {zero, one}};              // d alpha, d beta
        } else {
            completions = {{-xinv2, zero}, {-(y * xinv2), one / x}};  // ds, dw
        }
        // frame = [completions..., dlogs...], completions chosen to keep it a frame
        std::vector<FrameVec> frame;
        size_t need = 2 - logs.size();
        for (size_t pick = 0; pick < completions.size() && frame.size() < need; ++pick) {
            std::vector<FrameVec> trial = frame;
            trial.push_back(completions[pick]);
            // check independence together with the logs
            if (trial.size() + logs.size() == 2) {
                std::vector<FrameVec> full = trial;
                full.insert(full.end(), logs.begin(), logs.end());
                if (det2(full[0], full[1]).is_zero()) continue;
            }
            frame = trial;
        }
        if (frame.size() < need)
            throw std::invalid_argument("could not complete a frame on a chart");
        frame.insert(frame.end(), logs.begin(), logs.end());
        return frame;
    };

    auto f0 = build_frame(0), f1 = build_frame(1);
    // T = A1 * A0^{-1}: rows express the chart-1 frame in the chart-0 frame
    RatFunc d0 = det2(f0[0], f0[1]);
    if (d0.is_zero()) throw std::invalid_argument("chart-0 frame is degenerate");
    // A0^{-1} = 1/d0 * [[f0[1].db, -f0[0].db], [-f0[1].da, f0[0].da]]
    RatFunc inv00 = f0[1].db / d0, inv01 = -f0[0].db / d0;
    RatFunc inv10 = -f0[1].da / d0, inv11 = f0[0].da / d0;

    LaurentTransitionMatrix out(F, 2);
    for (int i = 0; i < 2; ++i) {
        RatFunc t0 = f1[i].da * inv00 + f1[i].db * inv10;
        RatFunc t1 = f1[i].da * inv01 + f1[i].db * inv11;
        out.m[i][0] = t0.as_laurent();
        out.m[i][1] = t1.as_laurent();
    }
    if (!out.invertible())
        throw std::invalid_argument("restriction transition matrix is not invertible");
    return out;
}

SemilinearMap::SemilinearMap(const Field* F_, std::vector<std::vector<int>> a_)
    : F(F_), r((int)a_.size()), a(std::move(a_)) {
    for (const auto& row : a)
        if ((int)row.size() != r) throw std::invalid_argument("semilinear map must be square");
}

bool SemilinearMap::invertible() const {
    // Gaussian elimination over F_q
    auto m = a;
    int n = r;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int rr = c; rr < n; ++rr)
            if (m[rr][c]) { piv = rr; break; }
        if (piv < 0) return false;
        std::swap(m[c], m[piv]);
        int inv = F->inv(m[c][c]);
        for (int rr = 0; rr < n; ++rr) {
            if (rr == c || !m[rr][c]) continue;
            int f = F->mul(m[rr][c], inv);
            for (int cc = 0; cc < n; ++cc)
                m[rr][cc] = F->sub(m[rr][cc], F->mul(f, m[c][cc]));
        }
    }
    return true;
}

SemilinearMap SemilinearMap::transposed() const {
    std::vector<std::vector<int>> t(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) t[i][j] = a[j][i];
    return SemilinearMap(F, t);
}

FixedPointCount semilinear_fixed_points(const SemilinearMap& sm, int m) {
    const Field* F = sm.F;
    ExtField E(F, m);
    int k = E.fp_dim();
    int dim = sm.r * k;
    int p = F->p();

    // columns: images of the F_p-basis under v -> v - A v^{[p]}
    std::vector<std::vector<int>> mat(dim, std::vector<int>(dim, 0));
    for (int comp = 0; comp < sm.r; ++comp)
        for (int bi = 0; bi < k; ++bi) {
            std::vector<ExtField::Elt> v(sm.r, E.zero());
            v[comp] = E.fp_basis(bi);
            // w = v - A v^{[p]}
            std::vector<ExtField::Elt> w(sm.r, E.zero());
            for (int i = 0; i < sm.r; ++i) {
                ExtField::Elt acc = E.zero();
                for (int j = 0; j < sm.r; ++j) {
                    if (!sm.a[i][j]) continue;
                    acc = E.add(acc, E.mul_base(E.frobenius(v[j]), sm.a[i][j]));
                }
                w[i] = E.sub(v[i], acc);
            }
            int col = comp * k + bi;
            for (int i = 0; i < sm.r; ++i) {
                auto coords = E.fp_coords(w[i]);
                for (int t = 0; t < k; ++t) mat[i * k + t][col] = coords[t];
            }
        }

    // kernel over F_p
    std::vector<int> pivot_of_col(dim, -1);
    int rank = 0;
    for (int c = 0; c < dim && rank < dim; ++c) {
        int piv = -1;
        for (int rr = rank; rr < dim; ++rr)
            if (mat[rr][c]) { piv = rr; break; }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        int inv = 1;
        { // inverse mod p
            int a0 = mat[rank][c];
            for (int t = 1; t < p; ++t)
                if ((a0 * t) % p == 1) { inv = t; break; }
        }
        for (int cc = 0; cc < dim; ++cc) mat[rank][cc] = (mat[rank][cc] * inv) % p;
        for (int rr = 0; rr < dim; ++rr) {
            if (rr == rank || !mat[rr][c]) continue;
            int f = mat[rr][c];
            for (int cc = 0; cc < dim; ++cc)
                mat[rr][cc] = ((mat[rr][cc] - f * mat[rank][cc]) % p + p) % p;
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    FixedPointCount out;
    out.dim = dim - rank;
    out.count = 1;
    for (int i = 0; i < out.dim; ++i) out.count *= p;

    // kernel basis: free columns
    for (int c = 0; c < dim; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<int> vec(dim, 0);
        vec[c] = 1;
        for (int cc = 0; cc < dim; ++cc) {
            if (pivot_of_col[cc] < 0) continue;
            vec[cc] = ((-mat[pivot_of_col[cc]][c]) % p + p) % p;
        }
        // repack as r components of ExtField elements
        std::vector<std::vector<int>> elt(sm.r);
        for (int comp = 0; comp < sm.r; ++comp) {
            ExtField::Elt acc = E.zero();
            for (int bi = 0; bi < k; ++bi)
                if (vec[comp * k + bi])
                    acc = E.add(acc, E.mul_base(E.fp_basis(bi), F->from_int(vec[comp * k + bi])));
            elt[comp] = acc;
        }
        out.basis.push_back(elt);
    }
    return out;
}

StabilizedCount stabilized_fixed_points(const SemilinearMap& sm, int cap) {
    const Field* F = sm.F;
    StabilizedCount out{0, 0, false};
    auto matmul = [&](const std::vector<std::vector<int>>& a,
                      const std::vector<std::vector<int>>& b) {
        std::vector<std::vector<int>> c(sm.r, std::vector<int>(sm.r, 0));
        for (int i = 0; i < sm.r; ++i)
            for (int k = 0; k < sm.r; ++k)
                for (int j = 0; j < sm.r; ++j)
                    c[i][j] = F->add(c[i][j], F->mul(a[i][k], b[k][j]));
        return c;
    };
    auto rank_of = [&](std::vector<std::vector<int>> m) {
        int rank = 0, n = sm.r;
        for (int c = 0, rr = 0; c < n && rr < n; ++c) {
            int piv = -1;
            for (int i = rr; i < n; ++i)
                if (m[i][c]) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(m[rr], m[piv]);
            int inv = F->inv(m[rr][c]);
            for (int i = 0; i < n; ++i) {
                if (i == rr || !m[i][c]) continue;
                int f = F->mul(m[i][c], inv);
                for (int j = 0; j < n; ++j) m[i][j] = F->sub(m[i][j], F->mul(f, m[rr][j]));
            }
            ++rr;
            ++rank;
        }
        return rank;
    };
    if (sm.invertible()) {
        // A_e = A A^[p] ... A^[p^(e-1)]: on the p^r geometric solutions the
        // arithmetic Frobenius acts through A_e^{-1}, so the splitting degree
        // is the multiplicative order of A_e in GL_r(F_q)
        int e = F->m();
        auto ae = sm.a;
        {
            auto cur = sm.a;
            for (int i = 1; i < e; ++i) {
                for (auto& row : cur)
                    for (auto& x : row) x = F->frobenius(x);
                ae = matmul(ae, cur);
            }
        }
        std::vector<std::vector<int>> id(sm.r, std::vector<int>(sm.r, 0));
        for (int i = 0; i < sm.r; ++i) id[i][i] = 1;
        auto pow = ae;
        int d = 1;
        while (pow != id && d <= cap) {
            pow = matmul(pow, ae);
            ++d;
        }
        if (pow != id) {
            out.cap_hit = true;
            d = cap;
        }
        out.field_degree = d;
        out.count = semilinear_fixed_points(sm, d).count;
        return out;
    }
    // Singular map: the geometric solution set is an F_p-space of dimension
    // equal to the stable rank of the twisted powers A A^[p] ... A^[p^(k-1)]
    // (it drops at most r times).  Scan extension degrees until the count
    // reaches that target.
    int target_dim;
    {
        auto ak = sm.a;
        auto twist = sm.a;
        int rank = rank_of(ak);
        for (int k = 1; k <= sm.r + 1; ++k) {
            for (auto& row : twist)
                for (auto& x : row) x = F->frobenius(x);
            ak = matmul(ak, twist);
            int nr = rank_of(ak);
            if (nr == rank) break;
            rank = nr;
        }
        target_dim = rank;
    }
    int64_t target = 1;
    for (int i = 0; i < target_dim; ++i) target *= F->p();
    for (int m = 1; m <= cap; ++m) {
        int64_t c = semilinear_fixed_points(sm, m).count;
        if (c == target) {
            out.count = c;
            out.field_degree = m;
            return out;
        }
        out.count = c;
        out.field_degree = m;
    }
    out.cap_hit = true;
    return out;
}

EtaleCheckReport etale_fixed_scheme_check(const std::vector<std::vector<Poly>>& xi_matrix,
                                          const std::vector<std::vector<int>>& sample_points) {
    int r = (int)xi_matrix.size();
    if (r == 0) throw std::invalid_argument("empty matrix");
    const Field* F = xi_matrix[0][0].field();
    int nx = xi_matrix[0][0].nvars();
    for (const auto& row : xi_matrix)
        if ((int)row.size() != r) throw std::invalid_argument("matrix must be square");

    // variables: x_0..x_{nx-1}, f_0..f_{r-1}
    int total = nx + r;
    auto widen = [&](const Poly& f) {
        std::vector<Poly> sub;
        for (int i = 0; i < nx; ++i) sub.push_back(Poly::variable(F, total, i));
        return f.substitute(sub);
    };
    EtaleCheckReport rep;
    rep.jacobian_is_identity = true;
    int p = F->p();
    for (int i = 0; i < r; ++i) {
        // S_i = f_i - sum_k f_k^p A_{ki}(x)
        Poly s = Poly::variable(F, total, nx + i);
        for (int k = 0; k < r; ++k)
            s -= Poly::variable(F, total, nx + k).pow(p) * widen(xi_matrix[k][i]);
        for (int j = 0; j < r; ++j) {
            Poly d = s.derivative(nx + j);
            Poly expect = (i == j) ? Poly::constant(F, total, 1) : Poly::zero(F, total);
            if (d != expect) rep.jacobian_is_identity = false;
        }
    }
    for (const auto& pt : sample_points) {
        if ((int)pt.size() != nx) throw std::invalid_argument("sample point arity mismatch");
        std::vector<std::vector<int>> a(r, std::vector<int>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) a[i][j] = xi_matrix[i][j].eval(pt);
        SemilinearMap sm(F, a);
        SemilinearMap smt = sm.transposed();
        EtaleCheckReport::Sample s;
        s.point = pt;
        s.det_nonzero = sm.invertible();
        s.fiber_count = stabilized_fixed_points(smt).count;
        rep.samples.push_back(s);
    }
    return rep;
}

} // namespace flift
