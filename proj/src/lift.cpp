#include "flift/lift.hpp"

#include <stdexcept>

namespace flift {

FrobeniusLiftChart::FrobeniusLiftChart(const Field* F, std::vector<Poly> images)
    : F_(F), n_((int)images.size()), images_(std::move(images)) {
    for (const auto& f : images_)
        if (f.field() != F_ || f.nvars() != n_)
            throw std::invalid_argument("chart images must be n polynomials in n variables");
}

FrobeniusLiftChart FrobeniusLiftChart::standard(const Field* F, int n) {
    return FrobeniusLiftChart(F, std::vector<Poly>(n, Poly::zero(F, n)));
}

W2Polynomial FrobeniusLiftChart::frobenius_pullback(const W2Polynomial& g) const {
    if (g.field() != F_ || g.nvars() != n_)
        throw std::invalid_argument("polynomial not on this chart");
    std::vector<W2Polynomial> imgs;
    imgs.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        W2Polynomial xi = W2Polynomial::variable(F_, n_, i).pow(F_->p());
        imgs.push_back(xi + W2Polynomial::lift(images_[i]).times_p());
    }
    return g.coeff_sigma().substitute(imgs);
}

Poly FrobeniusLiftChart::delta_of_lift(const W2Polynomial& g) const {
    W2Polynomial diff = frobenius_pullback(g) - g.pow(F_->p());
    return diff.divide_p();
}

Poly FrobeniusLiftChart::delta(const Poly& g) const {
    if (g.field() != F_ || g.nvars() != n_)
        throw std::invalid_argument("polynomial not on this chart");
    return delta_of_lift(W2Polynomial::lift(g));
}

std::pair<Poly, Poly> FrobeniusLiftChart::nu_star(const W2Polynomial& g) const {
    return {g.reduce_mod_p(), delta_of_lift(g)};
}

W2Polynomial FrobeniusLiftChart::theta_star(const Poly& g0, const Poly& g1) {
    return W2Polynomial::lift(g0).pow(g0.field()->p()) + W2Polynomial::lift(g1).times_p();
}

LogForm FrobeniusLiftChart::xi(const LogForm& omega) const {
    if (omega.field() != F_ || omega.nvars() != n_)
        throw std::invalid_argument("form not on this chart");
    if (omega.degree() != 1)
        throw std::invalid_argument("xi acts on 1-forms");
    const auto& marked = omega.marked();
    int p = F_->p();

    // xi on basis covectors; marked coordinates need a compatible divisor
    std::vector<LogForm> basis_images;
    basis_images.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        if (marked.count(i)) {
            Poly xp = Poly::variable(F_, n_, i).pow(p);
            Poly v;
            if (!images_[i].divisible_by(xp, &v))
                throw std::domain_error("marked coordinate " + std::to_string(i) +
                                        " is not compatible with the lifting");
            // xi(dlog x_i) = dlog x_i + d(f_i / x_i^p)
            LogForm im = LogForm::term(F_, n_, {i}, Poly::constant(F_, n_, 1), marked);
            basis_images.push_back(im + LogForm::d_of(v, marked));
        } else {
            // xi(dx_i) = x_i^{p-1} dx_i + df_i
            Poly xp1 = Poly::variable(F_, n_, i).pow(p - 1);
            LogForm im = LogForm::term(F_, n_, {i}, xp1, marked);
            basis_images.push_back(im + LogForm::d_of(images_[i], marked));
        }
    }

    LogForm out = LogForm::zero(F_, n_, 1, marked);
    for (const auto& [idx, g] : omega.components())
        out = out + basis_images[idx[0]].scaled(g.frobenius());
    return out;
}

ThetaNuRoundtrip theta_nu_roundtrip(const FrobeniusLiftChart& chart, const Poly& g0,
                                     const Poly& g1) {
    ThetaNuRoundtrip r{W2Polynomial(), {}, false, false};
    const Field* F = chart.field();

    W2Polynomial gt = W2Polynomial::lift_pair(g0, g1);
    auto nu = chart.nu_star(gt);
    r.theta_after_nu = FrobeniusLiftChart::theta_star(nu.first, nu.second);
    r.theta_nu_is_frobenius = (r.theta_after_nu == chart.frobenius_pullback(gt));

    W2Polynomial th = FrobeniusLiftChart::theta_star(g0, g1);
    r.nu_after_theta = chart.nu_star(th);
    (void)F;
    r.nu_theta_is_sigma = (r.nu_after_theta.first == g0.frobenius() &&
                           r.nu_after_theta.second == g1.frobenius());
    return r;
}

std::optional<W2Polynomial> compatible_divisor_witness(const FrobeniusLiftChart& chart,
                                                        const Poly& h) {
    if (h.is_zero()) throw std::invalid_argument("zero divisor");
    const Field* F = chart.field();
    int p = F->p();
    Poly hp = h.pow(p);
    Poly d = chart.delta(h);
    Poly t;
    if (!d.divisible_by(hp, &t)) return std::nullopt;
    // F*(h~) = (1 + p*t) * h~^p
    return W2Polynomial::constant(F, chart.dim(), WittScalar2::one(F)) +
           W2Polynomial::lift(t).times_p();
}

bool is_compatible_divisor(const FrobeniusLiftChart& chart, const Poly& h) {
    return compatible_divisor_witness(chart, h).has_value();
}

bool is_compatible_blowup_center(const FrobeniusLiftChart& chart,
                                 const std::set<int>& center) {
    if (center.empty()) throw std::invalid_argument("empty blow-up center");
    for (int i : center)
        if (i < 0 || i >= chart.dim())
            throw std::invalid_argument("center index out of range");
    int p = chart.field()->p();
    for (int i : center) {
        // f_i in I^p: every monomial has total center-degree >= p
        for (const auto& [e, c] : chart.images()[i].terms()) {
            int64_t deg = 0;
            for (int j : center) deg += e[j];
            if (deg < p) return false;
        }
    }
    return true;
}

ProjectiveLift::ProjectiveLift(const Field* F_, int n_, std::vector<Poly> fs_)
    : F(F_), n(n_), fs(std::move(fs_)) {
    if ((int)fs.size() != n + 1)
        throw std::invalid_argument("need n+1 homogeneous polynomials");
    for (const auto& f : fs) {
        if (f.field() != F || f.nvars() != n + 1)
            throw std::invalid_argument("lift data must live in n+1 variables");
        int64_t d;
        if (!f.is_homogeneous(&d) || (d != -1 && d != F->p()))
            throw std::invalid_argument("lift data must be homogeneous of degree p");
    }
}

ProjectiveLift ProjectiveLift::standard(const Field* F, int n) {
    return ProjectiveLift(F, n, std::vector<Poly>(n + 1, Poly::zero(F, n + 1)));
}

FrobeniusLiftChart ProjectiveLift::chart(int j) const {
    if (j < 0 || j > n) throw std::invalid_argument("chart index out of range");
    // dehomogenize at x_j = 1; chart variables are x_i (i != j) in order
    std::vector<Poly> sub;
    sub.reserve(n + 1);
    int slot = 0;
    for (int i = 0; i <= n; ++i) {
        if (i == j) sub.push_back(Poly::constant(F, n, 1));
        else sub.push_back(Poly::variable(F, n, slot++));
    }
    Poly fj = fs[j].substitute(sub);
    std::vector<Poly> images;
    images.reserve(n);
    slot = 0;
    for (int i = 0; i <= n; ++i) {
        if (i == j) continue;
        Poly fi = fs[i].substitute(sub);
        Poly ui = Poly::variable(F, n, slot++);
        images.push_back(fi - ui.pow(F->p()) * fj);
    }
    return FrobeniusLiftChart(F, std::move(images));
}

namespace {

Poly poly_matrix_det(const std::vector<std::vector<Poly>>& M) {
    size_t n = M.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    const Field* F = M[0][0].field();
    int nv = M[0][0].nvars();
    if (n == 1) return M[0][0];
    Poly det = Poly::zero(F, nv);
    // Laplace expansion along the first row
    for (size_t c = 0; c < n; ++c) {
        if (M[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> minor(n - 1);
        for (size_t r = 1; r < n; ++r)
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) minor[r - 1].push_back(M[r][cc]);
        Poly term = M[0][c] * poly_matrix_det(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace

Poly chart_det_xi(const FrobeniusLiftChart& chart) {
    const Field* F = chart.field();
    int n = chart.dim(), p = F->p();
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly::zero(F, n)));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            Poly entry = chart.images()[i].derivative(k);
            if (i == k) entry += Poly::variable(F, n, i).pow(p - 1);
            M[i][k] = entry;
        }
    }
    return poly_matrix_det(M);
}

Poly det_xi_divisor_Pn(const ProjectiveLift& lift) {
    const Field* F = lift.F;
    int n = lift.n, p = F->p();
    int64_t N = (int64_t)(n + 1) * (p - 1);

    Poly glued(F, n + 1);
    for (int j = 0; j <= n; ++j) {
        Poly dj = chart_det_xi(lift.chart(j));
        // homogenize with respect to x_j up to total degree N
        Poly Sj(F, n + 1);
        for (const auto& [e, c] : dj.terms()) {
            int64_t total = exp_total(e);
            if (total > N)
                throw std::runtime_error("charts fail to glue: chart " + std::to_string(j) +
                                         " determinant exceeds degree " + std::to_string(N));
            Exp he(n + 1, 0);
            int slot = 0;
            for (int i = 0; i <= n; ++i) {
                if (i == j) continue;
                he[i] = e[slot++];
            }
            he[j] = N - total;
            Sj.set_coeff(he, c);
        }
        if (j == 0) glued = Sj;
        else if (Sj != glued)
            throw std::runtime_error("charts fail to glue: invalid lifting datum");
    }
    if (glued.is_zero())
        throw std::runtime_error("charts fail to glue: vanishing determinant");
    return glued;
}

} // namespace flift
