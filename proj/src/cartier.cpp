#include "flift/cartier.hpp"

#include <stdexcept>

namespace flift {

LogForm cartier_inverse(const LogForm& omega) {
    const Field* F = omega.field();
    int n = omega.nvars(), p = F->p();
    LogForm out = LogForm::zero(F, n, omega.degree(), omega.marked());
    for (const auto& [idx, g] : omega.components()) {
        Poly c = g.frobenius();
        for (int i : idx)
            if (!omega.marked().count(i))
                c *= Poly::variable(F, n, i).pow(p - 1);
        out.set_component(idx, out.component(idx) + c);
    }
    return out;
}

CartierDecomposition cartier_decompose(const LogForm& omega) {
    const Field* F = omega.field();
    int n = omega.nvars(), p = F->p();
    if (omega.degree() != 1) throw std::invalid_argument("cartier: expected a 1-form");
    if (!omega.marked().empty())
        throw std::invalid_argument("cartier decomposition expects polynomial (non-log) forms");
    if (!omega.is_closed()) throw std::domain_error("cartier: form is not closed");

    // Monomials c x^a dx_k with a == -e_k (mod p) are exactly the semilinear
    // part g_k^p x_k^{p-1} dx_k; they never occur in exact forms.  Everything
    // else integrates directly, consistency being forced by closedness.
    CartierDecomposition dec;
    dec.g.assign(n, Poly::zero(F, n));
    dec.h = Poly::zero(F, n);
    for (const auto& [idx, comp] : omega.components()) {
        int k = idx[0];
        for (const auto& [e, c] : comp.terms()) {
            bool special = (e[k] % p == p - 1);
            if (special)
                for (int i = 0; i < n && special; ++i)
                    if (i != k && e[i] % p != 0) special = false;
            if (special) {
                Exp eg(n);
                for (int i = 0; i < n; ++i) eg[i] = (i == k) ? (e[i] - (p - 1)) / p : e[i] / p;
                dec.g[k].set_coeff(eg, F->frobenius_inverse(c));
            } else {
                // c x^e dx_k integrates to c/(e_k+1) x^{e+e_k}
                Exp eh = e;
                eh[k] += 1;
                int m = (int)(eh[k] % p);
                if (m == 0)
                    throw std::logic_error("cartier: non-integrable residual term");
                int ch = F->mul(c, F->inv(F->from_int(m)));
                // several components may integrate to the same monomial of h;
                // closedness makes them agree, so write-once
                if (dec.h.coeff(eh) == 0) dec.h.set_coeff(eh, ch);
            }
        }
    }
    // the decomposition must reconstruct the input exactly
    LogForm rec = LogForm::zero(F, n, 1);
    for (int k = 0; k < n; ++k) {
        Poly t = dec.g[k].frobenius() * Poly::variable(F, n, k).pow(p - 1);
        if (!t.is_zero()) rec.set_component({k}, t);
    }
    rec = rec + LogForm::d_of(dec.h);
    if (rec != omega) throw std::logic_error("cartier: decomposition failed to reconstruct");
    return dec;
}

LogForm cartier(const LogForm& omega) {
    CartierDecomposition dec = cartier_decompose(omega);
    const Field* F = omega.field();
    int n = omega.nvars();
    LogForm out = LogForm::zero(F, n, 1);
    for (int k = 0; k < n; ++k)
        if (!dec.g[k].is_zero()) out.set_component({k}, dec.g[k]);
    return out;
}

Poly random_poly(const Field* F, int nvars, int64_t max_deg, std::mt19937_64& rng, int terms) {
    Poly r(F, nvars);
    std::uniform_int_distribution<int> coeff(0, (int)F->q() - 1);
    std::uniform_int_distribution<int64_t> deg(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        Exp e(nvars);
        int64_t budget = max_deg;
        for (int i = 0; i < nvars; ++i) {
            std::uniform_int_distribution<int64_t> d(0, budget);
            e[i] = d(rng);
            budget -= e[i];
        }
        int c = coeff(rng);
        if (c) r.set_coeff(e, F->add(r.coeff(e), c));
    }
    return r;
}

bool xi_splits_cartier(const FrobeniusLiftChart& chart, int trials, uint64_t seed) {
    const Field* F = chart.field();
    int n = chart.dim();
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        LogForm omega = LogForm::zero(F, n, 1);
        for (int k = 0; k < n; ++k)
            omega.set_component({k}, random_poly(F, n, 3, rng));
        LogForm xo = chart.xi(omega);
        if (!xo.is_closed()) return false;
        if (cartier(xo) != omega) return false;
    }
    return true;
}

SplittingSection::SplittingSection(const Field* F_, int n_, Poly s_)
    : F(F_), n(n_), s(std::move(s_)) {
    if (s.field() != F || s.nvars() != n + 1)
        throw std::invalid_argument("splitting section must live in n+1 variables");
    int64_t d;
    int64_t expected = (int64_t)(n + 1) * (F->p() - 1);
    if (!s.is_homogeneous(&d) || d != expected)
        throw std::invalid_argument("splitting section must be homogeneous of degree (n+1)(p-1)");
}

int splitting_coefficient(const SplittingSection& s) {
    Exp e(s.n + 1, s.F->p() - 1);
    return s.s.coeff(e);
}

bool splits_Pn(const SplittingSection& s) { return splitting_coefficient(s) != 0; }

bool fedder_hypersurface(const Poly& f, const std::vector<int>& point) {
    const Field* F = f.field();
    int n = f.nvars(), p = F->p();
    if (f.is_zero()) throw std::invalid_argument("fedder: zero polynomial");
    if ((int)point.size() != n) throw std::invalid_argument("fedder: point arity mismatch");
    if (f.eval(point) != 0)
        throw std::invalid_argument("fedder: f is a unit at the point");
    // translate the point to the origin
    std::vector<Poly> sub;
    sub.reserve(n);
    for (int i = 0; i < n; ++i)
        sub.push_back(Poly::variable(F, n, i) + Poly::constant(F, n, point[i]));
    Poly g = f.substitute(sub).pow(p - 1);
    // f^{p-1} not in m^{[p]} iff some monomial has all exponents < p
    for (const auto& [e, c] : g.terms()) {
        bool outside = true;
        for (int i = 0; i < n; ++i)
            if (e[i] >= p) { outside = false; break; }
        if (outside) return true;
    }
    return false;
}

void SplittingDivisorP1::validate() const {
    int deg = infty_mult;
    for (int m : affine_mult) deg += m;
    if (deg != 2 * (p - 1))
        throw std::invalid_argument("divisor class is not -K on P^1");
    for (int m : affine_mult)
        if (m < 0 || m > p - 1) throw std::invalid_argument("coefficient outside (0,1]");
    if (infty_mult < 0 || infty_mult > p - 1)
        throw std::invalid_argument("coefficient outside (0,1]");
}

InvariantSplittingResult invariant_splitting_search_P1(const Field* F) {
    int p = F->p();
    InvariantSplittingResult res{std::nullopt, 0, false};

    // invariance under x -> x+1 forces equal multiplicity a on the full orbit
    // {0,..,p-1} plus b at infinity, with a*p + b = 2(p-1), 0 <= a,b <= p-1
    Poly x = Poly::variable(F, 2, 0), y = Poly::variable(F, 2, 1);
    for (int a = 0; a <= p - 1; ++a) {
        int b = 2 * (p - 1) - a * p;
        if (b < 0 || b > p - 1) continue;
        Poly s = Poly::constant(F, 2, 1);
        for (int i = 0; i < p; ++i)
            s *= (x - y.scaled(F->from_int(i))).pow(a);
        s *= y.pow(b);
        SplittingSection sec(F, 1, s);
        int coeff = splitting_coefficient(sec);
        if (a == 1) res.coefficient_at_candidate = coeff;
        if (coeff != 0 && !res.witness) {
            SplittingDivisorP1 w{p, std::vector<int>(p, a), b};
            w.validate();
            res.witness = w;
        }
    }
    res.p2_discrepancy = (p == 2 && res.witness.has_value());
    return res;
}

} // namespace flift
