#include "flift/witt.hpp"

#include <sstream>
#include <stdexcept>

namespace flift {

WittScalar2 WittScalar2::from_int(const Field* F, long n) {
    long p2 = (long)F->p() * F->p();
    long r = ((n % p2) + p2) % p2;
    WittScalar2 acc = zero(F), one_ = one(F);
    for (long i = 0; i < r; ++i) acc = acc + one_;
    return acc;
}

WittScalar2 WittScalar2::operator+(const WittScalar2& o) const {
    if (F != o.F) throw std::invalid_argument("Witt scalars over different fields");
    int s0 = F->add(a0, o.a0);
    int s1 = F->sub(F->add(a1, o.a1), witt_carry(F, a0, o.a0));
    return {F, s0, s1};
}

WittScalar2 WittScalar2::operator-() const {
    if (F->p() == 2) {
        // -(a0,a1) = (a0, a1 + a0^2) in W_2(F_{2^m})
        return {F, a0, F->add(a1, F->mul(a0, a0))};
    }
    return {F, F->neg(a0), F->neg(a1)};
}

WittScalar2 WittScalar2::operator*(const WittScalar2& o) const {
    if (F != o.F) throw std::invalid_argument("Witt scalars over different fields");
    int p = F->p();
    int m0 = F->mul(a0, o.a0);
    int m1 = F->add(F->mul(F->pow(a0, p), o.a1), F->mul(F->pow(o.a0, p), a1));
    return {F, m0, m1};
}

WittScalar2 WittScalar2::inverse() const {
    if (a0 == 0) throw std::domain_error("non-unit Witt scalar");
    // (a0,a1)^-1 = (b0,b1) with a0 b0 = 1 and a0^p b1 + b0^p a1 = 0
    int p = F->p();
    int b0 = F->inv(a0);
    int b1 = F->neg(F->mul(F->mul(F->pow(b0, p), a1), F->pow(F->inv(a0), p)));
    return {F, b0, b1};
}

std::string WittScalar2::to_string() const {
    std::ostringstream os;
    os << "(" << F->to_string(a0) << "," << F->to_string(a1) << ")";
    return os.str();
}

W2Polynomial W2Polynomial::constant(const Field* F, int nvars, WittScalar2 c) {
    W2Polynomial r(F, nvars);
    if (!c.is_zero()) r.terms_[Exp(nvars, 0)] = c;
    return r;
}

W2Polynomial W2Polynomial::variable(const Field* F, int nvars, int index) {
    W2Polynomial r(F, nvars);
    Exp e(nvars, 0);
    e[index] = 1;
    r.terms_[e] = WittScalar2::one(F);
    return r;
}

W2Polynomial W2Polynomial::lift(const Poly& f) {
    W2Polynomial r(f.field(), f.nvars());
    for (const auto& [e, c] : f.terms())
        r.terms_[e] = WittScalar2::teichmuller(f.field(), c);
    return r;
}

W2Polynomial W2Polynomial::lift_pair(const Poly& f0, const Poly& f1) {
    return lift(f0) + lift(f1).times_p();
}

WittScalar2 W2Polynomial::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? WittScalar2::zero(F_) : it->second;
}

void W2Polynomial::set_coeff(const Exp& e, const WittScalar2& c) {
    if ((int)e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (c.is_zero()) terms_.erase(e);
    else terms_[e] = c;
}

void W2Polynomial::check_compatible(const W2Polynomial& o) const {
    if (F_ != o.F_) throw std::invalid_argument("mixed coefficient fields");
    if (nvars_ != o.nvars_) throw std::invalid_argument("mixed variable arities");
}

W2Polynomial W2Polynomial::operator+(const W2Polynomial& o) const {
    check_compatible(o);
    W2Polynomial r = *this;
    for (const auto& [e, c] : o.terms_)
        r.set_coeff(e, r.coeff(e) + c);
    return r;
}

W2Polynomial W2Polynomial::operator-() const {
    W2Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

W2Polynomial W2Polynomial::operator*(const W2Polynomial& o) const {
    check_compatible(o);
    W2Polynomial r(F_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e = exp_add(e1, e2);
            r.set_coeff(e, r.coeff(e) + c1 * c2);
        }
    return r;
}

W2Polynomial W2Polynomial::pow(int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    W2Polynomial r = constant(F_, nvars_, WittScalar2::one(F_));
    W2Polynomial b = *this;
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

W2Polynomial W2Polynomial::times_p() const {
    // p * (a0, a1) = (0, a0^p) coefficientwise
    W2Polynomial r(F_, nvars_);
    int p = F_->p();
    for (const auto& [e, c] : terms_) {
        if (c.a0 == 0) continue;
        r.terms_[e] = WittScalar2(F_, 0, F_->pow(c.a0, p));
    }
    return r;
}

W2Polynomial W2Polynomial::substitute(const std::vector<W2Polynomial>& images) const {
    if ((int)images.size() != nvars_) throw std::invalid_argument("substitute: arity mismatch");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    W2Polynomial r(F_, out_vars);
    for (const auto& [e, c] : terms_) {
        W2Polynomial t = constant(F_, out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t *= images[i].pow(e[i]);
        r += t;
    }
    return r;
}

W2Polynomial W2Polynomial::coeff_sigma() const {
    W2Polynomial r(F_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = c.sigma();
    return r;
}

Poly W2Polynomial::reduce_mod_p() const {
    Poly r(F_, nvars_);
    for (const auto& [e, c] : terms_)
        if (c.a0) r.set_coeff(e, c.a0);
    return r;
}

bool W2Polynomial::is_divisible_by_p() const {
    for (const auto& [e, c] : terms_)
        if (c.a0) return false;
    return true;
}

Poly W2Polynomial::divide_p() const {
    if (!is_divisible_by_p())
        throw std::domain_error("W2 polynomial not divisible by p");
    Poly r(F_, nvars_);
    for (const auto& [e, c] : terms_)
        r.set_coeff(e, F_->frobenius_inverse(c.a1));
    return r;
}

std::string W2Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](int i) {
        if (i < (int)names.size()) return names[i];
        return "x" + std::to_string(i);
    };
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.to_string();
        for (int i = 0; i < nvars_; ++i) {
            if (!it->first[i]) continue;
            os << "*" << var_name(i);
            if (it->first[i] != 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

} // namespace flift
