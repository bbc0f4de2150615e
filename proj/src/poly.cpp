#include "flift/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace flift {

Exp exp_add(const Exp& a, const Exp& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent arity mismatch");
    Exp c(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (__builtin_add_overflow(a[i], b[i], &c[i]))
            throw std::overflow_error("polynomial exponent overflow");
    }
    return c;
}

int64_t exp_total(const Exp& e) {
    int64_t t = 0;
    for (int64_t x : e)
        if (__builtin_add_overflow(t, x, &t))
            throw std::overflow_error("polynomial degree overflow");
    return t;
}

Poly Poly::constant(const Field* F, int nvars, int c) {
    Poly r(F, nvars);
    if (c) r.terms_[Exp(nvars, 0)] = c;
    return r;
}

Poly Poly::variable(const Field* F, int nvars, int index, int64_t power) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    Poly r(F, nvars);
    Exp e(nvars, 0);
    e[index] = power;
    r.terms_[e] = 1;
    return r;
}

Poly Poly::monomial(const Field* F, Exp e, int c) {
    Poly r(F, (int)e.size());
    for (int64_t x : e)
        if (x < 0) throw std::invalid_argument("negative exponent in monomial");
    if (c) r.terms_[std::move(e)] = c;
    return r;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
}

int Poly::constant_coeff() const {
    auto it = terms_.find(Exp(nvars_, 0));
    return it == terms_.end() ? 0 : it->second;
}

int Poly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void Poly::set_coeff(const Exp& e, int c) {
    if ((int)e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (c) terms_[e] = c;
    else terms_.erase(e);
}

void Poly::check_compatible(const Poly& o) const {
    if (F_ != o.F_) throw std::invalid_argument("mixed coefficient fields");
    if (nvars_ != o.nvars_) throw std::invalid_argument("mixed variable arities");
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) {
        int s = F_->add(r.coeff(e), c);
        r.set_coeff(e, s);
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = F_->neg(c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(F_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e = exp_add(e1, e2);
            int c = F_->add(r.coeff(e), F_->mul(c1, c2));
            r.set_coeff(e, c);
        }
    return r;
}

Poly Poly::scaled(int c) const {
    Poly r(F_, nvars_);
    if (!c) return r;
    for (const auto& [e, a] : terms_) r.terms_[e] = F_->mul(a, c);
    return r;
}

Poly Poly::pow(int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = constant(F_, nvars_, 1);
    Poly b = *this;
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(F_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        int cc = F_->mul(c, F_->from_int(e[var] % F_->p()));
        if (!cc) continue;
        Exp e2 = e;
        e2[var] -= 1;
        r.set_coeff(e2, F_->add(r.coeff(e2), cc));
    }
    return r;
}

Poly Poly::frobenius() const {
    Poly r(F_, nvars_);
    int p = F_->p();
    for (const auto& [e, c] : terms_) {
        Exp e2(e.size());
        for (size_t i = 0; i < e.size(); ++i)
            if (__builtin_mul_overflow(e[i], (int64_t)p, &e2[i]))
                throw std::overflow_error("polynomial exponent overflow");
        r.terms_[e2] = F_->pow(c, p);
    }
    return r;
}

int64_t Poly::degree() const {
    int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_total(e));
    return d;
}

int64_t Poly::degree_in(int var) const {
    int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool Poly::is_homogeneous(int64_t* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    int64_t d = exp_total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exp_total(e) != d) return false;
    if (deg) *deg = d;
    return true;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if ((int)images.size() != nvars_) throw std::invalid_argument("substitute: arity mismatch");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.field() != F_ || im.nvars() != out_vars)
            throw std::invalid_argument("substitute: incompatible images");
    Poly r(F_, out_vars);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(F_, out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t *= images[i].pow(e[i]);
        r += t;
    }
    return r;
}

int Poly::eval(const std::vector<int>& point) const {
    if ((int)point.size() != nvars_) throw std::invalid_argument("eval: arity mismatch");
    int acc = 0;
    for (const auto& [e, c] : terms_) {
        int t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t = F_->mul(t, F_->pow(point[i], e[i]));
        acc = F_->add(acc, t);
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    check_compatible(d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    const Exp& lead = d.terms_.rbegin()->first;   // lex-leading monomial
    int lead_c = d.terms_.rbegin()->second;
    Poly q(F_, nvars_), r(F_, nvars_), rest = *this;
    auto divides_exp = [&](const Exp& e) {
        for (int i = 0; i < nvars_; ++i)
            if (e[i] < lead[i]) return false;
        return true;
    };
    while (!rest.is_zero()) {
        auto it = std::prev(rest.terms_.end());
        Exp e = it->first;
        int c = it->second;
        if (divides_exp(e)) {
            Exp de(nvars_);
            for (int i = 0; i < nvars_; ++i) de[i] = e[i] - lead[i];
            Poly t = Poly::monomial(F_, de, F_->mul(c, F_->inv(lead_c)));
            q += t;
            rest -= t * d;
        } else {
            r.set_coeff(e, c);
            rest.set_coeff(e, 0);
        }
    }
    return {q, r};
}

bool Poly::divisible_by(const Poly& d, Poly* quotient) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) return false;
    if (quotient) *quotient = q;
    return true;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
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
        const auto& [e, c] = *it;
        bool printed = false;
        if (c != 1 || exp_total(e) == 0) {
            os << F_->to_string(c);
            printed = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (printed) os << "*";
            os << var_name(i);
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

} // namespace flift
