#include "flift/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace flift {

Laurent Laurent::constant(const Field* F, int c) {
    Laurent r(F);
    if (c) r.terms_[0] = c;
    return r;
}

Laurent Laurent::monomial(const Field* F, int64_t e, int c) {
    Laurent r(F);
    if (c) r.terms_[e] = c;
    return r;
}

int Laurent::coeff(int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void Laurent::set_coeff(int64_t e, int c) {
    if (c) terms_[e] = c;
    else terms_.erase(e);
}

int64_t Laurent::val() const {
    if (terms_.empty()) throw std::domain_error("valuation of zero");
    return terms_.begin()->first;
}

int64_t Laurent::deg() const {
    if (terms_.empty()) throw std::domain_error("degree of zero");
    return terms_.rbegin()->first;
}

int Laurent::lead_coeff() const { return terms_.rbegin()->second; }
int Laurent::low_coeff() const { return terms_.begin()->second; }

Laurent Laurent::operator+(const Laurent& o) const {
    if (F_ != o.F_) throw std::invalid_argument("mixed fields");
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.set_coeff(e, F_->add(r.coeff(e), c));
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = F_->neg(c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    if (F_ != o.F_) throw std::invalid_argument("mixed fields");
    Laurent r(F_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.set_coeff(e1 + e2, F_->add(r.coeff(e1 + e2), F_->mul(c1, c2)));
    return r;
}

Laurent Laurent::scaled(int c) const {
    Laurent r(F_);
    if (!c) return r;
    for (const auto& [e, a] : terms_) r.terms_[e] = F_->mul(a, c);
    return r;
}

Laurent Laurent::shifted(int64_t e) const {
    Laurent r(F_);
    for (const auto& [ee, c] : terms_) r.terms_[ee + e] = c;
    return r;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0 || c != 1) os << F_->to_string(c);
        if (e != 0) {
            if (c != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::pair<Laurent, Laurent> poly_divrem(const Laurent& a, const Laurent& b) {
    if (!a.is_polynomial() || !b.is_polynomial())
        throw std::invalid_argument("poly_divrem expects polynomial support");
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const Field* F = b.field();
    Laurent q = Laurent::zero(F), r = a;
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int64_t e = r.deg() - b.deg();
        int c = F->mul(r.lead_coeff(), F->inv(b.lead_coeff()));
        Laurent t = Laurent::monomial(F, e, c);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

Laurent poly_gcd(Laurent a, Laurent b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0,0)");
    const Field* F = a.is_zero() ? b.field() : a.field();
    while (!b.is_zero()) {
        auto [q, r] = poly_divrem(a, b);
        a = b;
        b = r;
    }
    return a.scaled(F->inv(a.lead_coeff()));   // monic
}

RatFunc::RatFunc(const Laurent& n) : num(n), den(Laurent::constant(n.field(), 1)) {}

RatFunc::RatFunc(const Laurent& n, const Laurent& d) : num(n), den(d) { reduce(); }

void RatFunc::reduce() {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    const Field* F = den.field();
    // clear Laurent tails so both parts are honest polynomials
    int64_t shift = 0;
    if (!num.is_zero()) shift = std::min<int64_t>(0, num.val());
    shift = std::min<int64_t>(shift, den.val());
    num = num.shifted(-shift);
    den = den.shifted(-shift);
    if (num.is_zero()) {
        den = Laurent::constant(F, 1);
        return;
    }
    Laurent g = poly_gcd(num, den);
    num = poly_divrem(num, g).first;
    den = poly_divrem(den, g).first;
    int lc = F->inv(den.lead_coeff());
    num = num.scaled(lc);
    den = den.scaled(lc);
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num * o.den + o.num * den, den * o.den); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return RatFunc(num * o.den - o.num * den, den * o.den); }
RatFunc RatFunc::operator-() const { return RatFunc(-num, den); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num * o.den, den * o.num);
}

RatFunc RatFunc::derivative() const {
    const Field* F = den.field();
    auto d = [&](const Laurent& f) {
        Laurent r(F);
        for (const auto& [e, c] : f.terms()) {
            int m = F->from_int(e % F->p());
            int cc = F->mul(c, m);
            if (cc) r.set_coeff(e - 1, cc);
        }
        return r;
    };
    return RatFunc(d(num) * den - num * d(den), den * den);
}

Laurent RatFunc::as_laurent() const {
    if (num.is_zero()) return num;
    if (!den.is_monomial())
        throw std::domain_error("rational function is not a Laurent polynomial");
    const Field* F = den.field();
    int c = F->inv(den.low_coeff());
    return num.scaled(c).shifted(-den.val());
}

} // namespace flift
