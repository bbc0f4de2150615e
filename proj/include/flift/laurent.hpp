#pragma once

#include "flift/gf.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace flift {

/// Sparse univariate Laurent polynomial over F_q (exponents in Z).
class Laurent {
public:
    Laurent() : F_(nullptr) {}
    explicit Laurent(const Field* F) : F_(F) {}

    static Laurent zero(const Field* F) { return Laurent(F); }
    static Laurent constant(const Field* F, int c);
    static Laurent monomial(const Field* F, int64_t e, int c);

    const Field* field() const { return F_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int64_t, int>& terms() const { return terms_; }
    int coeff(int64_t e) const;
    void set_coeff(int64_t e, int c);

    int64_t val() const;        // lowest exponent; throws on zero
    int64_t deg() const;        // highest exponent; throws on zero
    int lead_coeff() const;     // coefficient at deg()
    int low_coeff() const;      // coefficient at val()
    bool is_monomial() const { return terms_.size() == 1; }
    /// polynomial in t (no negative exponents)
    bool is_polynomial() const { return terms_.empty() || val() >= 0; }
    /// polynomial in t^{-1}
    bool is_antipolynomial() const { return terms_.empty() || deg() <= 0; }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent scaled(int c) const;
    Laurent shifted(int64_t e) const;   // multiply by t^e

    std::string to_string() const;

private:
    const Field* F_;
    std::map<int64_t, int> terms_;
};

/// Univariate polynomial utilities on Laurent values restricted to
/// polynomial support: Euclidean division and gcd.
std::pair<Laurent, Laurent> poly_divrem(const Laurent& a, const Laurent& b);
Laurent poly_gcd(Laurent a, Laurent b);   // monic gcd

/// Rational function num/den over F_q[t], gcd-reduced, den monic.
struct RatFunc {
    Laurent num, den;

    RatFunc() = default;
    explicit RatFunc(const Laurent& n);
    RatFunc(const Laurent& n, const Laurent& d);

    static RatFunc constant(const Field* F, int c) { return RatFunc(Laurent::constant(F, c)); }

    bool is_zero() const { return num.is_zero(); }
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }

    RatFunc derivative() const;
    /// Laurent form when the denominator is a monomial; throws otherwise
    Laurent as_laurent() const;

private:
    void reduce();
};

} // namespace flift
