#pragma once

#include "flift/gf.hpp"
#include "flift/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flift {

/**
 * Element of W_2(F_q): a pair (a0, a1) of field codes standing for the Witt
 * vector with ghost components (a0, a0^p + p*a1).  Addition carries through
 * the hand-coded polynomial sum_{i=1}^{p-1} (1/p) C(p,i) a0^i b0^(p-i);
 * multiplication is (a0*b0, a0^p*b1 + b0^p*a1).  p*(a0,a1) = (0, a0^p),
 * and the Witt Frobenius is sigma(a0,a1) = (a0^p, a1^p).
 */
struct WittScalar2 {
    const Field* F = nullptr;
    int a0 = 0, a1 = 0;

    WittScalar2() = default;
    WittScalar2(const Field* F_, int a0_, int a1_) : F(F_), a0(a0_), a1(a1_) {}

    static WittScalar2 zero(const Field* F) { return {F, 0, 0}; }
    static WittScalar2 one(const Field* F) { return {F, 1, 0}; }
    static WittScalar2 teichmuller(const Field* F, int a) { return {F, a, 0}; }
    /// image of an integer under Z -> W_2(F_p) -> W_2(F_q)
    static WittScalar2 from_int(const Field* F, long n);

    bool is_zero() const { return a0 == 0 && a1 == 0; }
    WittScalar2 operator+(const WittScalar2& o) const;
    WittScalar2 operator-() const;
    WittScalar2 operator-(const WittScalar2& o) const { return *this + (-o); }
    WittScalar2 operator*(const WittScalar2& o) const;
    bool operator==(const WittScalar2& o) const { return F == o.F && a0 == o.a0 && a1 == o.a1; }
    bool operator!=(const WittScalar2& o) const { return !(*this == o); }

    WittScalar2 sigma() const { return {F, F->pow(a0, F->p()), F->pow(a1, F->p())}; }
    bool is_unit() const { return a0 != 0; }
    WittScalar2 inverse() const;

    std::string to_string() const;
};

/**
 * Sparse multivariate polynomial with W_2(F_q) coefficients: the coordinate
 * ring of a chart of a lifting modulo p^2.  Reduction modulo p takes first
 * components.
 */
class W2Polynomial {
public:
    W2Polynomial() : F_(nullptr), nvars_(0) {}
    W2Polynomial(const Field* F, int nvars) : F_(F), nvars_(nvars) {}

    static W2Polynomial zero(const Field* F, int nvars) { return W2Polynomial(F, nvars); }
    static W2Polynomial constant(const Field* F, int nvars, WittScalar2 c);
    static W2Polynomial variable(const Field* F, int nvars, int index);
    /// canonical lift: Teichmuller representatives coefficientwise
    static W2Polynomial lift(const Poly& f);
    /// lift of f with a1-parts taken from g: lift(f) + p*lift(g)
    static W2Polynomial lift_pair(const Poly& f0, const Poly& f1);

    const Field* field() const { return F_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, WittScalar2>& terms() const { return terms_; }

    WittScalar2 coeff(const Exp& e) const;
    void set_coeff(const Exp& e, const WittScalar2& c);

    W2Polynomial operator+(const W2Polynomial& o) const;
    W2Polynomial operator-() const;
    W2Polynomial operator-(const W2Polynomial& o) const { return *this + (-o); }
    W2Polynomial operator*(const W2Polynomial& o) const;
    W2Polynomial& operator+=(const W2Polynomial& o) { return *this = *this + o; }
    W2Polynomial& operator-=(const W2Polynomial& o) { return *this = *this - o; }
    W2Polynomial& operator*=(const W2Polynomial& o) { return *this = *this * o; }
    bool operator==(const W2Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const W2Polynomial& o) const { return !(*this == o); }

    W2Polynomial pow(int64_t e) const;
    W2Polynomial times_p() const;                  // multiplication by p
    W2Polynomial substitute(const std::vector<W2Polynomial>& images) const;
    /// apply the Witt Frobenius sigma to every coefficient
    W2Polynomial coeff_sigma() const;

    Poly reduce_mod_p() const;                     // a0 parts
    bool is_divisible_by_p() const;                // all a0 parts vanish
    /// the unique g with *this == p * lift(g); requires is_divisible_by_p
    Poly divide_p() const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_compatible(const W2Polynomial& o) const;

    const Field* F_;
    int nvars_;
    std::map<Exp, WittScalar2> terms_;
};

} // namespace flift
