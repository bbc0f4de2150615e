#pragma once

#include "flift/gf.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace flift {

/// Exponent vector of a monomial; entries are checked against overflow.
using Exp = std::vector<int64_t>;

Exp exp_add(const Exp& a, const Exp& b);
int64_t exp_total(const Exp& e);

/**
 * Sparse multivariate polynomial over a runtime finite field.
 * Terms are kept in a map under lexicographic exponent order; zero
 * coefficients are never stored.  Variable names are carried for printing
 * and serialization only; arity is what matters for arithmetic.
 */
class Poly {
public:
    Poly() : F_(nullptr), nvars_(0) {}
    Poly(const Field* F, int nvars) : F_(F), nvars_(nvars) {}

    static Poly zero(const Field* F, int nvars) { return Poly(F, nvars); }
    static Poly constant(const Field* F, int nvars, int c);
    static Poly variable(const Field* F, int nvars, int index, int64_t power = 1);
    static Poly monomial(const Field* F, Exp e, int c);

    const Field* field() const { return F_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int constant_coeff() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Exp, int>& terms() const { return terms_; }

    int coeff(const Exp& e) const;
    void set_coeff(const Exp& e, int c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(int c) const;
    Poly pow(int64_t e) const;
    Poly derivative(int var) const;
    Poly frobenius() const;                       // coefficientwise p-th power, exponents * p
    int64_t degree() const;                       // total degree, -1 for zero
    int64_t degree_in(int var) const;
    bool is_homogeneous(int64_t* deg = nullptr) const;

    /// substitute each variable by the given polynomial (all over the same field)
    Poly substitute(const std::vector<Poly>& images) const;
    int eval(const std::vector<int>& point) const;

    /// division by a single divisor under lex order: *this = q*d + r with no
    /// term of r divisible by the leading monomial of d
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    bool divisible_by(const Poly& d, Poly* quotient = nullptr) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_compatible(const Poly& o) const;

    const Field* F_;
    int nvars_;
    std::map<Exp, int> terms_;
};

/// parse helper used by tests and the CLI: terms like "2*x^3*y + 1" are not
/// supported; polynomials are built programmatically or from JSON instead.

} // namespace flift
