#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace flift {

/// Exact rational on int64 with eager normalization.  Sizes in this project
/// are tiny; overflow would throw from the checked helpers below.
struct Rat {
    int64_t num = 0, den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw std::domain_error("division by zero rational");
        return Rat(num * o.den, den * o.num);
    }
    Rat operator-() const { return Rat(-num, den); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rat& o) const { return num * o.den <= o.num * den; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }
    bool is_integer() const { return den == 1; }
};

using ZVec = std::vector<int64_t>;
using ZMat = std::vector<ZVec>;   // row major

int64_t vec_gcd(const ZVec& v);
ZVec primitive(ZVec v);
int64_t dot(const ZVec& a, const ZVec& b);

/// rank over Q by fraction-free elimination
int zmat_rank(ZMat m);

/// elementary divisors (Smith normal form diagonal), nonzero entries only
std::vector<int64_t> smith_divisors(ZMat m);

/// solve A x = b exactly over Q; A given row-major (rows = equations).
/// Returns false when inconsistent; underdetermined systems pick the
/// elimination-basic solution with free variables set to zero.
bool solve_rational(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                    std::vector<Rat>& x);

/// determinant of a square integer matrix (Laplace; n <= 4 in this project)
int64_t zmat_det(const ZMat& m);

} // namespace flift
