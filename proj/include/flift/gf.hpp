#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flift {

/**
 * Runtime finite field F_q, q = p^m.
 *
 * Elements are integer codes in [0, q).  The code of sum(c_i * g^i) is
 * sum(c_i * p^i), where g is the class of x modulo the generator polynomial;
 * this fixes the integer encoding used by every serialized format.  The
 * built-in generator polynomials are the Conway polynomials for the supported
 * range (p <= 13, q <= 81).  They can be overridden through the environment
 * variable FLIFT_FQ_MODULUS, e.g. "p=3,m=2:2,2" (coefficients of the monic
 * modulus, low degree first, leading 1 implicit).
 *
 * Fields are interned: Field::get(p, m) returns a stable pointer, and field
 * identity is pointer identity.
 */
class Field {
public:
    static const Field* get(int p, int m = 1);

    int p() const { return p_; }
    int m() const { return m_; }
    long q() const { return q_; }

    // modulus coefficients, low degree first, without the leading 1
    const std::vector<int>& modulus() const { return mod_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long e) const;
    int from_int(long n) const;                 // image of n under Z -> F_q
    int frobenius(int a) const { return pow_p(a, 1); }
    int frobenius_inverse(int a) const { return pow_p(a, m_ - 1); }
    int pow_p(int a, int k) const;              // a^(p^k)

    std::string to_string(int a) const;

private:
    Field(int p, int m, std::vector<int> mod);
    void check_irreducible() const;

    int p_, m_;
    long q_;
    std::vector<int> mod_;
    std::vector<int> mul_table_;   // q*q, built eagerly (q <= 81)
    std::vector<int> inv_table_;
};

/// Carry polynomial sum_{i=1}^{p-1} (1/p) C(p,i) a^i b^(p-i) evaluated in F_q.
int witt_carry(const Field* F, int a, int b);

/**
 * Extension F_{q^k} of a base Field, for splitting-field computations.
 * Elements are vectors of length k of base-field codes (polynomial basis for
 * a monic irreducible of degree k over F_q found deterministically).
 * The base field embeds as the constants.
 */
class ExtField {
public:
    ExtField(const Field* base, int k);

    const Field* base() const { return base_; }
    int k() const { return k_; }
    int p() const { return base_->p(); }

    using Elt = std::vector<int>;

    Elt zero() const { return Elt(k_, 0); }
    Elt embed(int a) const;                     // base field constant
    Elt gen() const;                            // class of x
    bool is_zero(const Elt& a) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt mul_base(const Elt& a, int c) const;
    Elt frobenius(const Elt& a) const;          // x -> x^p

    // F_p-vector-space structure: dimension and basis index <-> element
    int fp_dim() const { return k_ * base_->m(); }
    Elt fp_basis(int i) const;
    std::vector<int> fp_coords(const Elt& a) const;   // digits mod p

private:
    Elt reduce(std::vector<int> c) const;       // length < 2k input

    const Field* base_;
    int k_;
    std::vector<int> mod_;                      // degree k, low first, monic (leading 1 implicit)
};

} // namespace flift
