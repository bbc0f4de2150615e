#pragma once

#include "flift/forms.hpp"
#include "flift/lift.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace flift {

/**
 * Inverse Cartier operator on (log) j-forms: determined by
 * C^{-1}(dx) = x^{p-1} dx, C^{-1}(dlog x) = dlog x, multiplicativity on
 * wedges, and semilinearity C^{-1}(g w) = g^p C^{-1}(w).  Output is closed.
 */
LogForm cartier_inverse(const LogForm& omega);

/// Decomposition of a closed polynomial 1-form: omega = sum g_k^p x_k^{p-1} dx_k + dh.
struct CartierDecomposition {
    std::vector<Poly> g;   // one per variable
    Poly h;
};
CartierDecomposition cartier_decompose(const LogForm& omega);

/// Cartier operator on closed polynomial 1-forms; throws if d(omega) != 0.
LogForm cartier(const LogForm& omega);

/// C(xi(w)) == w for `trials` pseudorandom polynomial 1-forms on the chart.
bool xi_splits_cartier(const FrobeniusLiftChart& chart, int trials, uint64_t seed = 1);

/// pseudorandom polynomial over F_q (used by the randomized checks)
Poly random_poly(const Field* F, int nvars, int64_t max_deg, std::mt19937_64& rng,
                 int terms = 4);

/**
 * Section of omega_{P^n}^{1-p}: a homogeneous polynomial of degree
 * (n+1)(p-1) in n+1 variables.
 */
struct SplittingSection {
    const Field* F;
    int n;
    Poly s;
    SplittingSection(const Field* F_, int n_, Poly s_);
};

/// Frobenius splitting criterion on P^n: nonzero coefficient at (x_0...x_n)^(p-1).
bool splits_Pn(const SplittingSection& s);
/// the coefficient itself (the quantity the P^1 lemma computes)
int splitting_coefficient(const SplittingSection& s);

/// Fedder's criterion for the hypersurface V(f) at a rational point.
bool fedder_hypersurface(const Poly& f, const std::vector<int>& point);

/**
 * Effective Q-divisor on P^1 with denominator p-1: support on the F_p-rational
 * affine points 0..p-1 and at infinity.  Coefficients are the integer
 * multiplicities of (p-1) * Delta.
 */
struct SplittingDivisorP1 {
    int p;
    std::vector<int> affine_mult;   // multiplicity of (i) for i = 0..p-1
    int infty_mult;

    /// validation: coefficients of Delta in (0,1], degree of Delta equals 2
    void validate() const;
};

struct InvariantSplittingResult {
    std::optional<SplittingDivisorP1> witness;
    int coefficient_at_candidate;   // coefficient of x^{p-1}y^{p-1} in the orbit candidate
    bool p2_discrepancy;            // true when p = 2 and the candidate splits
};

/**
 * Exhaustive search for a translation-invariant F-splitting divisor on P^1:
 * effective divisors of degree 2(p-1), coefficients <= p-1, invariant under
 * x -> x+1 (so supported on the full F_p-orbit plus infinity).
 */
InvariantSplittingResult invariant_splitting_search_P1(const Field* F);

} // namespace flift
