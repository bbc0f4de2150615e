#pragma once

#include "flift/forms.hpp"
#include "flift/witt.hpp"

#include <optional>
#include <set>
#include <vector>

namespace flift {

/**
 * An affine chart A^n with a Frobenius lifting modulo p^2, recorded through
 * the coordinate images F*(x_i) = x_i^p + p*f_i.  The standard (toric) lift
 * has all f_i = 0.
 */
class FrobeniusLiftChart {
public:
    FrobeniusLiftChart(const Field* F, std::vector<Poly> images);
    static FrobeniusLiftChart standard(const Field* F, int n);

    const Field* field() const { return F_; }
    int dim() const { return n_; }
    const std::vector<Poly>& images() const { return images_; }

    /// pullback along the lifting: coefficients through sigma, variables
    /// through x_i -> x_i^p + p*f_i
    W2Polynomial frobenius_pullback(const W2Polynomial& g) const;

    /// delta of a W2 lift: the unique d with F*(g) = g^p + p*d
    Poly delta_of_lift(const W2Polynomial& g) const;
    /// delta of the canonical (Teichmuller-coefficient) lift of g
    Poly delta(const Poly& g) const;

    /// nu*(g) = (g mod p, delta(g)) as a Witt pair of polynomials
    std::pair<Poly, Poly> nu_star(const W2Polynomial& g) const;
    /// theta*(g0, g1) = lift(g0)^p + p*lift(g1)
    static W2Polynomial theta_star(const Poly& g0, const Poly& g1);

    /// xi = dF/p on (log) 1-forms; marked coordinates must define divisors
    /// compatible with the lifting
    LogForm xi(const LogForm& omega) const;

private:
    const Field* F_;
    int n_;
    std::vector<Poly> images_;
};

struct ThetaNuRoundtrip {
    W2Polynomial theta_after_nu;       // theta* . nu* applied to the lift: equals F*(lift)
    std::pair<Poly, Poly> nu_after_theta;  // nu* . theta* of (g0, g1): equals sigma(g0, g1)
    bool theta_nu_is_frobenius;
    bool nu_theta_is_sigma;
};

/// Checks both composition identities on a concrete input pair.
ThetaNuRoundtrip theta_nu_roundtrip(const FrobeniusLiftChart& chart, const Poly& g0,
                                     const Poly& g1);

/// F*(lift(h)) in (lift(h)^p)?  Returns the unit witness u with
/// F*(h~) = u * h~^p when compatible, std::nullopt otherwise.
std::optional<W2Polynomial> compatible_divisor_witness(const FrobeniusLiftChart& chart,
                                                        const Poly& h);
bool is_compatible_divisor(const FrobeniusLiftChart& chart, const Poly& h);

/// Blow-up criterion for a coordinate-subspace center I = (x_i : i in center):
/// true iff f_i lies in I^p for every i in the center.
bool is_compatible_blowup_center(const FrobeniusLiftChart& chart,
                                 const std::set<int>& center);

/**
 * Lifting of Frobenius on P^n given by degree-p homogeneous f_0..f_n:
 * (x_0 : ... : x_n) -> (x_0^p + p f_0 : ... : x_n^p + p f_n).
 */
struct ProjectiveLift {
    const Field* F;
    int n;
    std::vector<Poly> fs;   // n+1 homogeneous polynomials of degree p in n+1 variables

    ProjectiveLift(const Field* F_, int n_, std::vector<Poly> fs_);
    static ProjectiveLift standard(const Field* F, int n);

    /// induced chart lifting on U_j (x_j = 1), variables in original order with j dropped
    FrobeniusLiftChart chart(int j) const;
};

/// det(xi) of a chart lifting, an n x n determinant over F_q[x].
Poly chart_det_xi(const FrobeniusLiftChart& chart);

/**
 * The global section of omega_{P^n}^{1-p} cut out by det(xi): a homogeneous
 * polynomial of degree (n+1)(p-1) whose divisor is (p-1) * Delta.  Computed
 * chart by chart and verified to glue; throws if the charts disagree.
 */
Poly det_xi_divisor_Pn(const ProjectiveLift& lift);

} // namespace flift
