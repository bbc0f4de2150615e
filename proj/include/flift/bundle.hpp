#pragma once

#include "flift/laurent.hpp"
#include "flift/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flift {

/**
 * Square matrix of Laurent polynomials: the transition, from the chart at 0
 * to the chart at infinity, of a rank-r bundle on P^1.  Invertible over
 * k[t, t^{-1}] iff the determinant is a monomial.
 */
struct LaurentTransitionMatrix {
    int r = 0;
    std::vector<std::vector<Laurent>> m;

    LaurentTransitionMatrix() = default;
    LaurentTransitionMatrix(const Field* F, int r_);
    Laurent det() const;
    bool invertible() const;
};

/// Multiset a_1 >= ... >= a_r with M = U diag(t^{a_i}) V, U in GL(k[t]),
/// V in GL(k[t^{-1}]).
struct SplittingType {
    std::vector<int64_t> a;   // descending
    int64_t sum() const;
    int64_t max() const { return a.front(); }
};

/**
 * Birkhoff factorization by exact pivot reduction.  The factorization is
 * certified internally: the accumulated U and V are checked to be honest
 * units and U M V is checked to equal the diagonal before returning.
 */
SplittingType splitting_type(const LaurentTransitionMatrix& m);

/// true iff max a_i <= 0: the type admits an injection F*E -> E
bool nef_obstruction(const SplittingType& t, int p);

/**
 * Restriction of Omega^1_{P^2}(log D) to a parametrized rational curve.
 * The divisor is a list of homogeneous components in (x0, x1, x2); the curve
 * is three homogeneous degree-d forms in (s, t), normalized so that phi_0(1,t)
 * is a nonzero constant and phi_1(1,t) has full degree d (the two standard
 * charts of P^2 then cover the curve).
 */
struct CurveInP2 {
    const Field* F;
    int64_t degree;
    std::vector<Poly> phi;   // three forms in two variables
};
LaurentTransitionMatrix restrict_log_cotangent(const std::vector<Poly>& divisor_components,
                                               const CurveInP2& curve);

/// v -> A v^{[p]} with A over F_q
struct SemilinearMap {
    const Field* F;
    int r;
    std::vector<std::vector<int>> a;

    SemilinearMap(const Field* F_, std::vector<std::vector<int>> a_);
    bool invertible() const;
    SemilinearMap transposed() const;
};

struct FixedPointCount {
    int64_t count;                             // p^dim
    int dim;                                   // F_p-dimension of the solution space
    std::vector<std::vector<std::vector<int>>> basis;  // vectors of ExtField elements
};

/// solutions of v = A v^{[p]} over F_{q^m}, by the F_p-linear kernel
FixedPointCount semilinear_fixed_points(const SemilinearMap& a, int m);

struct StabilizedCount {
    int64_t count;
    int field_degree;    // the m at which the count was taken
    bool cap_hit;        // the search hit the cap before stabilizing
};

/**
 * Fixed-point count over a splitting field.  For invertible A the arithmetic
 * Frobenius acts on the p^r geometric solutions through the matrix
 * (A A^[p] ... A^[p^(e-1)])^{-1}, so the exact splitting degree is the
 * multiplicative order of that matrix; the count is then confirmed by the
 * direct solve at that degree.
 */
StabilizedCount stabilized_fixed_points(const SemilinearMap& a, int cap = 512);

/// the xi matrix of a chart evaluated at points: Jacobian identity and fibers
struct EtaleCheckReport {
    bool jacobian_is_identity;
    struct Sample {
        std::vector<int> point;
        bool det_nonzero;
        int64_t fiber_count;
    };
    std::vector<Sample> samples;
};
EtaleCheckReport etale_fixed_scheme_check(const std::vector<std::vector<Poly>>& xi_matrix,
                                          const std::vector<std::vector<int>>& sample_points);

} // namespace flift
