#pragma once

#include "flift/fan.hpp"

#include <map>
#include <string>
#include <vector>

namespace flift {

/// Torus-invariant divisor sum a_rho * D_rho on the toric variety of a fan.
struct ToricDivisor {
    const Fan* fan;
    std::vector<int64_t> coeffs;   // one per ray

    ToricDivisor(const Fan* f, std::vector<int64_t> a);
    static ToricDivisor canonical(const Fan* f);    // K = -sum D_rho
    ToricDivisor operator+(const ToricDivisor& o) const;
    ToricDivisor operator-(const ToricDivisor& o) const;
    ToricDivisor scaled(int64_t c) const;
};

/// Lattice points m with <m, v_rho> >= -a_rho: the global sections of O(D).
struct SectionLattice {
    std::vector<ZVec> points;
    size_t h0() const { return points.size(); }
};

/// H^0 by lattice-point enumeration; requires a complete fan.
SectionLattice global_sections(const ToricDivisor& d);

/// h^i(X, O(D)) through per-character reduced cohomology of support
/// subcomplexes; smooth complete fans of rank <= 3.
int64_t cohomology(const ToricDivisor& d, int i);

/// chi(D) = chi(O) + (1/2) D.(D - K) on a smooth complete surface.
int64_t riemann_roch_surface(const ToricDivisor& d);

/// strict convexity of the support function across every wall
bool ample_test(const ToricDivisor& d);

/// per-(i,j) verdicts for H^j(X, Omega^i(log D) (x) L) with D the full
/// boundary: the log cotangent sheaf is free, so the check reduces to h^j(L)
struct BottVanishingReport {
    bool ample = false;
    std::vector<std::vector<int64_t>> h;   // h[i][j], 0 <= i,j <= rank
    bool all_vanish = true;                 // for j > 0
    std::string note;
};
BottVanishingReport bott_vanishing_log(const ToricDivisor& ample_divisor);

/// h^1 of every Z-combination of the given divisors inside a box window
struct FlatnessReport {
    bool criterion_holds = true;
    std::vector<std::pair<std::vector<int64_t>, int64_t>> violations;  // multidegree -> h1
};
FlatnessReport section_ring_flatness(const Fan* fan, const std::vector<ToricDivisor>& ls,
                                     const std::vector<std::pair<int64_t, int64_t>>& window);

} // namespace flift
