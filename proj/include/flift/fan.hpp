#pragma once

#include "flift/intlin.hpp"
#include "flift/lift.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace flift {

/**
 * Rational polyhedral fan in Z^n, n <= 3: primitive ray generators plus
 * simplicial cones given as ray-index sets.  Constructed from the maximal
 * cones; faces are closed over automatically.  Validated eagerly.
 */
class Fan {
public:
    Fan(int rank, std::vector<ZVec> rays, std::vector<std::set<int>> max_cones);

    int rank() const { return rank_; }
    int ray_count() const { return (int)rays_.size(); }
    const std::vector<ZVec>& rays() const { return rays_; }
    const ZVec& ray(int i) const { return rays_[i]; }
    const std::vector<std::set<int>>& max_cones() const { return max_cones_; }
    const std::set<std::set<int>>& cones() const { return cones_; }
    bool has_cone(const std::set<int>& c) const { return cones_.count(c) > 0; }

    /// exact membership of a lattice vector in the cone spanned by the rays of c
    bool cone_contains(const std::set<int>& c, const ZVec& v) const;
    /// index of the maximal cone containing v, if any
    std::optional<int> containing_max_cone(const ZVec& v) const;

    int ray_index(const ZVec& v) const;  // -1 when absent

    // named fans
    static Fan projective_space(int n);
    static Fan hirzebruch(int n);
    static Fan product_p1(int factors);      // (P^1)^k, k <= 3
    static Fan affine_line();
    static Fan del_pezzo(int blowups);       // Bl_k P^2 at torus-fixed points, k <= 3

private:
    void validate() const;

    int rank_;
    std::vector<ZVec> rays_;
    std::vector<std::set<int>> max_cones_;
    std::set<std::set<int>> cones_;
};

bool is_smooth(const Fan& fan);
bool is_smooth_cone(const Fan& fan, const std::set<int>& cone);
bool is_complete(const Fan& fan);

/// star subdivision at a smooth cone: barycentric ray added, cone replaced
Fan star_subdivision(const Fan& fan, const std::set<int>& cone);

struct FanAutomorphismGroup {
    std::vector<ZMat> matrices;   // unimodular, permuting rays and cones
    size_t order() const { return matrices.size(); }
};

/// all unimodular symmetries of a complete fan, rank <= 3
FanAutomorphismGroup fan_automorphisms(const Fan& fan);

/// unimodular isomorphism between two fans, if one exists
std::optional<ZMat> fan_isomorphism(const Fan& a, const Fan& b);

/**
 * Witness for the multiplication-by-p Frobenius lifting of a toric variety:
 * v -> p*v maps every cone into itself and induces the standard lifting
 * x -> x^p on every chart.
 */
struct MultiplicationByPWitness {
    int p;
    bool cones_preserved;                         // p * sigma subset sigma, all cones
    std::vector<FrobeniusLiftChart> charts;       // one per maximal cone (standard lifts)
    std::string monomial_action;                  // x^m -> x^{pm}
};
MultiplicationByPWitness multiplication_by_p_witness(const Fan& fan, const Field* F);

/**
 * Intersection numbers D_i . D_j of the toric boundary divisors of a smooth
 * complete surface fan.  Entry (i,i) is -b_i from the wheel relation
 * v_{prev} + v_{next} = b_i v_i; off-diagonal entries are 1 for cyclically
 * adjacent rays and 0 otherwise.  Indices follow the fan's ray order.
 */
struct SurfaceIntersections {
    std::vector<int> cyclic_order;       // ray indices in cyclic order
    std::vector<std::vector<Rat>> pairing;

    Rat pair(const std::vector<Rat>& d1, const std::vector<Rat>& d2) const;
};
SurfaceIntersections toric_surface_intersections(const Fan& fan);

/// cyclic (counterclockwise) order of the rays of a rank-2 fan, exact
std::vector<int> cyclic_ray_order(const std::vector<ZVec>& rays);

} // namespace flift
