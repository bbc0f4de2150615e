#pragma once

#include "flift/fan.hpp"
#include "flift/intlin.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace flift {

/**
 * The Q-divisor Delta of a Frobenius lifting tracked along torus-equivariant
 * blow-downs of a surface: a smooth complete surface fan with a rational
 * coefficient in (0,1] on each boundary ray.  Validity requires Delta ~ -K,
 * i.e. the coefficients differ from 1 by a linear function of the rays.
 */
class SurfaceDeltaState {
public:
    SurfaceDeltaState(Fan fan, std::vector<Rat> coeffs, std::vector<std::string> history = {});
    static SurfaceDeltaState full_boundary(Fan fan);

    const Fan& fan() const { return fan_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const std::vector<std::string>& history() const { return history_; }

    /// checks coefficients in (0,1] and Delta ~ -K; throws on violation
    void validate() const;

private:
    Fan fan_;
    std::vector<Rat> coeffs_;
    std::vector<std::string> history_;
};

struct DescentRefusal {
    std::string reason;
};

/**
 * Blow up a torus-fixed point of the state's surface (a maximal cone),
 * pulling Delta back by pi* Delta - E.  Per the blow-down criterion this is
 * possible only when the center is a singular point of the reduced divisor
 * (both branches carry coefficient one); otherwise the operation refuses.
 * The `smooth_point_of_floor` flag requests a blow-up at a smooth point of
 * the floor divisor on a single branch, which always refuses.
 */
std::variant<SurfaceDeltaState, DescentRefusal> blowup_delta_descent(
    const SurfaceDeltaState& state, const std::set<int>& corner,
    bool smooth_point_of_floor = false);

/**
 * The Hirzebruch identities for Delta = Delta' + C + Delta^v on F_n:
 * Delta'.C = 0 and Delta'.G = 1, derived from the intersection numbers.
 */
struct HirzebruchIdentities {
    int n;
    Rat delta_prime_dot_c;
    Rat delta_prime_dot_g;
    bool product_decomposition_ok;   // n = 0: -K = pr1* (-K_P1) + pr2* (-K_P1)
};
HirzebruchIdentities hirzebruch_delta_constraints(int n);

} // namespace flift
