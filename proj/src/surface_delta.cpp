#include "flift/surface_delta.hpp"

#include <stdexcept>
#include <variant>

namespace flift {

SurfaceDeltaState::SurfaceDeltaState(Fan fan, std::vector<Rat> coeffs,
                                     std::vector<std::string> history)
    : fan_(std::move(fan)), coeffs_(std::move(coeffs)), history_(std::move(history)) {
    if ((int)coeffs_.size() != fan_.ray_count())
        throw std::invalid_argument("coefficient count must match ray count");
    validate();
}

SurfaceDeltaState SurfaceDeltaState::full_boundary(Fan fan) {
    std::vector<Rat> c(fan.ray_count(), Rat(1));
    return SurfaceDeltaState(std::move(fan), std::move(c));
}

void SurfaceDeltaState::validate() const {
    if (fan_.rank() != 2) throw std::invalid_argument("surface states only");
    for (const auto& c : coeffs_)
        if (!(c > Rat(0)) || c > Rat(1))
            throw std::invalid_argument("Delta coefficient outside (0,1]");
    // Delta ~ -K iff q_rho - 1 = <m, v_rho> for a single rational m
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (int i = 0; i < fan_.ray_count(); ++i) {
        a.push_back({Rat(fan_.ray(i)[0]), Rat(fan_.ray(i)[1])});
        b.push_back(coeffs_[i] - Rat(1));
    }
    std::vector<Rat> m;
    if (!solve_rational(a, b, m))
        throw std::invalid_argument("Delta is not linearly equivalent to -K");
}

std::variant<SurfaceDeltaState, DescentRefusal> blowup_delta_descent(
    const SurfaceDeltaState& state, const std::set<int>& corner, bool smooth_point_of_floor) {
    const Fan& fan = state.fan();
    if (smooth_point_of_floor) {
        // a smooth point of the floor lies on one branch with coefficient one
        // and snc support; the blow-down criterion demands a singular point
        return DescentRefusal{"center is a smooth point of the reduced divisor; "
                              "a Frobenius lifting cannot descend through this blow-up"};
    }
    for (int i : corner)
        if (i < 0 || i >= fan.ray_count())
            throw std::invalid_argument("center outside the surface");
    if (corner.size() != 2 || !fan.has_cone(corner))
        return DescentRefusal{"center is not a torus-fixed point of the surface"};
    auto it = corner.begin();
    int r1 = *it++, r2 = *it;
    // E appears in pi* Delta with coefficient q1 + q2; Delta_Y = pi* Delta - E
    Rat e_coeff = state.coeffs()[r1] + state.coeffs()[r2] - Rat(1);
    if (e_coeff != Rat(1))
        return DescentRefusal{"center is not a singular point of the reduced divisor "
                              "(both branches need coefficient one)"};
    Fan sub = star_subdivision(fan, corner);
    std::vector<Rat> coeffs = state.coeffs();
    coeffs.push_back(e_coeff);
    auto history = state.history();
    history.push_back("blow up corner (" + std::to_string(r1) + "," + std::to_string(r2) + ")");
    return SurfaceDeltaState(std::move(sub), std::move(coeffs), std::move(history));
}

HirzebruchIdentities hirzebruch_delta_constraints(int n) {
    if (n < 0) throw std::invalid_argument("Hirzebruch index must be nonnegative");
    HirzebruchIdentities out;
    out.n = n;
    Fan fan = Fan::hirzebruch(n);
    auto si = toric_surface_intersections(fan);
    int r = fan.ray_count();
    // rays: 0 = fiber G1, 1 = negative section C, 2 = fiber G2, 3 = section C'
    std::vector<Rat> C(r, Rat(0)), G(r, Rat(0)), K(r, Rat(-1)), Dv(r, Rat(0));
    C[1] = Rat(1);
    G[0] = Rat(1);
    Dv[0] = Rat(1);
    Dv[2] = Rat(1);
    // Delta' = -K - C - Delta^v as a class
    std::vector<Rat> Dp(r);
    for (int i = 0; i < r; ++i) Dp[i] = -K[i] - C[i] - Dv[i];
    out.delta_prime_dot_c = si.pair(Dp, C);
    out.delta_prime_dot_g = si.pair(Dp, G);
    // n = 0: -K = 2 G1 + 2 G2 splits into the two pullbacks
    out.product_decomposition_ok = true;
    if (n == 0) {
        std::vector<Rat> minus_k(r, Rat(1));
        std::vector<Rat> pr1(r, Rat(0)), pr2(r, Rat(0));
        pr1[0] = pr1[2] = Rat(1);   // two fibers of the first projection
        pr2[1] = pr2[3] = Rat(1);
        // classes agree iff the difference pairs to zero with every ray
        for (int i = 0; i < r; ++i) {
            std::vector<Rat> di(r, Rat(0));
            di[i] = Rat(1);
            Rat lhs = si.pair(minus_k, di);
            Rat rhs = si.pair(pr1, di) + si.pair(pr2, di);
            if (lhs != rhs) out.product_decomposition_ok = false;
        }
    }
    return out;
}

} // namespace flift
