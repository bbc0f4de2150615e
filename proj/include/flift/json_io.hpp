#pragma once

#include "flift/bundle.hpp"
#include "flift/cartier.hpp"
#include "flift/fan.hpp"
#include "flift/poly.hpp"
#include "flift/witt.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace flift {

using json = nlohmann::json;

/**
 * Polynomial wire format:
 *   {"p":3, "q":3, "vars":["x","y"], "terms":[{"e":[2,0], "c":[1,0]}]}
 * Coefficients are [a0] for F_q polynomials and [a0,a1] for W_2 coefficients;
 * field elements are integer codes in the documented representation.
 */
json poly_to_json(const Poly& f, const std::vector<std::string>& vars = {});
Poly poly_from_json(const json& j);
json w2poly_to_json(const W2Polynomial& f, const std::vector<std::string>& vars = {});
W2Polynomial w2poly_from_json(const json& j);

/// Fan wire format: {"rank":2, "rays":[[1,0],...], "cones":[[0,1],...]}
json fan_to_json(const Fan& fan);
Fan fan_from_json(const json& j);

/// named catalog fans: P^n (n<=3), F_n (n<=3), (P^1)^k, toric del Pezzos
Fan catalog_fan(const std::string& name);
std::vector<std::string> catalog_fan_names();

/// splitting witness: {"points":[["0",1],["1",1]], "infty":0, "denominator":1}
json divisor_witness_to_json(const SplittingDivisorP1& d);

/// Laurent matrix entries as {"num": {exp: coeff, ...} sparse, "tval": shift}
json laurent_matrix_to_json(const LaurentTransitionMatrix& m);
LaurentTransitionMatrix laurent_matrix_from_json(const Field* F, const json& j);

} // namespace flift
