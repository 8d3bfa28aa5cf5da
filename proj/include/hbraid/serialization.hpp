#pragma once

#include <json.hpp>

#include "hbraid/artin.hpp"
#include "hbraid/reduced_polynomial.hpp"

namespace hbraid {

// [{"m": [indices...], "c": "<integer>"}, ...] in canonical monomial order.
nlohmann::json to_json(const ReducedPolynomial& p);
ReducedPolynomial polynomial_from_json(const nlohmann::json& j, int strands);

// {"n": n, "images": ["x2' x1 x2", ...]}.
nlohmann::json to_json(const Endomorphism& f);
Endomorphism endomorphism_from_json(const nlohmann::json& j);

} // namespace hbraid
