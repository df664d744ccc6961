#pragma once

#include "wg/poly.hpp"

#include <json.hpp>

namespace wg {

// Coefficient lists are ascending by degree; integer coefficients that fit
// in 64 bits serialize as JSON numbers, anything else as "p/q" strings.
nlohmann::json poly_to_json(const PolyQ& p);
PolyQ poly_from_json(const nlohmann::json& j);

nlohmann::json ratfunc_to_json(const RatFuncQ& f);  // {"num": [...], "den": [...]}
RatFuncQ ratfunc_from_json(const nlohmann::json& j);

}  // namespace wg
