#pragma once

#include "hf/poly.hpp"
#include "hf/series.hpp"
#include "hf/ypoly.hpp"

#include <json.hpp>

#include <string>

namespace hf::text {

using nlohmann::json;

/// Poly as a lowest-degree-first array of rational strings:
/// x^2 - x + 1/6  ->  ["1/6","-1","1"]. The zero polynomial is [].
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

/// YPoly as an array (by y-degree) of Poly arrays.
json ypoly_to_json(const YPoly& p);
YPoly ypoly_from_json(const json& j);

/// {"var":..., "min_exp":..., "order":..., "coeffs":[Poly...], "log":Poly}
json series_to_json(const TruncSeries& s);

std::string poly_latex(const Poly& p);
std::string rational_latex(const Rational& r);
std::string ypoly_latex(const YPoly& p);

/// Decimal digits grouped in threes with LaTeX thin spaces, e.g. 4\,320.
std::string group_digits_latex(const std::string& digits);

}  // namespace hf::text
