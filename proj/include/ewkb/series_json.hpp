#pragma once

#include <string>

#include <json.hpp>

#include "ewkb/eps_series.hpp"
#include "ewkb/puiseux.hpp"

namespace ewkb {

using json = nlohmann::ordered_json;

// {"min_exp": "p/q", "trunc": "p/q" | "inf", "coeffs": [["p/q", [re, im]], ...]}
// Exact parts are rational strings; float parts are strings with a leading '~'.
// A bare coeffs array is accepted on input and read as an exact polynomial (trunc = inf).
json series_to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const json& j);

json coefficient_to_json(const Coefficient& c);
Coefficient coefficient_from_json(const json& j);

json eps_series_to_json(const EpsSeries& e);

// Inline JSON text, or a path to a file containing it.
PuiseuxSeries parse_series_arg(const std::string& arg);

json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);

}  // namespace ewkb
