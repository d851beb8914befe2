#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "donoghue/herglotz.hpp"
#include "donoghue/measure.hpp"

namespace donoghue {

using Json = nlohmann::json;

/// {"atoms": [{"lambda": <real>, "weight": <positive real>}, ...]}
DiscreteMeasure measure_from_json(const Json& j);
Json measure_to_json(const DiscreteMeasure& m);

/// {"Q": <real>, "measure": {...}}
PerturbedHerglotz function_from_json(const Json& j);
Json function_to_json(const PerturbedHerglotz& f);

/// Complex values travel as [re, im].
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Reads and parses a JSON file; throws std::invalid_argument on bad input.
Json load_json_file(const std::string& path);

} // namespace donoghue
