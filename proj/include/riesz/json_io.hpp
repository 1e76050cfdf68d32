#ifndef RIESZ_JSON_IO_HPP
#define RIESZ_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "riesz/abscissa.hpp"
#include "riesz/series.hpp"
#include "riesz/transforms.hpp"

namespace riesz {

using json = nlohmann::json;

/// Frequency schema:
///   {"label": str, "prefix": [float], "generator": {"kind": "power"|"log"|"sqrtlog"|"none"}}
json to_json(const Frequency& f);
Frequency frequency_from_json(const json& j);

/// Series schema:
///   {"label": str, "frequency": <frequency>, "germ_order": float|null,
///    "coefficients": {"kind": "table"|"alternating"|"ones"|"expr", "data": ...}}
/// table data: array of numbers or [re, im] pairs (indices past the table are 0);
/// expr data: {"name": "power", "exponent": c} for a_n = n^c, or
///            {"name": "exp", "rate": r} for a_n = e^(r n).
json series_to_json_schema_doc();
DirichletSeries series_from_json(const json& j);

json to_json(const AbscissaEstimate& est);
json to_json(const TransformResult& res);
json to_json(const ConvergenceReport& rep);

/// Complex literals of the CLI form "a+bi" (also "a", "bi", "a-bi").
cplx parse_complex(const std::string& text);
std::string format_complex(cplx z);

json complex_to_json(cplx z); // [re, im]

} // namespace riesz

#endif
