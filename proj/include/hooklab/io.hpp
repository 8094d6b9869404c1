#pragma once

// JSON and CSV renderings of the exact types. Rationals are always strings
// ("3", "-1/2") so that no value passes through a floating-point number.

#include <nlohmann/json.hpp>

#include <string>

#include "hooklab/functional.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/poly.hpp"
#include "hooklab/series.hpp"

namespace hooklab {

/// Coefficient strings, lowest degree first; the zero polynomial is ["0"].
nlohmann::json poly_to_json(const Poly& p);
/// Inverse of poly_to_json. Throws std::invalid_argument on malformed input.
Poly poly_from_json(const nlohmann::json& j);

/// "c0;c1;..." for CSV cells.
std::string poly_to_csv_cell(const Poly& p);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// { "truncation": N, "coeffs": [ [t-poly coeff strings], ... ] }
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

/// { "polynomial": [...], "degree": d, "samples": [n0, n1], "verified": bool }
nlohmann::json fit_report_to_json(const FitReport& report);

}  // namespace hooklab
