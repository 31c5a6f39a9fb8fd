#pragma once

#include <nlohmann/json_fwd.hpp>

#include "orbvortex/seifert.hpp"
#include "orbvortex/vortex.hpp"

namespace orbvortex {

// JSON schemas:
//   rational     {"num": p, "den": q}
//   surface      {"genus": g, "cone": [a1, ..., an]}
//   line bundle  {"deg_b": d, "isotropy": [b1, ..., bn]}
// A line bundle object carries no surface of its own; the enclosing report
// provides it. Reports mirror their structs field by field.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const OrbifoldSurface& s);
nlohmann::json to_json(const OrbifoldLineBundle& l);
nlohmann::json to_json(const FlatStatus& f);
nlohmann::json to_json(const ModuliReport& report);
nlohmann::json to_json(const SeifertMonopoleReport& report);
nlohmann::json to_json(const CriticalParameters& params);

Rational rational_from_json(const nlohmann::json& j);
OrbifoldSurface surface_from_json(const nlohmann::json& j);
OrbifoldLineBundle line_bundle_from_json(const nlohmann::json& j, const OrbifoldSurface& s);
ModuliReport moduli_report_from_json(const nlohmann::json& j);
SeifertMonopoleReport seifert_report_from_json(const nlohmann::json& j);

} // namespace orbvortex
