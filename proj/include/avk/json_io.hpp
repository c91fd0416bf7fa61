#pragma once

#include <json.hpp>
#include <string>

#include "avk/arrangements.hpp"
#include "avk/bounds.hpp"
#include "avk/curves.hpp"
#include "avk/euler.hpp"
#include "avk/localforms.hpp"
#include "avk/morsify.hpp"
#include "avk/resolution.hpp"

namespace avk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "avk-1";

// Parses text; malformed input raises InputError with the byte position.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);
// Rejects a "schema" field naming anything other than avk-1.
void check_schema(const Json& j, const std::string& what);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& what);

Json form_to_json(const SquareForm& f);
SymmetricForm form_from_json(const Json& j);
Json inertia_to_json(const InertiaTriple& t);

Json diagram_to_json(const AGDiagram& d);
AGDiagram diagram_from_json(const Json& j);

Json sectors_to_json(const SectorSystem& s);
SectorSystem sectors_from_json(const Json& j);

Json complex_to_json(const SimplicialComplex& k, const ConstructibleFunction& f);
std::pair<SimplicialComplex, ConstructibleFunction> complex_from_json(const Json& j);

Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);
Json surface_data_to_json(const BoundarySurfaceData& b);
BoundarySurfaceData surface_data_from_json(const Json& j);

Json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);
Json phi_to_json(const PhiResult& p);

Json curve_model_to_json(const CurveModel& m);
CurveModel curve_model_from_json(const Json& j);

// Numbers become values, arrays become tables; "points" holds per-singularity data.
Json invariants_to_json(const CurveInvariants& ci);
CurveInvariants invariants_from_json(const Json& j);
Json bundle_to_json(const InvariantBundle& b);
InvariantBundle bundle_from_json(const Json& j);

Json report_to_json(const BoundsReport& r);

}  // namespace avk
