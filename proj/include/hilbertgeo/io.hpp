#pragma once

#include "hilbertgeo/domains.hpp"
#include "hilbertgeo/hilbert_metric.hpp"

#include "json.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hilbertgeo::io {

using Json = nlohmann::ordered_json;

/// {"type": "triangle"|"ellipse"|"polygon"|"quadrant", ...}
///   triangle: "vertices": three [x, y] or [x, y, z]
///   ellipse:  "center": [x, y], "shape": [[a, b], [c, d]] (defaults: origin, identity)
///   polygon:  "vertices": [[x, y], ...] counterclockwise
std::shared_ptr<const ConvexDomain> parse_domain(const Json& j);
std::shared_ptr<const ConvexDomain> parse_domain_text(const std::string& text);
Json domain_to_json(const ConvexDomain& dom);

/// [x, y] or [x, y, z].
ProjPoint parse_point(const Json& j);
std::vector<ProjPoint> parse_points(const Json& j);
/// JSON text, or a bare comma list "x,y".
Vec2 parse_vec2(const std::string& text);

/// {"type": "polygon", "vertices": [...]} or, in a triangle domain,
/// {"type": "hex-circle", "radius": r, "center": [u, v]}.
Region parse_region(const Json& j, const ConvexDomain& dom);

/// Comma list "a,b,c" or "@file.json" holding a JSON array (or {"tau": [...]}).
std::vector<double> parse_real_list(const std::string& text);

Json parse_json(const std::string& text);

/// Numbers with 17 significant digits, non-finite numbers as null.
std::string dump(const Json& j);

/// Header row from the keys of the first object, one row per object.
std::string to_csv(const std::vector<Json>& rows);

}  // namespace hilbertgeo::io
