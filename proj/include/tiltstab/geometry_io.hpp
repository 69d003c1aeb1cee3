#pragma once

#include <string>
#include <vector>

#include "tiltstab/chern.hpp"
#include "tiltstab/geometry.hpp"

namespace tiltstab {

// Parsed geometry file: the polarization degree plus the user's candidate
// divisor and curve classes for the condition checks.
struct LoadedGeometry {
  PolarizedGeometry geom;
  std::vector<chern::C1Data> divisors;
  std::vector<CurveClassData> curves;
};

// Strict-schema JSON loader:
//   {"d": <positive integer or "p/q">,
//    "divisors": [{"L2D": rat, "LD2": rat, "integral"?: bool}, ...],
//    "curves":   [{"LC": rat, "KXC"?: int, "ch3OC"?: rat}, ...]}
// Unknown fields are rejected with the offending JSON-pointer location.
// Rationals are integers or "p/q" strings. Throws NotFound, SchemaError,
// or HodgeIndexViolation (with the divisor index).
LoadedGeometry load_geometry(const std::string& path);

// Same schema, from an in-memory document.
LoadedGeometry parse_geometry_text(const std::string& json_text);

}  // namespace tiltstab
