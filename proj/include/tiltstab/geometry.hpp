#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "tiltstab/rational.hpp"

namespace tiltstab {

// Numeric skeleton of a polarized smooth projective threefold (X, L):
// d = L^3 in point-class units, plus optional canonical-class pairings
// K_X.C for named curve classes. Immutable after construction.
struct PolarizedGeometry {
  std::int64_t d = 1;
  std::shared_ptr<const std::map<std::string, std::int64_t>> kx_pairings;

  bool kx_available() const { return kx_pairings != nullptr; }
  std::optional<std::int64_t> kx_pairing(const std::string& curve) const;
};

// Throws InvalidGeometry unless d >= 1.
PolarizedGeometry make_geometry(std::int64_t d);
PolarizedGeometry make_geometry(std::int64_t d, std::map<std::string, std::int64_t> kx_pairings);

// Curve class measured against L: degree L.C, and (optionally) K_X.C and
// ch_3(O_C) when the application needs genus or ideal-sheaf data.
struct CurveClassData {
  Rat deg_lc;
  std::optional<std::int64_t> kxc;
  std::optional<Rat> ch3_oc;
};

}  // namespace tiltstab
