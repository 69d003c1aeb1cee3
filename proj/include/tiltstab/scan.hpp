#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tiltstab/reider.hpp"
#include "tiltstab/tilt.hpp"

namespace tiltstab::scan {

enum class Format { csv, json, svg };

// Tabulated walls of the candidates against the extension class.
struct WallRow {
  std::string label;
  tilt::WallResult wall;
  std::string note;  // e.g. "infinite slope" when the wall equation degenerates
};

struct WallTable {
  struct Meta {
    std::int64_t d = 0;
    std::int64_t alpha = 0;
    Rat b;
  };

  Meta meta;
  std::vector<WallRow> rows;
};

bool operator==(const WallTable& a, const WallTable& b);

// One row per (label, untwisted class) candidate: the wall against the
// extension class at twist b. A degenerate slope becomes a no-wall row
// with a note; the table is never aborted. Labels must be unique.
WallTable wall_scan(const PolarizedGeometry& geom, std::int64_t alpha,
                    const std::vector<std::pair<std::string, chern::NumClass>>& candidates,
                    const Rat& b = tilt::half());

// Failing tuples of the Fujita grid scan, sorted lexicographically.
// Throws EmptyGrid when grid_bound < 1.
std::vector<reider::FujitaTuple> counterexample_search(std::int64_t m, std::int64_t alpha,
                                                       std::int64_t grid_bound,
                                                       std::int64_t min_d = 1,
                                                       unsigned workers = 1);

// Byte-deterministic emitters. CSV uses UTF-8 with LF endings and the
// header `candidate,t_wall`; JSON writes rationals as integers or "p/q"
// strings; SVG is a static 1.1 document (walls on the t-axis, or the
// (kappa, bound) curve). Throws UnsupportedFormat where noted.
std::string emit(const WallTable& table, Format format);
std::string emit(const std::vector<reider::FujitaTuple>& tuples, Format format);  // csv/json only
std::string emit(const reider::ConditionReport& report, Format format);           // csv/json only
std::string emit(const reider::L5Report& report, Format format);                  // csv/json only

// The (kappa, 12a + (kappa^2+36a^2)/kappa) bound curve on (0, 6 alpha],
// plotted as SVG with the kappa = alpha, bound = 49 alpha point marked.
struct ReiderCurve {
  std::int64_t alpha = 1;
};

std::string emit(const ReiderCurve& curve, Format format);  // svg only

// Inverse of emit(WallTable, json); round-trips exactly.
WallTable parse_wall_table(const std::string& json_text);

}  // namespace tiltstab::scan
