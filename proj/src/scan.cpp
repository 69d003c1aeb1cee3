#include "tiltstab/scan.hpp"

#include <set>

#include "tiltstab/error.hpp"

namespace tiltstab::scan {

bool operator==(const WallTable& a, const WallTable& b) {
  if (a.meta.d != b.meta.d || a.meta.alpha != b.meta.alpha || a.meta.b != b.meta.b) return false;
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const WallRow& x = a.rows[i];
    const WallRow& y = b.rows[i];
    if (x.label != y.label || !(x.wall == y.wall) || x.note != y.note) return false;
  }
  return true;
}

WallTable wall_scan(const PolarizedGeometry& geom, std::int64_t alpha,
                    const std::vector<std::pair<std::string, chern::NumClass>>& candidates,
                    const Rat& b) {
  WallTable table;
  table.meta = WallTable::Meta{geom.d, alpha, b};

  // Untwisted class of the extension object; wall() re-twists by b.
  chern::NumClass ext = chern::tensor_L(reider::extension_class(geom, alpha), tilt::half());

  std::set<std::string> seen;
  for (const auto& [label, cls] : candidates) {
    if (!seen.insert(label).second)
      fail(Errc::invalid_argument, "duplicate candidate label: " + label);
    WallRow row;
    row.label = label;
    try {
      row.wall = tilt::wall(cls, ext, b);
    } catch (const Error& err) {
      if (err.code() != Errc::infinite_slope) throw;
      row.wall = tilt::WallResult::none();
      row.note = "infinite slope";
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<reider::FujitaTuple> counterexample_search(std::int64_t m, std::int64_t alpha,
                                                       std::int64_t grid_bound,
                                                       std::int64_t min_d, unsigned workers) {
  if (grid_bound < 1) fail(Errc::empty_grid, "grid_bound must be >= 1");
  return reider::fujita_verify(m, alpha, grid_bound, min_d, workers).counterexamples;
}

}  // namespace tiltstab::scan
