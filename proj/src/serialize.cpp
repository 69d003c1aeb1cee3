#include <algorithm>
#include <cstdio>
#include <string>

#include "tiltstab/json_util.hpp"
#include "tiltstab/error.hpp"
#include "tiltstab/scan.hpp"

namespace tiltstab::scan {

namespace {

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string xml_escape(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Presentation-only decimal with a platform-independent rendering.
std::string svg_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* wall_kind_name(tilt::WallResult::Kind kind) {
  switch (kind) {
    case tilt::WallResult::Kind::wall: return "wall";
    case tilt::WallResult::Kind::no_wall: return "no_wall";
    case tilt::WallResult::Kind::always_equal: return "always_equal";
  }
  return "no_wall";
}

std::string wall_csv_value(const tilt::WallResult& wall) {
  switch (wall.kind) {
    case tilt::WallResult::Kind::wall: return rat_str(wall.t);
    case tilt::WallResult::Kind::no_wall: return "none";
    case tilt::WallResult::Kind::always_equal: return "always";
  }
  return "none";
}

std::string wall_table_csv(const WallTable& table) {
  std::string out = "candidate,t_wall\n";
  for (const WallRow& row : table.rows)
    out += csv_field(row.label) + "," + wall_csv_value(row.wall) + "\n";
  return out;
}

ojson wall_table_json(const WallTable& table) {
  ojson meta;
  meta["d"] = table.meta.d;
  meta["alpha"] = table.meta.alpha;
  meta["b"] = rat_to_json(table.meta.b);
  ojson rows = ojson::array();
  for (const WallRow& row : table.rows) {
    ojson r;
    r["candidate"] = row.label;
    r["kind"] = wall_kind_name(row.wall.kind);
    if (row.wall.kind == tilt::WallResult::Kind::wall) r["t"] = rat_str(row.wall.t);
    if (!row.note.empty()) r["note"] = row.note;
    rows.push_back(std::move(r));
  }
  ojson doc;
  doc["meta"] = std::move(meta);
  doc["rows"] = std::move(rows);
  return doc;
}

std::string wall_table_svg(const WallTable& table) {
  const double width = 640, margin = 48;
  const double height = 120 + 16.0 * static_cast<double>(table.rows.size());
  const double axis_y = height - 40;

  // Scale the axis to the largest wall (at least 1/4 so 1/8 stays visible).
  double tmax = 0.25;
  for (const WallRow& row : table.rows)
    if (row.wall.kind == tilt::WallResult::Kind::wall)
      tmax = std::max(tmax, rat_double(row.wall.t) * 1.25);
  auto x_of = [&](double t) { return margin + t / tmax * (width - 2 * margin); };

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + svg_num(width) +
       "\" height=\"" + svg_num(height) + "\">\n";
  s += "<title>destabilizing walls, d=" + std::to_string(table.meta.d) +
       ", alpha=" + std::to_string(table.meta.alpha) + ", b=" + xml_escape(rat_str(table.meta.b)) +
       "</title>\n";
  s += "<line x1=\"" + svg_num(margin) + "\" y1=\"" + svg_num(axis_y) + "\" x2=\"" +
       svg_num(width - margin) + "\" y2=\"" + svg_num(axis_y) +
       "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  s += "<text x=\"" + svg_num(margin) + "\" y=\"" + svg_num(axis_y + 16) +
       "\" font-size=\"11\">t=0</text>\n";
  s += "<text x=\"" + svg_num(width - margin - 30) + "\" y=\"" + svg_num(axis_y + 16) +
       "\" font-size=\"11\">t=" + xml_escape(svg_num(tmax)) + "</text>\n";

  int drawn = 0;
  for (const WallRow& row : table.rows) {
    const double label_y = 24 + 16.0 * drawn;
    if (row.wall.kind == tilt::WallResult::Kind::wall) {
      const double x = x_of(rat_double(row.wall.t));
      s += "<line x1=\"" + svg_num(x) + "\" y1=\"" + svg_num(axis_y) + "\" x2=\"" + svg_num(x) +
           "\" y2=\"" + svg_num(label_y + 4) + "\" stroke=\"crimson\" stroke-width=\"1\"/>\n";
      s += "<text x=\"" + svg_num(x + 4) + "\" y=\"" + svg_num(label_y) + "\" font-size=\"11\">" +
           xml_escape(row.label + ": t=" + rat_str(row.wall.t)) + "</text>\n";
    } else {
      const char* what =
          row.wall.kind == tilt::WallResult::Kind::always_equal ? "always equal" : "no wall";
      s += "<text x=\"" + svg_num(margin) + "\" y=\"" + svg_num(label_y) + "\" font-size=\"11\">" +
           xml_escape(row.label + ": " + what + (row.note.empty() ? "" : " (" + row.note + ")")) +
           "</text>\n";
    }
    ++drawn;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace

std::string emit(const WallTable& table, Format format) {
  switch (format) {
    case Format::csv: return wall_table_csv(table);
    case Format::json: return wall_table_json(table).dump();
    case Format::svg: return wall_table_svg(table);
  }
  fail(Errc::unsupported_format, "unknown format");
}

WallTable parse_wall_table(const std::string& json_text) try {
  ojson doc = ojson::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("meta") || !doc.contains("rows"))
    fail(Errc::schema_error, "not a wall table document");
  const ojson& meta = doc["meta"];
  WallTable table;
  table.meta.d = meta.at("d").get<std::int64_t>();
  table.meta.alpha = meta.at("alpha").get<std::int64_t>();
  auto b = rat_from_json(meta.at("b"));
  if (!b) fail(Errc::schema_error, "/meta/b: not a rational");
  table.meta.b = *b;
  for (const ojson& r : doc["rows"]) {
    WallRow row;
    row.label = r.at("candidate").get<std::string>();
    const std::string kind = r.at("kind").get<std::string>();
    if (kind == "wall") {
      auto t = rat_parse(r.at("t").get<std::string>());
      if (!t) fail(Errc::schema_error, "wall row without a rational t");
      row.wall = tilt::WallResult::at(*t);
    } else if (kind == "always_equal") {
      row.wall = tilt::WallResult::always();
    } else if (kind == "no_wall") {
      row.wall = tilt::WallResult::none();
    } else {
      fail(Errc::schema_error, "unknown wall kind: " + kind);
    }
    if (r.contains("note")) row.note = r["note"].get<std::string>();
    table.rows.push_back(std::move(row));
  }
  return table;
} catch (const nlohmann::json::exception& err) {
  fail(Errc::schema_error, err.what());
}

std::string emit(const std::vector<reider::FujitaTuple>& tuples, Format format) {
  if (format == Format::csv) {
    std::string out = "d,q1,q2,lc,failed\n";
    for (const auto& t : tuples)
      out += std::to_string(t.d) + "," + std::to_string(t.q1) + "," + std::to_string(t.q2) + "," +
             std::to_string(t.lc) + "," + t.failed + "\n";
    return out;
  }
  if (format == Format::json) {
    ojson rows = ojson::array();
    for (const auto& t : tuples) {
      ojson r;
      r["d"] = t.d;
      r["q1"] = t.q1;
      r["q2"] = t.q2;
      r["lc"] = t.lc;
      r["failed"] = std::string(1, t.failed);
      rows.push_back(std::move(r));
    }
    return rows.dump();
  }
  fail(Errc::unsupported_format, "counterexample tables support csv and json only");
}

std::string emit(const reider::ConditionReport& report, Format format) {
  if (format == Format::csv) {
    std::string out = "condition,index,applicable,holds,lhs,rhs\n";
    out += "A,0,true," + std::string(report.a_holds ? "true" : "false") + "," +
           rat_str(report.a_lhs) + "," + rat_str(report.a_rhs) + "\n";
    for (std::size_t i = 0; i < report.divisors.size(); ++i) {
      const auto& check = report.divisors[i];
      out += "B," + std::to_string(i) + "," + (check.applicable ? "true" : "false") + "," +
             (check.holds ? "true" : "false") + "," + rat_str(check.divisor.q1) + "," +
             rat_str(Rat(7 * report.a_rhs / 49)) + "\n";
    }
    for (std::size_t i = 0; i < report.curves.size(); ++i) {
      const auto& check = report.curves[i];
      out += "C," + std::to_string(i) + ",true," + (check.holds ? "true" : "false") + "," +
             rat_str(check.curve.deg_lc) + "," + rat_str(Rat(3 * report.a_rhs / 49)) + "\n";
    }
    return out;
  }
  if (format == Format::json) {
    ojson doc;
    ojson a;
    a["holds"] = report.a_holds;
    a["lhs"] = rat_to_json(report.a_lhs);
    a["rhs"] = rat_to_json(report.a_rhs);
    doc["cond_A"] = std::move(a);
    ojson divisors = ojson::array();
    for (const auto& check : report.divisors) {
      ojson r;
      r["L2D"] = rat_to_json(check.divisor.q1);
      r["LD2"] = rat_to_json(check.divisor.q2 ? *check.divisor.q2 : Rat(0));
      r["integral"] = check.divisor.integral;
      r["applicable"] = check.applicable;
      r["holds"] = check.holds;
      divisors.push_back(std::move(r));
    }
    doc["cond_B"] = std::move(divisors);
    ojson curves = ojson::array();
    for (const auto& check : report.curves) {
      ojson r;
      r["LC"] = rat_to_json(check.curve.deg_lc);
      r["holds"] = check.holds;
      curves.push_back(std::move(r));
    }
    doc["cond_C"] = std::move(curves);
    doc["all_pass"] = report.all_pass;
    doc["scope"] = report.scope_note;
    return doc.dump();
  }
  fail(Errc::unsupported_format, "condition reports support csv and json only");
}

std::string emit(const reider::L5Report& report, Format format) {
  if (format == Format::csv) {
    std::string out = "d,LC,MC,ch3t_A,ch3_OC,g_a,deg_KL_on_C,parity_obstruction\n";
    out += std::to_string(report.d) + "," + rat_str(report.lc) + "," + rat_str(report.mc) + "," +
           rat_str(report.ch3t_a) + "," + rat_str(report.ch3_oc) + "," + rat_str(report.g_a) +
           "," + rat_str(report.deg_kl_on_c) + "," +
           (report.parity_obstruction ? "true" : "false") + "\n";
    return out;
  }
  if (format == Format::json) {
    ojson doc;
    doc["d"] = report.d;
    doc["LC"] = rat_to_json(report.lc);
    doc["MC"] = rat_to_json(report.mc);
    doc["ch3t_A"] = rat_to_json(report.ch3t_a);
    doc["ch3_OC"] = rat_to_json(report.ch3_oc);
    doc["g_a"] = rat_to_json(report.g_a);
    doc["deg_KL_on_C"] = rat_to_json(report.deg_kl_on_c);
    doc["parity_obstruction"] = report.parity_obstruction;
    return doc.dump();
  }
  fail(Errc::unsupported_format, "L5 reports support csv and json only");
}

std::string emit(const ReiderCurve& curve, Format format) {
  if (format != Format::svg)
    fail(Errc::unsupported_format, "the bound curve is an svg-only payload");
  const std::int64_t alpha = curve.alpha;
  const double width = 640, height = 400, margin = 48;

  // kappa in [alpha/4, 6 alpha]; the bound at the left edge is 156.25a.
  const double kmin = alpha / 4.0, kmax = 6.0 * alpha;
  const double ymax = 160.0 * alpha, ymin = 0.0;
  auto x_of = [&](double k) { return margin + (k - kmin) / (kmax - kmin) * (width - 2 * margin); };
  auto y_of = [&](double y) {
    return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
  };

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + svg_num(width) +
       "\" height=\"" + svg_num(height) + "\">\n";
  s += "<title>volume bound 12a + (k^2 + 36a^2)/k, alpha=" + std::to_string(alpha) +
       "</title>\n";
  s += "<line x1=\"" + svg_num(margin) + "\" y1=\"" + svg_num(height - margin) + "\" x2=\"" +
       svg_num(width - margin) + "\" y2=\"" + svg_num(height - margin) +
       "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + svg_num(margin) + "\" y1=\"" + svg_num(margin) + "\" x2=\"" +
       svg_num(margin) + "\" y2=\"" + svg_num(height - margin) +
       "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  std::string points;
  const int samples = 200;
  for (int i = 0; i <= samples; ++i) {
    Rat k = Rat(curve.alpha) / 4 + (Rat(6 * curve.alpha) - Rat(curve.alpha) / 4) * i / samples;
    Rat y = reider::reider_rhs(k, alpha);
    if (!points.empty()) points += " ";
    points += svg_num(x_of(rat_double(k))) + "," + svg_num(y_of(rat_double(y)));
  }
  s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"" + points +
       "\"/>\n";

  const double px = x_of(static_cast<double>(alpha)), py = y_of(49.0 * alpha);
  s += "<circle cx=\"" + svg_num(px) + "\" cy=\"" + svg_num(py) +
       "\" r=\"3\" fill=\"crimson\"/>\n";
  s += "<text x=\"" + svg_num(px + 6) + "\" y=\"" + svg_num(py - 6) +
       "\" font-size=\"11\">(alpha, 49*alpha)</text>\n";
  const double qx = x_of(6.0 * alpha), qy = y_of(24.0 * alpha);
  s += "<circle cx=\"" + svg_num(qx) + "\" cy=\"" + svg_num(qy) +
       "\" r=\"3\" fill=\"crimson\"/>\n";
  s += "<text x=\"" + svg_num(qx - 110) + "\" y=\"" + svg_num(qy - 6) +
       "\" font-size=\"11\">(6*alpha, 24*alpha)</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace tiltstab::scan
