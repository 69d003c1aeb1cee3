// Command-line front door: geometry ingestion, subcommand dispatch, and
// text/CSV/JSON/SVG reports on top of the tiltstab library.
//
// Exit codes: 0 when every mathematical check passes, 1 when a check is
// negative (conditions not met, counterexample found) with the report
// still emitted, 2 on usage/IO/schema errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "tiltstab/chern.hpp"
#include "tiltstab/error.hpp"
#include "tiltstab/geometry_io.hpp"
#include "tiltstab/json_util.hpp"
#include "tiltstab/reider.hpp"
#include "tiltstab/scan.hpp"
#include "tiltstab/tilt.hpp"

namespace {

using namespace tiltstab;
using chern::C1Data;
using chern::NumClass;
using chern::ZeroDimensional;
using scan::Format;

struct CommonArgs {
  std::string geometry_path;
  std::int64_t alpha = 1;
  std::string t_text;
  std::string b_text = "1/2";
  std::int64_t m = 1;
  std::string format = "text";
  std::int64_t grid_bound = 0;
  std::int64_t min_d = 1;
  std::string out_path;
  std::int64_t m3 = 1;
  std::int64_t kxc = 0;
};

Rat parse_rat_flag(const std::string& text, const std::string& flag) {
  auto value = rat_parse(text);
  if (!value) fail(Errc::invalid_argument, flag + " expects an integer or p/q rational");
  return *value;
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "svg") return Format::svg;
  fail(Errc::unsupported_format, "unknown format: " + name);
}

unsigned scan_workers() {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > 8) workers = 8;
  if (const char* env = std::getenv("TILTSTAB_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1 || cap > 256)
      fail(Errc::invalid_argument, "TILTSTAB_THREADS must be a positive integer");
    workers = static_cast<unsigned>(cap);
  }
  return workers;
}

void write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(Errc::not_found, "cannot open output file: " + out_path);
  out << payload;
}

std::string ext_str(const tilt::ExtRat& v) { return v.infinite ? "inf" : rat_str(v.value); }

// The named classes every report-style subcommand works with, untwisted.
std::vector<std::pair<std::string, NumClass>> named_classes(const LoadedGeometry& loaded,
                                                            std::int64_t alpha, std::int64_t m) {
  const PolarizedGeometry& g = loaded.geom;
  std::vector<std::pair<std::string, NumClass>> classes;
  classes.emplace_back("O_X", chern::line_bundle_class(g, 0));
  classes.emplace_back("O_X[1]", chern::shift_negate(chern::line_bundle_class(g, 0)));
  classes.emplace_back("L^" + std::to_string(m), chern::line_bundle_class(g, Rat(m)));
  classes.emplace_back("L⊗I_Z", chern::tensor_L(
                                         chern::ideal_sheaf_class(g, ZeroDimensional{alpha}), 1));
  classes.emplace_back("E", chern::tensor_L(reider::extension_class(g, alpha), tilt::half()));
  for (std::size_t i = 0; i < loaded.curves.size(); ++i) {
    if (!loaded.curves[i].ch3_oc) continue;
    classes.emplace_back("L⊗I_C#" + std::to_string(i),
                         chern::tensor_L(chern::ideal_sheaf_class(g, loaded.curves[i]), 1));
  }
  return classes;
}

ojson class_json(const NumClass& ch, const Rat& b) {
  ojson row;
  row["r"] = rat_to_json(ch.r);
  row["L2c1"] = rat_to_json(ch.l2c1());
  auto lc1sq = ch.lc1sq();
  row["Lc1sq"] = lc1sq ? rat_to_json(*lc1sq) : ojson(nullptr);
  row["Lch2"] = rat_to_json(ch.ch2L);
  row["ch3"] = rat_to_json(ch.ch3);
  NumClass tw = chern::tensor_L(ch, -b);
  ojson twisted;
  twisted["r"] = rat_to_json(tw.r);
  twisted["L2c1"] = rat_to_json(tw.l2c1());
  twisted["Lch2"] = rat_to_json(tw.ch2L);
  twisted["ch3"] = rat_to_json(tw.ch3);
  row["twisted"] = std::move(twisted);
  return row;
}

int run_chern(const CommonArgs& args) {
  LoadedGeometry loaded = load_geometry(args.geometry_path);
  Rat b = parse_rat_flag(args.b_text, "--b");
  auto classes = named_classes(loaded, args.alpha, args.m);

  if (args.format == "json") {
    ojson doc;
    ojson meta;
    meta["d"] = loaded.geom.d;
    meta["alpha"] = args.alpha;
    meta["b"] = rat_to_json(b);
    doc["meta"] = std::move(meta);
    ojson rows = ojson::array();
    for (const auto& [label, ch] : classes) {
      ojson row;
      row["label"] = label;
      ojson data = class_json(ch, b);
      for (auto& [key, value] : data.items()) row[key] = value;
      ojson warnings = ojson::array();
      for (const auto& w : chern::integrality_lint(ch)) warnings.push_back(w);
      row["warnings"] = std::move(warnings);
      rows.push_back(std::move(row));
    }
    doc["classes"] = std::move(rows);
    write_output(doc.dump(), args.out_path);
    return 0;
  }
  if (args.format == "csv") {
    std::string out = "label,r,L2c1,Lc1sq,Lch2,ch3,tw_r,tw_L2c1,tw_Lch2,tw_ch3\n";
    for (const auto& [label, ch] : classes) {
      NumClass tw = chern::tensor_L(ch, -b);
      auto lc1sq = ch.lc1sq();
      out += label + "," + rat_str(ch.r) + "," + rat_str(ch.l2c1()) + "," +
             (lc1sq ? rat_str(*lc1sq) : "unknown") + "," + rat_str(ch.ch2L) + "," +
             rat_str(ch.ch3) + "," + rat_str(tw.r) + "," + rat_str(tw.l2c1()) + "," +
             rat_str(tw.ch2L) + "," + rat_str(tw.ch3) + "\n";
    }
    write_output(out, args.out_path);
    return 0;
  }
  if (args.format != "text") fail(Errc::unsupported_format, "chern supports text, csv, json");

  std::string out = "Chern characters, d = " + std::to_string(loaded.geom.d) +
                    ", alpha = " + std::to_string(args.alpha) + ", twist b = " + rat_str(b) +
                    "\ncomponents: (ch0, L^2.ch1, L.ch2, ch3)\n";
  for (const auto& [label, ch] : classes) {
    NumClass tw = chern::tensor_L(ch, -b);
    out += "  " + label + ": (" + rat_str(ch.r) + ", " + rat_str(ch.l2c1()) + ", " +
           rat_str(ch.ch2L) + ", " + rat_str(ch.ch3) + ")  twisted: (" + rat_str(tw.r) + ", " +
           rat_str(tw.l2c1()) + ", " + rat_str(tw.ch2L) + ", " + rat_str(tw.ch3) + ")\n";
    for (const auto& w : chern::integrality_lint(ch)) out += "    warning: " + w + "\n";
  }
  write_output(out, args.out_path);
  return 0;
}

int run_slope(const CommonArgs& args) {
  LoadedGeometry loaded = load_geometry(args.geometry_path);
  Rat b = parse_rat_flag(args.b_text, "--b");
  Rat t = parse_rat_flag(args.t_text, "--t");
  auto classes = named_classes(loaded, args.alpha, args.m);

  if (args.format == "json") {
    ojson doc;
    ojson meta;
    meta["d"] = loaded.geom.d;
    meta["alpha"] = args.alpha;
    meta["b"] = rat_to_json(b);
    meta["t"] = rat_to_json(t);
    doc["meta"] = std::move(meta);
    ojson rows = ojson::array();
    for (const auto& [label, ch] : classes) {
      ojson row;
      row["label"] = label;
      row["mu"] = ext_str(tilt::mu_slope(ch, b));
      row["nu"] = ext_str(tilt::nu_slope(ch, t, b));
      rows.push_back(std::move(row));
    }
    doc["slopes"] = std::move(rows);
    write_output(doc.dump(), args.out_path);
    return 0;
  }
  if (args.format != "text") fail(Errc::unsupported_format, "slope supports text and json");

  std::string out = "Slopes at t = " + rat_str(t) + ", b = " + rat_str(b) +
                    ", d = " + std::to_string(loaded.geom.d) + "\n";
  for (const auto& [label, ch] : classes)
    out += "  " + label + ": mu = " + ext_str(tilt::mu_slope(ch, b)) +
           ", nu_t = " + ext_str(tilt::nu_slope(ch, t, b)) + "\n";
  write_output(out, args.out_path);
  return 0;
}

int run_wall(const CommonArgs& args) {
  LoadedGeometry loaded = load_geometry(args.geometry_path);
  Rat b = parse_rat_flag(args.b_text, "--b");

  std::vector<std::pair<std::string, NumClass>> candidates;
  for (auto& [label, ch] : named_classes(loaded, args.alpha, args.m))
    if (label != "E") candidates.emplace_back(label, ch);
  scan::WallTable table = scan::wall_scan(loaded.geom, args.alpha, candidates, b);

  if (args.format == "text") {
    std::string out = "Walls against E, d = " + std::to_string(loaded.geom.d) +
                      ", alpha = " + std::to_string(args.alpha) + ", b = " + rat_str(b) + "\n";
    for (const auto& row : table.rows) {
      out += "  " + row.label + ": ";
      switch (row.wall.kind) {
        case tilt::WallResult::Kind::wall: out += "t = " + rat_str(row.wall.t); break;
        case tilt::WallResult::Kind::no_wall: out += "no wall"; break;
        case tilt::WallResult::Kind::always_equal: out += "always equal"; break;
      }
      if (!row.note.empty()) out += " (" + row.note + ")";
      out += "\n";
    }
    write_output(out, args.out_path);
    return 0;
  }
  write_output(scan::emit(table, parse_format(args.format)), args.out_path);
  return 0;
}

int run_reider(const CommonArgs& args) {
  LoadedGeometry loaded = load_geometry(args.geometry_path);
  auto report =
      reider::check_conditions(loaded.geom, args.alpha, loaded.divisors, loaded.curves);

  if (args.format == "svg") {
    write_output(scan::emit(scan::ReiderCurve{args.alpha}, Format::svg), args.out_path);
    return report.all_pass ? 0 : 1;
  }
  if (args.format == "csv" || args.format == "json") {
    write_output(scan::emit(report, parse_format(args.format)), args.out_path);
    return report.all_pass ? 0 : 1;
  }
  if (args.format != "text") fail(Errc::unsupported_format, "unknown format: " + args.format);

  std::string out = "Conditions at alpha = " + std::to_string(args.alpha) + " (" +
                    report.scope_note + ")\n";
  out += "  (A) d > 49*alpha: " + rat_str(report.a_lhs) + (report.a_holds ? " > " : " <= ") +
         rat_str(report.a_rhs) + (report.a_holds ? "  PASS" : "  FAIL") + "\n";
  for (std::size_t i = 0; i < report.divisors.size(); ++i) {
    const auto& check = report.divisors[i];
    out += "  (B) divisor " + std::to_string(i) + ": L^2.D = " + rat_str(check.divisor.q1) +
           (check.applicable ? "" : "  (not applicable)") + (check.holds ? "  PASS" : "  FAIL") +
           "\n";
  }
  for (std::size_t i = 0; i < report.curves.size(); ++i) {
    const auto& check = report.curves[i];
    out += "  (C) curve " + std::to_string(i) + ": L.C = " + rat_str(check.curve.deg_lc) +
           (check.holds ? "  PASS" : "  FAIL") + "\n";
  }
  out += report.all_pass ? "all conditions hold\n" : "conditions FAILED\n";
  write_output(out, args.out_path);
  return report.all_pass ? 0 : 1;
}

int run_fujita(const CommonArgs& args, bool as_scan) {
  if (args.grid_bound < 1) fail(Errc::empty_grid, "--grid-bound must be >= 1");
  auto result =
      reider::fujita_verify(args.m, args.alpha, args.grid_bound, args.min_d, scan_workers());

  if (as_scan) {
    Format format = parse_format(args.format == "text" ? "csv" : args.format);
    write_output(scan::emit(result.counterexamples, format), args.out_path);
    return result.pass ? 0 : 1;
  }

  if (args.format == "json") {
    ojson doc;
    doc["m"] = args.m;
    doc["alpha"] = args.alpha;
    doc["grid_bound"] = args.grid_bound;
    doc["min_d"] = args.min_d;
    doc["pass"] = result.pass;
    doc["counterexamples"] = ojson::parse(scan::emit(result.counterexamples, Format::json));
    write_output(doc.dump(), args.out_path);
    return result.pass ? 0 : 1;
  }
  if (args.format == "csv") {
    write_output(scan::emit(result.counterexamples, Format::csv), args.out_path);
    return result.pass ? 0 : 1;
  }
  if (args.format != "text") fail(Errc::unsupported_format, "fujita supports text, csv, json");

  std::string out = "Fujita check: m = " + std::to_string(args.m) +
                    ", alpha = " + std::to_string(args.alpha) +
                    ", grid bound = " + std::to_string(args.grid_bound) +
                    ", d >= " + std::to_string(args.min_d) + "\n";
  if (result.pass) {
    out += "PASS: conditions (A)(B)(C) hold for L' = mL on the whole grid\n";
  } else {
    out += "FAIL: " + std::to_string(result.counterexamples.size()) + " counterexample tuple(s)\n";
    std::size_t shown = 0;
    for (const auto& t : result.counterexamples) {
      if (++shown > 10) {
        out += "  ... (" + std::to_string(result.counterexamples.size() - 10) + " more)\n";
        break;
      }
      out += "  d=" + std::to_string(t.d) + " q1=" + std::to_string(t.q1) +
             " q2=" + std::to_string(t.q2) + " lc=" + std::to_string(t.lc) + " fails (" +
             std::string(1, t.failed) + ")\n";
    }
  }
  write_output(out, args.out_path);
  return result.pass ? 0 : 1;
}

int run_l5(const CommonArgs& args) {
  auto report = reider::l5_analysis(args.m3, args.kxc);
  if (args.format == "csv" || args.format == "json") {
    write_output(scan::emit(report, parse_format(args.format)), args.out_path);
    return 0;
  }
  if (args.format != "text") fail(Errc::unsupported_format, "l5 supports text, csv, json");

  std::string out = "L = M^5 analysis, M^3 = " + std::to_string(args.m3) +
                    ", K_X.C = " + std::to_string(args.kxc) + "\n";
  out += "  d = " + std::to_string(report.d) + ", L.C = " + rat_str(report.lc) +
         ", M.C = " + rat_str(report.mc) + "\n";
  out += "  ch~3(A) = " + rat_str(report.ch3t_a) + ", ch3(O_C) = " + rat_str(report.ch3_oc) +
         "\n";
  out += "  g_a = " + rat_str(report.g_a) + ", deg (K_X(x)L)|_C = " +
         rat_str(report.deg_kl_on_c) + "\n";
  out += std::string("  parity obstruction: ") +
         (report.parity_obstruction
              ? "yes (K_X.C even: no curve with these invariants exists)\n"
              : "no (K_X.C odd: the invariants alone do not rule the curve out)\n");
  write_output(out, args.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tilt-stability computations on polarized threefolds"};
  app.require_subcommand(1);

  CommonArgs args;

  auto add_geometry = [&](CLI::App* cmd) {
    cmd->add_option("--geometry", args.geometry_path, "geometry JSON file")->required();
  };
  auto add_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", args.alpha, "subscheme length alpha (default 1)");
  };
  auto add_format = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("--format", args.format, what);
    cmd->add_option("--out", args.out_path, "write the report to a file instead of stdout");
  };

  CLI::App* chern_cmd = app.add_subcommand("chern", "tabulate Chern characters");
  add_geometry(chern_cmd);
  add_alpha(chern_cmd);
  chern_cmd->add_option("--b", args.b_text, "twist (default 1/2)");
  chern_cmd->add_option("--m", args.m, "line bundle power for the L^m row (default 1)");
  add_format(chern_cmd, "text|csv|json");

  CLI::App* slope_cmd = app.add_subcommand("slope", "evaluate mu and nu_t slopes");
  add_geometry(slope_cmd);
  add_alpha(slope_cmd);
  slope_cmd->add_option("--t", args.t_text, "slope parameter t > 0")->required();
  slope_cmd->add_option("--b", args.b_text, "twist (default 1/2)");
  slope_cmd->add_option("--m", args.m, "line bundle power for the L^m row (default 1)");
  add_format(slope_cmd, "text|json");

  CLI::App* wall_cmd = app.add_subcommand("wall", "walls of the named classes against E");
  add_geometry(wall_cmd);
  add_alpha(wall_cmd);
  wall_cmd->add_option("--b", args.b_text, "twist (default 1/2)");
  wall_cmd->add_option("--m", args.m, "line bundle power for the L^m row (default 1)");
  add_format(wall_cmd, "text|csv|json|svg");

  CLI::App* reider_cmd = app.add_subcommand("reider", "check conditions (A)(B)(C)");
  add_geometry(reider_cmd);
  add_alpha(reider_cmd);
  add_format(reider_cmd, "text|csv|json|svg (svg plots the volume bound curve)");

  CLI::App* fujita_cmd = app.add_subcommand("fujita", "grid-verify the Fujita constants");
  fujita_cmd->add_option("--m", args.m, "line bundle multiple m")->required();
  add_alpha(fujita_cmd);
  fujita_cmd->add_option("--grid-bound", args.grid_bound, "grid bound")->required();
  fujita_cmd->add_option("--min-d", args.min_d, "restrict to d >= min_d (default 1)");
  add_format(fujita_cmd, "text|csv|json");

  CLI::App* l5_cmd = app.add_subcommand("l5", "L = M^5 counterexample-curve analysis");
  l5_cmd->add_option("--m3", args.m3, "M^3")->required();
  l5_cmd->add_option("--kxc", args.kxc, "K_X.C on the candidate curve")->required();
  add_format(l5_cmd, "text|csv|json");

  CLI::App* scan_cmd = app.add_subcommand("scan", "emit the Fujita counterexample table");
  scan_cmd->add_option("--m", args.m, "line bundle multiple m")->required();
  add_alpha(scan_cmd);
  scan_cmd->add_option("--grid-bound", args.grid_bound, "grid bound")->required();
  scan_cmd->add_option("--min-d", args.min_d, "restrict to d >= min_d (default 1)");
  add_format(scan_cmd, "csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(chern_cmd)) return run_chern(args);
    if (app.got_subcommand(slope_cmd)) return run_slope(args);
    if (app.got_subcommand(wall_cmd)) return run_wall(args);
    if (app.got_subcommand(reider_cmd)) return run_reider(args);
    if (app.got_subcommand(fujita_cmd)) return run_fujita(args, false);
    if (app.got_subcommand(l5_cmd)) return run_l5(args);
    if (app.got_subcommand(scan_cmd)) return run_fujita(args, true);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
