#include "tiltstab/geometry_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tiltstab/json_util.hpp"
#include "tiltstab/error.hpp"

namespace tiltstab {

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  fail(Errc::schema_error, where + ": " + what);
}

void reject_unknown_keys(const ojson& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) schema_fail(where + "/" + key, "unknown field");
  }
}

Rat require_rat(const ojson& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) schema_fail(where, std::string("missing field '") + key + "'");
  auto value = rat_from_json(obj[key]);
  if (!value) schema_fail(where + "/" + key, "expected an integer or \"p/q\" string");
  return *value;
}

std::int64_t require_int(const ojson& obj, const char* key, const std::string& where) {
  Rat value = require_rat(obj, key, where);
  if (!is_integer(value) || !value.get_num().fits_slong_p())
    schema_fail(where + "/" + std::string(key), "expected an integer");
  return value.get_num().get_si();
}

}  // namespace

LoadedGeometry parse_geometry_text(const std::string& json_text) {
  ojson doc = ojson::parse(json_text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::schema_error, "/: not valid JSON");
  if (!doc.is_object()) schema_fail("/", "top level must be an object");
  reject_unknown_keys(doc, {"d", "divisors", "curves"}, "");

  std::int64_t d = require_int(doc, "d", "");
  if (d < 1) schema_fail("/d", "d = L^3 must be positive");

  LoadedGeometry loaded;
  std::map<std::string, std::int64_t> kx;

  if (doc.contains("divisors")) {
    if (!doc["divisors"].is_array()) schema_fail("/divisors", "expected an array");
    std::size_t index = 0;
    for (const ojson& entry : doc["divisors"]) {
      const std::string where = "/divisors/" + std::to_string(index);
      if (!entry.is_object()) schema_fail(where, "expected an object");
      reject_unknown_keys(entry, {"L2D", "LD2", "integral"}, where);
      Rat q1 = require_rat(entry, "L2D", where);
      Rat q2 = require_rat(entry, "LD2", where);
      bool integral = true;
      if (entry.contains("integral")) {
        if (!entry["integral"].is_boolean()) schema_fail(where + "/integral", "expected a boolean");
        integral = entry["integral"].get<bool>();
      }
      if (q1 * q1 < d * q2)
        fail(Errc::hodge_index_violation,
             "divisor at index " + std::to_string(index) + ": (L^2.D)^2 < d * L.D^2");
      loaded.divisors.push_back(chern::C1Data::general(q1, q2, integral));
      ++index;
    }
  }

  if (doc.contains("curves")) {
    if (!doc["curves"].is_array()) schema_fail("/curves", "expected an array");
    std::size_t index = 0;
    for (const ojson& entry : doc["curves"]) {
      const std::string where = "/curves/" + std::to_string(index);
      if (!entry.is_object()) schema_fail(where, "expected an object");
      reject_unknown_keys(entry, {"LC", "KXC", "ch3OC"}, where);
      CurveClassData curve;
      curve.deg_lc = require_rat(entry, "LC", where);
      if (curve.deg_lc <= 0) schema_fail(where + "/LC", "L.C must be positive");
      if (entry.contains("KXC")) {
        curve.kxc = require_int(entry, "KXC", where);
        kx["curve" + std::to_string(index)] = *curve.kxc;
      }
      if (entry.contains("ch3OC")) {
        auto value = rat_from_json(entry["ch3OC"]);
        if (!value) schema_fail(where + "/ch3OC", "expected an integer or \"p/q\" string");
        curve.ch3_oc = *value;
      }
      loaded.curves.push_back(std::move(curve));
      ++index;
    }
  }

  loaded.geom = kx.empty() ? make_geometry(d) : make_geometry(d, std::move(kx));
  return loaded;
}

LoadedGeometry load_geometry(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::not_found, "cannot open geometry file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_geometry_text(buffer.str());
}

}  // namespace tiltstab
