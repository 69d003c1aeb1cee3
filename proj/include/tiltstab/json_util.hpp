#pragma once

#include <json.hpp>

#include <optional>

#include "tiltstab/rational.hpp"

namespace tiltstab {

// Insertion-ordered JSON keeps the emitters byte-deterministic.
using ojson = nlohmann::ordered_json;

// Integers stay JSON numbers (when they fit int64); everything else is a
// lowest-terms "p/q" string.
inline ojson rat_to_json(const Rat& x) {
  if (is_integer(x) && x.get_num().fits_slong_p())
    return static_cast<std::int64_t>(x.get_num().get_si());
  return rat_str(x);
}

inline std::optional<Rat> rat_from_json(const ojson& value) {
  if (value.is_number_integer()) return Rat(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) return rat_parse(value.get<std::string>());
  return std::nullopt;
}

}  // namespace tiltstab
