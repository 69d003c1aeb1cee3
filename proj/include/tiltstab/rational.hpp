#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace tiltstab {

// Exact arbitrary-precision rational. GMP keeps arithmetic results in
// canonical form (lowest terms, positive denominator); the constructors
// below canonicalize the raw p/q pairs that mpq_class leaves untouched.
using Rat = mpq_class;

// p/q, canonicalized. den must be nonzero.
Rat rat(std::int64_t num, std::int64_t den = 1);

// Parses "p", "-p" or "p/q" (q > 0); returns nullopt on anything else.
std::optional<Rat> rat_parse(const std::string& text);

// "p" or "p/q", lowest terms, q > 0 — the wire format for all CSV/JSON.
std::string rat_str(const Rat& x);

bool is_integer(const Rat& x);

// Nearest double, for presentation-only output (SVG coordinates).
double rat_double(const Rat& x);

}  // namespace tiltstab
