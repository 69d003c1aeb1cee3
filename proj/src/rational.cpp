#include "tiltstab/rational.hpp"

#include <cctype>

#include "tiltstab/error.hpp"

namespace tiltstab {

Rat rat(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(Errc::invalid_argument, "rational with zero denominator");
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> rat_parse(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  std::string digits = num;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  if (!all_digits(digits) || !all_digits(den)) return std::nullopt;
  mpz_class p(digits);
  if (negative) p = -p;
  Rat q(p, mpz_class(den));
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

double rat_double(const Rat& x) { return x.get_d(); }

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_geometry: return "InvalidGeometry";
    case Errc::hodge_index_violation: return "HodgeIndexViolation";
    case Errc::missing_ch3: return "MissingCh3";
    case Errc::geometry_mismatch: return "GeometryMismatch";
    case Errc::unknown_c1_square: return "UnknownC1Square";
    case Errc::nonpositive_t: return "NonpositiveT";
    case Errc::infinite_slope: return "InfiniteSlope";
    case Errc::zero_rank: return "ZeroRank";
    case Errc::nonpositive_kappa: return "NonpositiveKappa";
    case Errc::nonpositive_degree: return "NonpositiveDegree";
    case Errc::negative_t_square: return "NegativeTSquare";
    case Errc::non_proportional_c1: return "NonProportionalC1";
    case Errc::not_found: return "NotFound";
    case Errc::schema_error: return "SchemaError";
    case Errc::empty_grid: return "EmptyGrid";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace tiltstab
