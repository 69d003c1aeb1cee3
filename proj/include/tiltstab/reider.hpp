#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltstab/chern.hpp"
#include "tiltstab/geometry.hpp"
#include "tiltstab/rational.hpp"

namespace tiltstab::reider {

using chern::C1Data;
using chern::NumClass;

// The b = 1/2-twisted character (0, L, 0, d/24 - alpha) of the extension
// object built from a length-alpha subscheme: constructed as the sum of
// the twisted characters of its two triangle factors and checked against
// the closed form. Callers passing it to slope/BG functions should use
// b = 0 (it already carries the twist).
NumClass extension_class(const PolarizedGeometry& geom, std::int64_t alpha);

// Largest t below which the strong BG inequality fails for the extension
// class: 1/8 - 3 alpha / d when d > 24 alpha, nullopt when d <= 24 alpha
// (the inequality then holds for every small t, so no instability is
// forced).
std::optional<Rat> min_unstable_t(const PolarizedGeometry& geom, std::int64_t alpha);

// Numeric conditions (A) L^3 > 49 alpha, (B) L^2.D >= 7 alpha for supplied
// integral divisors with L^2.D > 0 and L.D^2 < alpha, (C) L.C >= 3 alpha
// for supplied curves. The report audits the user's candidate lists only;
// it cannot enumerate the classes of an abstract threefold.
struct DivisorCheck {
  C1Data divisor;
  bool applicable = false;
  bool holds = true;
};

struct CurveCheck {
  CurveClassData curve;
  bool holds = true;
};

struct ConditionReport {
  bool a_holds = false;
  Rat a_lhs;  // d
  Rat a_rhs;  // 49 alpha
  std::vector<DivisorCheck> divisors;
  std::vector<CurveCheck> curves;
  bool all_pass = false;
  std::string scope_note;
};

ConditionReport check_conditions(const PolarizedGeometry& geom, std::int64_t alpha,
                                 const std::vector<C1Data>& divisors,
                                 const std::vector<CurveClassData>& curves);

// 12 alpha + (kappa^2 + 36 alpha^2) / kappa, the volume bound obtained by
// combining the Hodge index theorem with inequality (I). Strictly
// decreasing on (0, 6 alpha], equal to 49 alpha at kappa = alpha.
Rat reider_rhs(const Rat& kappa, std::int64_t alpha);

// d reider_rhs / d kappa = (kappa^2 - 36 alpha^2) / kappa^2, exact.
Rat reider_rhs_derivative(const Rat& kappa, std::int64_t alpha);

// Classification of a candidate destabilizer through the Chern data of
// Gamma = L - ch1(U)/r: which assumption excludes it, with the exact
// inequality chain in `trace`.
struct TraceStep {
  std::string name;
  Rat lhs;
  std::string rel;
  Rat rhs;
};

enum class LemmaCheck { ineq_i, ineq_ii, hodge };

struct DestabilizerVerdict {
  enum class Kind {
    inconsistent_input,
    contradicts_volume,
    excluded_by_assumption_b,
    curve_case,
    no_contradiction,
  };

  Kind kind = Kind::no_contradiction;
  std::optional<LemmaCheck> failed;  // set for inconsistent_input
  std::optional<Rat> bound;          // set for contradicts_volume
  std::vector<TraceStep> trace;
  std::string note;
};

// gamma must be a general c1 record carrying q1 = L^2.Gamma and
// q2 = L.Gamma^2. Gate checks are (I) q1 <= q2 + 6 alpha and
// (II) (d/2)(1 - 1/r) <= q1 < d/2; the theorem-level verdicts follow the
// r > 1 / r = 1 case split, and a candidate whose own numbers violate the
// Hodge index (and is excluded by nothing stronger) reports
// inconsistent_input(hodge).
DestabilizerVerdict classify_destabilizer(std::int64_t r, const C1Data& gamma,
                                          const PolarizedGeometry& geom, std::int64_t alpha);

// The interval [d/48 - alpha/2, d/48 - L.C/6] that ch~3 of a curve-case
// destabilizer must occupy, together with the half-integer lattice of
// admissible values starting at the lower endpoint.
struct CurveCaseReport {
  enum class Verdict { empty, boundary, nonempty };

  Rat lower;
  Rat upper;
  Rat lattice_start;
  Rat lattice_step;  // 1/2
  Verdict verdict = Verdict::nonempty;
  std::string note;
};

CurveCaseReport curve_case_chain(const PolarizedGeometry& geom, std::int64_t alpha, const Rat& lc);

// Exact derivative at b0 of the slack function
//   f(b) = ch~3 - (T(b)^2/18) L^2.ch~1,   T(b)^2 = (6/rd)(L.ch~2(b)),
// computed symbolically (f collapses to a polynomial in b). Requires c1
// proportional to L and T(b0)^2 > 0. The identity fprime * 3r = L.Delta
// is asserted internally; `ratio` is fprime / L.Delta when defined.
struct DerivativeReport {
  Rat fprime;
  Rat l_delta;
  std::optional<Rat> ratio;
};

DerivativeReport conj_equal_derivative(const NumClass& ch, const Rat& b0);

// One failing grid tuple of the Fujita scan, with the first condition
// (in A, B, C order) that L' = mL violates.
struct FujitaTuple {
  std::int64_t d = 0;
  std::int64_t q1 = 0;
  std::int64_t q2 = 0;
  std::int64_t lc = 0;
  char failed = 'A';
};

bool operator==(const FujitaTuple& a, const FujitaTuple& b);
bool operator<(const FujitaTuple& a, const FujitaTuple& b);  // lexicographic

struct FujitaResult {
  bool pass = true;
  std::vector<FujitaTuple> counterexamples;  // sorted lexicographically
};

// Exhaustive scan over integer tuples (d, q1, q2, lc) with
// min_d <= d <= grid_bound, 1 <= q1, lc <= grid_bound, 0 <= q2 <= grid_bound
// and q1^2 >= d q2, checking conditions (A)(B)(C) for L' = mL, i.e. with
// d' = m^3 d, q1' = m^2 q1, q2' = m q2, lc' = m lc. alpha must be 1 or 2.
// The m = 3 statement needs d >= 2; pass min_d = 2 for it. Partitioning
// across `workers` threads does not change the result.
FujitaResult fujita_verify(std::int64_t m, std::int64_t alpha, std::int64_t grid_bound,
                           std::int64_t min_d = 1, unsigned workers = 1);

// Invariants of the only candidate counterexample curve when L = M^5:
// degree M.C = 1, L.C = 5, pinned ch~3 of the destabilizer, and the genus
// bookkeeping that yields the parity obstruction (K_X.C even rules the
// curve out).
struct L5Report {
  std::int64_t d = 0;  // 125 * M^3
  Rat lc;              // 5
  Rat mc;              // 1
  Rat ch3t_a;          // d/48 - 1
  Rat ch3_oc;          // -3/2
  Rat g_a;             // 5/2 + kxc/2
  Rat deg_kl_on_c;     // kxc + 5 = 2 g_a
  bool parity_obstruction = false;
};

L5Report l5_analysis(std::int64_t m3, std::int64_t kxc);

}  // namespace tiltstab::reider
