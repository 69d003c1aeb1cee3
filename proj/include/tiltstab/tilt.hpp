#pragma once

#include <cstdint>

#include "tiltstab/chern.hpp"
#include "tiltstab/rational.hpp"

namespace tiltstab::tilt {

using chern::NumClass;

// Slope value: a rational, or +infinity for the degenerate denominators
// (torsion classes under mu, vanishing L^2.ch~1 under nu).
struct ExtRat {
  bool infinite = false;
  Rat value;

  static ExtRat inf() { return ExtRat{true, Rat(0)}; }
  static ExtRat fin(Rat v) { return ExtRat{false, std::move(v)}; }
};

bool operator==(const ExtRat& a, const ExtRat& b);
bool operator<(const ExtRat& a, const ExtRat& b);
inline bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }

// The default twist B = L/2 used throughout the Reider analysis.
inline Rat half() { return rat(1, 2); }

// mu_{w,B} slope of an untwisted class at twist b, up to the positive
// scale factor that w = TL contributes: +inf for rank zero, otherwise
// (L^2.c1 - b d r) / (d r).
ExtRat mu_slope(const NumClass& ch, const Rat& b);

// nu_t slope in the rescaled parameterization t = T^2/6: the input class
// is twisted by b internally (pass b = 0 for classes already carrying the
// twist), then (L.ch~2 - t d ch~0) / (L^2.ch~1), or +inf when the
// denominator vanishes. Throws NonpositiveT unless t > 0.
ExtRat nu_slope(const NumClass& ch, const Rat& t, const Rat& b = half());

// Necessary sign condition for membership in the tilted heart at twist b:
// every object of B_{w,bL} has L^2.ch~1 >= 0.
bool heart_sign_ok(const NumClass& ch, const Rat& b = half());

// Classical Bogomolov-Gieseker, reported as the sign of L.Delta.
struct ClassicalBGReport {
  Rat l_delta;
  bool satisfied = false;  // L.Delta >= 0
};

ClassicalBGReport classical_bg_check(const NumClass& ch);

// One evaluation of the conjectural inequality ch~3 <= (t/3) L^2.ch~1.
// nu_is_zero records whether the hypothesis L.ch~2 = d t ch~0 holds; the
// comparison is reported either way (the decision engine needs both the
// boundary and off-boundary values).
struct BGReport {
  bool nu_is_zero = false;
  Rat lhs;   // ch~3
  Rat rhs;   // (t/3) L^2.ch~1
  bool satisfied = false;
  Rat slack;  // rhs - lhs
};

BGReport strong_bg_check(const NumClass& ch, const Rat& t, const Rat& b = half());

// Solution of nu_t(a) = nu_t(e), which is linear in t.
struct WallResult {
  enum class Kind { wall, no_wall, always_equal };
  Kind kind = Kind::no_wall;
  Rat t;  // meaningful only when kind == wall

  static WallResult at(Rat t) { return WallResult{Kind::wall, std::move(t)}; }
  static WallResult none() { return WallResult{Kind::no_wall, Rat(0)}; }
  static WallResult always() { return WallResult{Kind::always_equal, Rat(0)}; }
};

bool operator==(const WallResult& a, const WallResult& b);

// Both classes are twisted by b first. Throws InfiniteSlope when either
// twisted denominator L^2.ch~1 vanishes (the linear equation degenerates).
WallResult wall(const NumClass& a, const NumClass& e, const Rat& b = half());

// eta = (L^2.ch1 - 2 L.ch2) / rk on untwisted data. Throws ZeroRank.
Rat eta(const NumClass& ch);

// Exact algebraic equivalence test: the strong BG inequality for the
// extension class at the wall t0 = L.ch~2(A)/(rk(A) d) holds if and only
// if eta(A) <= 6 alpha. Both sides are evaluated independently.
struct EtaWallReport {
  Rat t0;
  Rat eta_value;
  bool bound_6alpha_holds = false;
  bool strong_bg_at_t0_holds = false;
};

EtaWallReport eta_wall_equivalence(const NumClass& a, const PolarizedGeometry& geom,
                                   std::int64_t alpha);

}  // namespace tiltstab::tilt
