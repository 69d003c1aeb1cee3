#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltstab/geometry.hpp"
#include "tiltstab/rational.hpp"

namespace tiltstab::chern {

// First-Chern-class record. Either proportional to L with an exact
// coefficient, or a general divisor class D known through its pairings
// q1 = L^2.D and (optionally) q2 = L.D^2.
struct C1Data {
  enum class Kind { proportional, general };

  Kind kind = Kind::proportional;
  Rat coeff;               // proportional: c1 = coeff * L
  Rat q1;                  // general: L^2.D
  std::optional<Rat> q2;   // general: L.D^2 (not additive, hence optional)
  bool integral = true;    // general: D is an integral divisor class

  static C1Data prop(Rat c);
  static C1Data general(Rat q1, std::optional<Rat> q2 = std::nullopt, bool integral = true);
};

bool operator==(const C1Data& a, const C1Data& b);

// Chern character reduced against powers of L: everything the inequality
// chains need is (ch0, L^2.ch1, L.ch1^2, L.ch2, ch3) in point units. This
// reduction is closed under tensoring by rational multiples of L.
// Values are immutable; every operation below is a pure function.
struct NumClass {
  PolarizedGeometry geom;
  Rat r;      // ch0
  C1Data c1;
  Rat ch2L;   // L.ch2
  Rat ch3;

  Rat l2c1() const;                  // L^2.c1
  std::optional<Rat> lc1sq() const;  // L.c1^2, when derivable
};

bool operator==(const NumClass& a, const NumClass& b);

// Validates and assembles a class. Throws InvalidGeometry when d <= 0 and
// HodgeIndexViolation when a general c1 with known q2 has q1^2 < d*q2.
NumClass make_class(const PolarizedGeometry& geom, Rat r, C1Data c1, Rat ch2L, Rat ch3);

// ch(L^m) = e^{mL} = (1, mL, m^2 L^2/2, m^3 L^3/6).
NumClass line_bundle_class(const PolarizedGeometry& geom, const Rat& m);

// Zero-dimensional subscheme of the given length, for ideal-sheaf classes.
struct ZeroDimensional {
  std::int64_t length = 0;
};

// ch(I_Z) = ch(O_X) - ch(O_Z) for Z of dimension 0, and likewise for a
// curve C (which needs ch_3(O_C); throws MissingCh3 otherwise).
NumClass ideal_sheaf_class(const PolarizedGeometry& geom, ZeroDimensional z);
NumClass ideal_sheaf_class(const PolarizedGeometry& geom, const CurveClassData& curve);

// Multiplication by e^{mL}. Twisting by B = bL is tensor_L(ch, -b).
NumClass tensor_L(const NumClass& ch, const Rat& m);

// Homological shift [1]: negates every linear component (L.c1^2 is
// quadratic and survives).
NumClass shift_negate(const NumClass& ch);

// Componentwise addition (additivity on exact triangles). c1 stays
// proportional only if both summands are; otherwise q2 is dropped, since
// L.c1^2 is not additive. Throws GeometryMismatch across different d.
NumClass sum(const NumClass& a, const NumClass& b);

// L.Delta with Delta = ch1^2 - 2 ch0 ch2; invariant under tensor_L.
// Throws UnknownC1Square when L.c1^2 is not known.
Rat discriminant_L(const NumClass& ch);

// Chern-level shadow of D_L(-) = (-)^v [1] (x) L: dual, shift, tensor by L.
NumClass dualize_L(const NumClass& ch);

// 1 - g_a(C) = ch_3(O_C) - (1/2) K_X.C  (Hirzebruch-Riemann-Roch).
Rat arithmetic_genus(const Rat& ch3_oc, std::int64_t kxc);

// Warnings only, never errors: ch3 of an honest class lies in (1/6)Z.
std::vector<std::string> integrality_lint(const NumClass& ch);

}  // namespace tiltstab::chern
