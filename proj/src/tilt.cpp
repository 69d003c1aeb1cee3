#include "tiltstab/tilt.hpp"

#include "tiltstab/error.hpp"

namespace tiltstab::tilt {

using chern::C1Data;

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.infinite || b.infinite) return a.infinite && b.infinite;
  return a.value == b.value;
}

bool operator<(const ExtRat& a, const ExtRat& b) {
  if (b.infinite) return !a.infinite;
  if (a.infinite) return false;
  return a.value < b.value;
}

ExtRat mu_slope(const NumClass& ch, const Rat& b) {
  if (ch.r == 0) return ExtRat::inf();
  Rat d(ch.geom.d);
  return ExtRat::fin((ch.l2c1() - b * d * ch.r) / (d * ch.r));
}

ExtRat nu_slope(const NumClass& ch, const Rat& t, const Rat& b) {
  if (t <= 0) fail(Errc::nonpositive_t, "nu_t needs t > 0, got " + rat_str(t));
  NumClass tw = chern::tensor_L(ch, -b);
  Rat den = tw.l2c1();
  if (den == 0) return ExtRat::inf();
  return ExtRat::fin((tw.ch2L - t * ch.geom.d * tw.r) / den);
}

bool heart_sign_ok(const NumClass& ch, const Rat& b) {
  return chern::tensor_L(ch, -b).l2c1() >= 0;
}

ClassicalBGReport classical_bg_check(const NumClass& ch) {
  Rat l_delta = chern::discriminant_L(ch);
  bool ok = l_delta >= 0;
  return ClassicalBGReport{std::move(l_delta), ok};
}

BGReport strong_bg_check(const NumClass& ch, const Rat& t, const Rat& b) {
  if (t <= 0) fail(Errc::nonpositive_t, "strong BG check needs t > 0, got " + rat_str(t));
  NumClass tw = chern::tensor_L(ch, -b);
  BGReport report;
  report.nu_is_zero = tw.ch2L == t * ch.geom.d * tw.r;
  report.lhs = tw.ch3;
  report.rhs = t / 3 * tw.l2c1();
  report.satisfied = report.lhs <= report.rhs;
  report.slack = report.rhs - report.lhs;
  return report;
}

bool operator==(const WallResult& a, const WallResult& b) {
  if (a.kind != b.kind) return false;
  return a.kind != WallResult::Kind::wall || a.t == b.t;
}

WallResult wall(const NumClass& a, const NumClass& e, const Rat& b) {
  if (a.geom.d != e.geom.d)
    fail(Errc::geometry_mismatch,
         "d = " + std::to_string(a.geom.d) + " vs " + std::to_string(e.geom.d));
  NumClass ta = chern::tensor_L(a, -b);
  NumClass te = chern::tensor_L(e, -b);
  Rat da = ta.l2c1(), de = te.l2c1();
  if (da == 0 || de == 0) fail(Errc::infinite_slope, "twisted L^2.ch~1 vanishes");

  // (La2 - t d a0)/da = (Le2 - t d e0)/de, linear in t: coef * t = rhs.
  Rat d(a.geom.d);
  Rat coef = d * (te.r * da - ta.r * de);
  Rat rhs = te.ch2L * da - ta.ch2L * de;
  if (coef == 0) return rhs == 0 ? WallResult::always() : WallResult::none();
  Rat t = rhs / coef;
  return t > 0 ? WallResult::at(std::move(t)) : WallResult::none();
}

Rat eta(const NumClass& ch) {
  if (ch.r == 0) fail(Errc::zero_rank, "eta is undefined at rank zero");
  return (ch.l2c1() - 2 * ch.ch2L) / ch.r;
}

EtaWallReport eta_wall_equivalence(const NumClass& a, const PolarizedGeometry& geom,
                                   std::int64_t alpha) {
  if (a.r <= 0) fail(Errc::zero_rank, "candidate subobject must have positive rank");
  if (a.geom.d != geom.d) fail(Errc::geometry_mismatch, "candidate is on a different geometry");
  Rat d(geom.d);

  NumClass tw = chern::tensor_L(a, -half());
  Rat t0 = tw.ch2L / (a.r * d);
  if (t0 <= 0) fail(Errc::nonpositive_t, "wall t0 = " + rat_str(t0) + " is not positive");

  // The b = 1/2-twisted extension class (0, L, 0, d/24 - alpha); evaluated
  // with no further twist.
  NumClass ext = chern::make_class(geom, 0, C1Data::prop(1), 0, d / 24 - alpha);

  EtaWallReport report;
  report.t0 = t0;
  report.eta_value = eta(a);
  report.bound_6alpha_holds = report.eta_value <= Rat(6 * alpha);
  report.strong_bg_at_t0_holds = strong_bg_check(ext, t0, Rat(0)).satisfied;
  return report;
}

}  // namespace tiltstab::tilt
