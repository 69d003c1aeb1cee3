#include "tiltstab/chern.hpp"

#include <utility>

#include "tiltstab/error.hpp"

namespace tiltstab {

std::optional<std::int64_t> PolarizedGeometry::kx_pairing(const std::string& curve) const {
  if (!kx_pairings) return std::nullopt;
  auto it = kx_pairings->find(curve);
  if (it == kx_pairings->end()) return std::nullopt;
  return it->second;
}

PolarizedGeometry make_geometry(std::int64_t d) {
  if (d < 1) fail(Errc::invalid_geometry, "d = L^3 must be a positive integer, got " + std::to_string(d));
  return PolarizedGeometry{d, nullptr};
}

PolarizedGeometry make_geometry(std::int64_t d, std::map<std::string, std::int64_t> kx_pairings) {
  PolarizedGeometry g = make_geometry(d);
  g.kx_pairings = std::make_shared<const std::map<std::string, std::int64_t>>(std::move(kx_pairings));
  return g;
}

}  // namespace tiltstab

namespace tiltstab::chern {

C1Data C1Data::prop(Rat c) {
  C1Data out;
  out.kind = Kind::proportional;
  out.coeff = std::move(c);
  return out;
}

C1Data C1Data::general(Rat q1, std::optional<Rat> q2, bool integral) {
  C1Data out;
  out.kind = Kind::general;
  out.q1 = std::move(q1);
  out.q2 = std::move(q2);
  out.integral = integral;
  return out;
}

// Mathematical equality; the advisory `integral` flag is not part of it.
bool operator==(const C1Data& a, const C1Data& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == C1Data::Kind::proportional) return a.coeff == b.coeff;
  return a.q1 == b.q1 && a.q2 == b.q2;
}

Rat NumClass::l2c1() const {
  if (c1.kind == C1Data::Kind::proportional) return c1.coeff * geom.d;
  return c1.q1;
}

std::optional<Rat> NumClass::lc1sq() const {
  if (c1.kind == C1Data::Kind::proportional) return c1.coeff * c1.coeff * geom.d;
  return c1.q2;
}

bool operator==(const NumClass& a, const NumClass& b) {
  return a.geom.d == b.geom.d && a.r == b.r && a.c1 == b.c1 && a.ch2L == b.ch2L && a.ch3 == b.ch3;
}

NumClass make_class(const PolarizedGeometry& geom, Rat r, C1Data c1, Rat ch2L, Rat ch3) {
  if (geom.d < 1) fail(Errc::invalid_geometry, "d = L^3 must be a positive integer");
  if (c1.kind == C1Data::Kind::general && c1.q2) {
    // Hodge index for ample L: (L^2.D)^2 >= L^3 * (L.D^2).
    if (c1.q1 * c1.q1 < geom.d * *c1.q2)
      fail(Errc::hodge_index_violation,
           "q1^2 = " + rat_str(c1.q1 * c1.q1) + " < d*q2 = " + rat_str(Rat(geom.d) * *c1.q2));
  }
  return NumClass{geom, std::move(r), std::move(c1), std::move(ch2L), std::move(ch3)};
}

NumClass line_bundle_class(const PolarizedGeometry& geom, const Rat& m) {
  Rat d(geom.d);
  return make_class(geom, 1, C1Data::prop(m), m * m * d / 2, m * m * m * d / 6);
}

NumClass ideal_sheaf_class(const PolarizedGeometry& geom, ZeroDimensional z) {
  if (z.length < 0) fail(Errc::invalid_argument, "subscheme length must be >= 0");
  return make_class(geom, 1, C1Data::prop(0), 0, Rat(-z.length));
}

NumClass ideal_sheaf_class(const PolarizedGeometry& geom, const CurveClassData& curve) {
  if (!curve.ch3_oc) fail(Errc::missing_ch3, "curve class lacks ch_3(O_C)");
  return make_class(geom, 1, C1Data::prop(0), -curve.deg_lc, -*curve.ch3_oc);
}

NumClass tensor_L(const NumClass& ch, const Rat& m) {
  Rat d(ch.geom.d);
  Rat q1 = ch.l2c1();  // before tensoring

  C1Data c1;
  if (ch.c1.kind == C1Data::Kind::proportional) {
    c1 = C1Data::prop(ch.c1.coeff + m * ch.r);
  } else {
    std::optional<Rat> q2;
    if (ch.c1.q2) q2 = Rat(*ch.c1.q2 + 2 * m * ch.r * q1 + m * m * ch.r * ch.r * d);
    c1 = C1Data::general(ch.c1.q1 + m * ch.r * d, std::move(q2),
                         ch.c1.integral && is_integer(m * ch.r));
  }

  Rat ch2L = ch.ch2L + m * q1 + m * m / 2 * d * ch.r;
  Rat ch3 = ch.ch3 + m * ch.ch2L + m * m / 2 * q1 + m * m * m / 6 * d * ch.r;
  return NumClass{ch.geom, ch.r, std::move(c1), std::move(ch2L), std::move(ch3)};
}

NumClass shift_negate(const NumClass& ch) {
  C1Data c1 = ch.c1;
  if (c1.kind == C1Data::Kind::proportional)
    c1.coeff = -c1.coeff;
  else
    c1.q1 = -c1.q1;  // q2 = L.(-D)^2 is unchanged
  return NumClass{ch.geom, -ch.r, std::move(c1), -ch.ch2L, -ch.ch3};
}

NumClass sum(const NumClass& a, const NumClass& b) {
  if (a.geom.d != b.geom.d)
    fail(Errc::geometry_mismatch,
         "d = " + std::to_string(a.geom.d) + " vs " + std::to_string(b.geom.d));
  C1Data c1;
  if (a.c1.kind == C1Data::Kind::proportional && b.c1.kind == C1Data::Kind::proportional) {
    c1 = C1Data::prop(a.c1.coeff + b.c1.coeff);
  } else {
    // q1 adds; q2 is quadratic and is dropped rather than guessed
    auto integral = [](const C1Data& c) {
      return c.kind == C1Data::Kind::proportional ? is_integer(c.coeff) : c.integral;
    };
    c1 = C1Data::general(a.l2c1() + b.l2c1(), std::nullopt, integral(a.c1) && integral(b.c1));
  }
  return NumClass{a.geom, a.r + b.r, std::move(c1), a.ch2L + b.ch2L, a.ch3 + b.ch3};
}

Rat discriminant_L(const NumClass& ch) {
  auto lc1sq = ch.lc1sq();
  if (!lc1sq) fail(Errc::unknown_c1_square, "L.c1^2 unknown for this class");
  return *lc1sq - 2 * ch.r * ch.ch2L;
}

NumClass dualize_L(const NumClass& ch) {
  // Chern-level dual (r, -c1, ch2, -ch3), then shift, then tensor by L.
  C1Data c1 = ch.c1;
  if (c1.kind == C1Data::Kind::proportional)
    c1.coeff = -c1.coeff;
  else
    c1.q1 = -c1.q1;
  NumClass dual{ch.geom, ch.r, std::move(c1), ch.ch2L, -ch.ch3};
  return tensor_L(shift_negate(dual), 1);
}

Rat arithmetic_genus(const Rat& ch3_oc, std::int64_t kxc) { return 1 - ch3_oc + rat(kxc, 2); }

std::vector<std::string> integrality_lint(const NumClass& ch) {
  std::vector<std::string> warnings;
  if (!is_integer(6 * ch.ch3))
    warnings.push_back("ch3 = " + rat_str(ch.ch3) + " is not in (1/6)Z");
  return warnings;
}

}  // namespace tiltstab::chern
