#pragma once

#include <doctest.h>

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "tiltstab/chern.hpp"
#include "tiltstab/error.hpp"
#include "tiltstab/geometry.hpp"
#include "tiltstab/rational.hpp"
#include "xml_check.hpp"

namespace testsupport {

using tiltstab::PolarizedGeometry;
using tiltstab::Rat;
using tiltstab::chern::C1Data;
using tiltstab::chern::NumClass;

using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rat rand_rat(Rng& rng, std::int64_t lo = -20, std::int64_t hi = 20,
                    std::int64_t den_max = 12) {
  return tiltstab::rat(rand_int(rng, lo, hi), rand_int(rng, 1, den_max));
}

inline Rat rand_nonzero_rat(Rng& rng, std::int64_t lo = -20, std::int64_t hi = 20,
                            std::int64_t den_max = 12) {
  for (;;) {
    Rat x = rand_rat(rng, lo, hi, den_max);
    if (x != 0) return x;
  }
}

inline Rat rand_positive_rat(Rng& rng, std::int64_t hi = 20, std::int64_t den_max = 12) {
  return tiltstab::rat(rand_int(rng, 1, hi), rand_int(rng, 1, den_max));
}

// Random class on the given geometry. General c1 data is drawn Hodge-tight:
// q2 = q1^2/d - (nonnegative), so make_class always accepts it.
inline NumClass rand_class(Rng& rng, const PolarizedGeometry& geom, bool general = false,
                           bool with_q2 = true) {
  Rat r = rand_rat(rng, -6, 6, 4);
  C1Data c1;
  if (general) {
    Rat q1 = rand_rat(rng, -20, 20, 4);
    if (with_q2) {
      Rat q2 = q1 * q1 / geom.d - rand_positive_rat(rng, 10, 4) + 1;
      if (q2 * geom.d > q1 * q1) q2 = q1 * q1 / geom.d;
      c1 = C1Data::general(q1, q2);
    } else {
      c1 = C1Data::general(q1, std::nullopt);
    }
  } else {
    c1 = C1Data::prop(rand_rat(rng, -8, 8, 6));
  }
  return tiltstab::chern::make_class(geom, r, c1, rand_rat(rng), rand_rat(rng));
}

// lambda * ch, for scaling-invariance checks (test-only; not a library op).
inline NumClass scale_class(const NumClass& ch, const Rat& lambda) {
  C1Data c1 = ch.c1;
  if (c1.kind == C1Data::Kind::proportional) {
    c1.coeff *= lambda;
  } else {
    c1.q1 *= lambda;
    if (c1.q2) *c1.q2 *= lambda * lambda;
  }
  return NumClass{ch.geom, ch.r * lambda, c1, ch.ch2L * lambda, ch.ch3 * lambda};
}

// Runs fn and reports the tiltstab error code it throws.
inline tiltstab::Errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const tiltstab::Error& err) {
    return err.code();
  }
  FAIL("expected a tiltstab::Error");
  return tiltstab::Errc::invalid_argument;
}

}  // namespace testsupport
