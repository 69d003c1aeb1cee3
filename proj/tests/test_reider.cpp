#include <doctest.h>

#include "support.hpp"
#include "tiltstab/error.hpp"
#include "tiltstab/poly.hpp"
#include "tiltstab/reider.hpp"
#include "tiltstab/tilt.hpp"

using namespace tiltstab;
using namespace tiltstab::chern;
using namespace tiltstab::reider;
using testsupport::rand_int;
using testsupport::rand_positive_rat;
using testsupport::rand_rat;
using testsupport::Rng;
using testsupport::thrown_code;

using Kind = DestabilizerVerdict::Kind;

TEST_CASE("extension class closed form") {
  CHECK(extension_class(make_geometry(48), 1) ==
        make_class(make_geometry(48), 0, C1Data::prop(1), 0, 1));
  CHECK(extension_class(make_geometry(24), 1) ==
        make_class(make_geometry(24), 0, C1Data::prop(1), 0, 0));
  CHECK(extension_class(make_geometry(250), 2) ==
        make_class(make_geometry(250), 0, C1Data::prop(1), 0, rat(101, 12)));
  CHECK(thrown_code([] { extension_class(make_geometry(48), 0); }) == Errc::invalid_argument);
}

TEST_CASE("instability threshold") {
  CHECK(*min_unstable_t(make_geometry(50), 1) == rat(13, 200));
  CHECK(*min_unstable_t(make_geometry(49), 1) == rat(25, 392));
  CHECK_FALSE(min_unstable_t(make_geometry(24), 1).has_value());
  CHECK_FALSE(min_unstable_t(make_geometry(20), 1).has_value());

  // the strong BG report flips exactly at the threshold
  for (std::int64_t d : {25, 49, 50, 97, 200}) {
    for (std::int64_t alpha : {1, 2}) {
      PolarizedGeometry g = make_geometry(d);
      auto threshold = min_unstable_t(g, alpha);
      if (d <= 24 * alpha) {
        CHECK_FALSE(threshold.has_value());
        continue;
      }
      REQUIRE(threshold.has_value());
      CHECK(*threshold > 0);
      CHECK(*threshold < rat(1, 8));
      NumClass e = extension_class(g, alpha);
      CHECK(tilt::strong_bg_check(e, *threshold, Rat(0)).satisfied);
      CHECK(tilt::strong_bg_check(e, *threshold, Rat(0)).slack == 0);
      CHECK_FALSE(tilt::strong_bg_check(e, *threshold * rat(99, 100), Rat(0)).satisfied);
      CHECK(tilt::strong_bg_check(e, *threshold * rat(101, 100), Rat(0)).satisfied);
    }
  }
}

TEST_CASE("condition report (A)(B)(C)") {
  // the m = 4 Fujita instance
  auto report = check_conditions(make_geometry(64), 1, {C1Data::general(16, Rat(0))},
                                 {CurveClassData{Rat(4), std::nullopt, std::nullopt}});
  CHECK(report.a_holds);
  REQUIRE(report.divisors.size() == 1);
  CHECK(report.divisors[0].applicable);
  CHECK(report.divisors[0].holds);
  REQUIRE(report.curves.size() == 1);
  CHECK(report.curves[0].holds);
  CHECK(report.all_pass);
  CHECK_FALSE(report.scope_note.empty());

  // (A) is strict
  auto d49 = check_conditions(make_geometry(49), 1, {}, {});
  CHECK_FALSE(d49.a_holds);
  CHECK_FALSE(d49.all_pass);
  CHECK(d49.a_lhs == 49);
  CHECK(d49.a_rhs == 49);

  // (C) fails: L.C = 5 < 6 = 3 alpha
  auto curves = check_conditions(make_geometry(1000), 2, {},
                                 {CurveClassData{Rat(5), std::nullopt, std::nullopt}});
  CHECK(curves.a_holds);
  CHECK_FALSE(curves.curves[0].holds);
  CHECK_FALSE(curves.all_pass);

  // (B) skips divisors with L.D^2 >= alpha or L^2.D <= 0 or non-integral ones
  auto skipped = check_conditions(make_geometry(64), 1,
                                  {C1Data::general(10, Rat(1)), C1Data::general(-8, Rat(1)),
                                   C1Data::general(2, Rat(0), false)},
                                  {});
  CHECK_FALSE(skipped.divisors[0].applicable);
  CHECK_FALSE(skipped.divisors[1].applicable);
  CHECK_FALSE(skipped.divisors[2].applicable);
  CHECK(skipped.all_pass);

  CHECK(thrown_code([] {
          check_conditions(make_geometry(4), 1, {C1Data::general(1, Rat(1))}, {});
        }) == Errc::hodge_index_violation);
  CHECK(thrown_code([] {
          check_conditions(make_geometry(4), 1, {C1Data::general(1, std::nullopt)}, {});
        }) == Errc::invalid_argument);
}

TEST_CASE("reider volume bound") {
  for (std::int64_t alpha : {1, 2, 5}) {
    CHECK(reider_rhs(Rat(alpha), alpha) == 49 * alpha);
    CHECK(reider_rhs(Rat(6 * alpha), alpha) == 24 * alpha);
    CHECK(reider_rhs_derivative(Rat(6 * alpha), alpha) == 0);
  }
  CHECK(reider_rhs(Rat(2), 1) == 32);
  CHECK(thrown_code([] { reider_rhs(Rat(0), 1); }) == Errc::nonpositive_kappa);
  CHECK(thrown_code([] { reider_rhs(Rat(-2), 3); }) == Errc::nonpositive_kappa);

  // the closed-form derivative agrees with symbolic differentiation of
  // 12a + (k^2 + 36 a^2)/k as a rational function
  Rng rng(55);
  for (int i = 0; i < 100; ++i) {
    std::int64_t alpha = rand_int(rng, 1, 6);
    Rat a(alpha);
    RatFunc bound{Poly({36 * a * a, 12 * a, Rat(1)}), Poly::x()};
    RatFunc deriv = bound.derivative();
    Rat kappa = rand_positive_rat(rng, 40, 7);
    CHECK(bound.eval(kappa) == reider_rhs(kappa, alpha));
    CHECK(deriv.eval(kappa) == reider_rhs_derivative(kappa, alpha));
    if (kappa <= 6 * a) CHECK(reider_rhs_derivative(kappa, alpha) <= 0);
  }
}

TEST_CASE("destabilizer classification") {
  // spec r = 2 chain: (I) and (II) hold, d = 200 > 48
  auto r2 = classify_destabilizer(2, C1Data::general(50, Rat(44)), make_geometry(200), 1);
  CHECK(r2.kind == Kind::contradicts_volume);
  CHECK(*r2.bound == 48);
  CHECK(!r2.trace.empty());

  // curve case
  auto cc = classify_destabilizer(1, C1Data::general(0, Rat(0)), make_geometry(1000), 2);
  CHECK(cc.kind == Kind::curve_case);
  CHECK(cc.note.find("1/8") != std::string::npos);

  // kappa < alpha routes to the assumption (B) exclusion
  auto b = classify_destabilizer(1, C1Data::general(5, Rat(0)), make_geometry(60), 1);
  CHECK(b.kind == Kind::excluded_by_assumption_b);

  // gate failures
  auto bad_i = classify_destabilizer(1, C1Data::general(20, Rat(2)), make_geometry(60), 1);
  CHECK(bad_i.kind == Kind::inconsistent_input);
  CHECK(*bad_i.failed == LemmaCheck::ineq_i);

  auto bad_ii = classify_destabilizer(2, C1Data::general(2, Rat(1)), make_geometry(100), 1);
  CHECK(bad_ii.kind == Kind::inconsistent_input);
  CHECK(*bad_ii.failed == LemmaCheck::ineq_ii);

  auto bad_ii_hi = classify_destabilizer(1, C1Data::general(3, Rat(0)), make_geometry(6), 1);
  CHECK(bad_ii_hi.kind == Kind::inconsistent_input);
  CHECK(*bad_ii_hi.failed == LemmaCheck::ineq_ii);

  // r >= 2 below the volume bound, candidate numbers Hodge-consistent
  auto small = classify_destabilizer(2, C1Data::general(8, Rat(2)), make_geometry(32), 1);
  CHECK(small.kind == Kind::no_contradiction);

  // r >= 2 below the volume bound, candidate numbers violate Hodge
  auto hodge = classify_destabilizer(2, C1Data::general(12, Rat(7)), make_geometry(40), 1);
  CHECK(hodge.kind == Kind::inconsistent_input);
  CHECK(*hodge.failed == LemmaCheck::hodge);

  // kappa >= alpha: the input itself already satisfies d <= bound
  auto quiet = classify_destabilizer(1, C1Data::general(7, Rat(1)), make_geometry(30), 1);
  CHECK(quiet.kind == Kind::no_contradiction);

  CHECK(thrown_code([] {
          classify_destabilizer(0, C1Data::general(1, Rat(0)), make_geometry(10), 1);
        }) == Errc::invalid_argument);
  CHECK(thrown_code([] {
          classify_destabilizer(1, C1Data::prop(1), make_geometry(10), 1);
        }) == Errc::invalid_argument);
  CHECK(thrown_code([] {
          classify_destabilizer(1, C1Data::general(1, std::nullopt), make_geometry(10), 1);
        }) == Errc::invalid_argument);
}

TEST_CASE("curve case interval") {
  using Verdict = CurveCaseReport::Verdict;
  PolarizedGeometry g = make_geometry(100);

  auto empty = curve_case_chain(g, 1, Rat(4));
  CHECK(empty.verdict == Verdict::empty);
  CHECK(empty.lower == rat(100, 48) - rat(1, 2));
  CHECK(empty.upper == rat(100, 48) - rat(4, 6));
  CHECK(empty.lower > empty.upper);

  auto boundary = curve_case_chain(g, 1, Rat(3));
  CHECK(boundary.verdict == Verdict::boundary);
  CHECK(boundary.lower == boundary.upper);

  auto nonempty = curve_case_chain(g, 1, Rat(2));
  CHECK(nonempty.verdict == Verdict::nonempty);
  CHECK(nonempty.lower < nonempty.upper);

  CHECK(nonempty.lattice_step == rat(1, 2));
  CHECK(nonempty.lattice_start == nonempty.lower);

  CHECK(thrown_code([&] { curve_case_chain(g, 1, Rat(0)); }) == Errc::nonpositive_degree);
  CHECK(thrown_code([&] { curve_case_chain(g, 1, Rat(-3)); }) == Errc::nonpositive_degree);

  // verdict matches the sign of L.C - 3 alpha across a rational sweep
  for (std::int64_t alpha = 1; alpha <= 3; ++alpha) {
    for (std::int64_t num = 1; num <= 60; ++num) {
      Rat lc = rat(num, 5);
      auto report = curve_case_chain(g, alpha, lc);
      CHECK((report.verdict == Verdict::empty) == (lc > 3 * alpha));
      CHECK((report.verdict == Verdict::boundary) == (lc == 3 * alpha));
      CHECK((report.verdict == Verdict::nonempty) == (lc < 3 * alpha));
    }
  }
}

TEST_CASE("derivative identity") {
  PolarizedGeometry g = make_geometry(36);

  // line bundles and point ideal sheaves sit on the equality locus
  auto lb = conj_equal_derivative(line_bundle_class(g, 2), rat(1, 3));
  CHECK(lb.fprime == 0);
  CHECK(lb.l_delta == 0);
  CHECK_FALSE(lb.ratio.has_value());

  auto iz = conj_equal_derivative(ideal_sheaf_class(g, ZeroDimensional{1}), rat(1, 5));
  CHECK(iz.fprime == 0);
  CHECK(iz.l_delta == 0);

  // L (x) I_C with L.C = 1: L.Delta = 2 and f' = 2/(3r) = 2/3
  CurveClassData curve{Rat(1), std::nullopt, Rat(0)};
  NumClass a = tensor_L(ideal_sheaf_class(g, curve), 1);
  auto lic = conj_equal_derivative(a, rat(1, 4));
  CHECK(lic.l_delta == 2);
  CHECK(lic.fprime == rat(2, 3));
  CHECK(*lic.ratio == rat(1, 3));

  // preconditions
  NumClass torsion = make_class(g, 0, C1Data::prop(1), 1, 0);
  CHECK(thrown_code([&] { conj_equal_derivative(torsion, Rat(0)); }) == Errc::zero_rank);
  NumClass general = make_class(g, 1, C1Data::general(3, Rat(0)), 0, 0);
  CHECK(thrown_code([&] { conj_equal_derivative(general, Rat(0)); }) ==
        Errc::non_proportional_c1);
  NumClass sunk = make_class(make_geometry(1), 1, C1Data::prop(0), -1, 0);
  CHECK(thrown_code([&] { conj_equal_derivative(sunk, Rat(0)); }) == Errc::negative_t_square);
}

TEST_CASE("fujita grid verification") {
  CHECK(fujita_verify(4, 1, 30).pass);
  CHECK(fujita_verify(5, 1, 30).pass);
  CHECK(fujita_verify(6, 2, 30).pass);

  auto m3 = fujita_verify(3, 1, 30);
  CHECK_FALSE(m3.pass);
  CHECK(!m3.counterexamples.empty());
  for (const auto& t : m3.counterexamples) {
    CHECK(t.d == 1);
    CHECK(t.failed == 'A');
  }
  CHECK(fujita_verify(3, 1, 30, 2).pass);  // the d >= 2 refinement

  // worker partitioning does not change the result
  auto serial = fujita_verify(3, 1, 25, 1, 1);
  auto parallel = fujita_verify(3, 1, 25, 1, 5);
  CHECK(serial.counterexamples == parallel.counterexamples);

  CHECK(thrown_code([] { fujita_verify(4, 3, 10); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { fujita_verify(0, 1, 10); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { fujita_verify(4, 1, 0); }) == Errc::invalid_argument);
}

TEST_CASE("L = M^5 analysis") {
  auto one = l5_analysis(1, 1);
  CHECK(one.d == 125);
  CHECK(one.lc == 5);
  CHECK(one.mc == 1);
  CHECK(one.ch3t_a == rat(77, 48));
  CHECK(one.ch3_oc == rat(-3, 2));
  CHECK(one.g_a == 3);
  CHECK(one.deg_kl_on_c == 6);
  CHECK_FALSE(one.parity_obstruction);

  CHECK(l5_analysis(1, 0).parity_obstruction);

  auto two = l5_analysis(2, -1);
  CHECK(two.d == 250);
  CHECK(two.ch3t_a == rat(101, 24));
  CHECK(two.g_a == 2);
  CHECK(two.deg_kl_on_c == 4);
  CHECK_FALSE(two.parity_obstruction);

  for (std::int64_t m3 = 1; m3 <= 4; ++m3) {
    for (std::int64_t kxc = -3; kxc <= 3; ++kxc) {
      auto report = l5_analysis(m3, kxc);
      CHECK(report.deg_kl_on_c == 2 * report.g_a);
      CHECK(is_integer(report.g_a) == (kxc % 2 != 0));
      CHECK(report.parity_obstruction == (kxc % 2 == 0));
      // ch3t_A is the unique lattice point in [d/48 - 1, d/48 - 5/6]
      Rat lo = Rat(report.d) / 48 - 1, hi = Rat(report.d) / 48 - rat(5, 6);
      CHECK(report.ch3t_a >= lo);
      CHECK(report.ch3t_a <= hi);
      CHECK(report.ch3t_a == lo);  // lattice start d/48 - alpha/2 with alpha = 2
    }
  }

  CHECK(thrown_code([] { l5_analysis(0, 1); }) == Errc::invalid_argument);
}

TEST_CASE("extension class equals its summed construction on a grid") {
  for (std::int64_t d = 1; d <= 60; ++d) {
    PolarizedGeometry g = make_geometry(d);
    for (std::int64_t alpha = 1; alpha <= 3; ++alpha) {
      NumClass by_sum =
          sum(tensor_L(ideal_sheaf_class(g, ZeroDimensional{alpha}), rat(1, 2)),
              tensor_L(shift_negate(line_bundle_class(g, 0)), rat(-1, 2)));
      CHECK(extension_class(g, alpha) == by_sum);
    }
  }
}
