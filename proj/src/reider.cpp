#include "tiltstab/reider.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "tiltstab/error.hpp"
#include "tiltstab/poly.hpp"
#include "tiltstab/tilt.hpp"

namespace tiltstab::reider {

namespace {

void require_alpha(std::int64_t alpha) {
  if (alpha < 1) fail(Errc::invalid_argument, "alpha must be a positive integer");
}

}  // namespace

NumClass extension_class(const PolarizedGeometry& geom, std::int64_t alpha) {
  require_alpha(alpha);
  Rat b = tilt::half();
  NumClass liz = chern::tensor_L(chern::ideal_sheaf_class(geom, chern::ZeroDimensional{alpha}), 1);
  NumClass ox1 = chern::shift_negate(chern::line_bundle_class(geom, 0));
  NumClass by_sum = chern::sum(chern::tensor_L(liz, -b), chern::tensor_L(ox1, -b));

  NumClass closed =
      chern::make_class(geom, 0, C1Data::prop(1), 0, Rat(geom.d) / 24 - alpha);
  if (!(by_sum == closed))
    throw std::logic_error("extension class: summed and closed forms disagree");
  return closed;
}

std::optional<Rat> min_unstable_t(const PolarizedGeometry& geom, std::int64_t alpha) {
  require_alpha(alpha);
  if (geom.d <= 24 * alpha) return std::nullopt;
  return rat(1, 8) - Rat(3 * alpha) / geom.d;
}

ConditionReport check_conditions(const PolarizedGeometry& geom, std::int64_t alpha,
                                 const std::vector<C1Data>& divisors,
                                 const std::vector<CurveClassData>& curves) {
  require_alpha(alpha);
  ConditionReport report;
  report.a_lhs = Rat(geom.d);
  report.a_rhs = Rat(49 * alpha);
  report.a_holds = report.a_lhs > report.a_rhs;  // strict
  report.scope_note = "checked the supplied divisor/curve candidates only";

  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const C1Data& div = divisors[i];
    if (div.kind != C1Data::Kind::general || !div.q2)
      fail(Errc::invalid_argument,
           "divisor " + std::to_string(i) + " must carry L^2.D and L.D^2");
    if (div.q1 * div.q1 < geom.d * *div.q2)
      fail(Errc::hodge_index_violation, "divisor " + std::to_string(i) + ": (L^2.D)^2 < d * L.D^2");
    DivisorCheck check;
    check.divisor = div;
    check.applicable = div.integral && div.q1 > 0 && *div.q2 < alpha;
    check.holds = !check.applicable || div.q1 >= Rat(7 * alpha);
    report.divisors.push_back(std::move(check));
  }

  for (const CurveClassData& curve : curves)
    report.curves.push_back(CurveCheck{curve, curve.deg_lc >= Rat(3 * alpha)});

  report.all_pass = report.a_holds;
  for (const auto& check : report.divisors) report.all_pass = report.all_pass && check.holds;
  for (const auto& check : report.curves) report.all_pass = report.all_pass && check.holds;
  return report;
}

Rat reider_rhs(const Rat& kappa, std::int64_t alpha) {
  require_alpha(alpha);
  if (kappa <= 0) fail(Errc::nonpositive_kappa, "kappa must be positive, got " + rat_str(kappa));
  Rat a(alpha);
  return 12 * a + (kappa * kappa + 36 * a * a) / kappa;
}

Rat reider_rhs_derivative(const Rat& kappa, std::int64_t alpha) {
  require_alpha(alpha);
  if (kappa <= 0) fail(Errc::nonpositive_kappa, "kappa must be positive, got " + rat_str(kappa));
  Rat a(alpha);
  return (kappa * kappa - 36 * a * a) / (kappa * kappa);
}

DestabilizerVerdict classify_destabilizer(std::int64_t r, const C1Data& gamma,
                                          const PolarizedGeometry& geom, std::int64_t alpha) {
  require_alpha(alpha);
  if (r < 1) fail(Errc::invalid_argument, "destabilizer rank must be a positive integer");
  if (gamma.kind != C1Data::Kind::general || !gamma.q2)
    fail(Errc::invalid_argument, "gamma must carry q1 = L^2.Gamma and q2 = L.Gamma^2");

  const Rat q1 = gamma.q1;
  const Rat q2 = *gamma.q2;
  const Rat d(geom.d);
  const Rat six_alpha(6 * alpha);

  DestabilizerVerdict verdict;
  auto step = [&verdict](std::string name, Rat lhs, std::string rel, Rat rhs) {
    verdict.trace.push_back(TraceStep{std::move(name), std::move(lhs), std::move(rel), std::move(rhs)});
  };
  bool hodge_ok = q1 * q1 >= d * q2;

  // Gate (I): L^2.Gamma <= L.Gamma^2 + 6 alpha.
  if (q1 > q2 + six_alpha) {
    step("(I) L^2.Gamma <= L.Gamma^2 + 6*alpha fails", q1, ">", q2 + six_alpha);
    verdict.kind = DestabilizerVerdict::Kind::inconsistent_input;
    verdict.failed = LemmaCheck::ineq_i;
    return verdict;
  }
  step("(I)", q1, "<=", q2 + six_alpha);

  // Gate (II): (d/2)(1 - 1/r) <= L^2.Gamma < d/2.
  Rat lower = d / 2 * (1 - rat(1, r));
  if (q1 < lower || q1 >= d / 2) {
    if (q1 < lower)
      step("(II) lower bound fails", q1, "<", lower);
    else
      step("(II) upper bound fails", q1, ">=", d / 2);
    verdict.kind = DestabilizerVerdict::Kind::inconsistent_input;
    verdict.failed = LemmaCheck::ineq_ii;
    return verdict;
  }
  step("(II)", lower, "<=", q1);
  step("(II)", q1, "<", d / 2);

  if (r > 1) {
    // (II) gives d/4 <= q1, (I) gives q1 <= q2 + 6a, and the Hodge index
    // squeezes q2 <= 6a, so no such subobject exists once d > 48a.
    if (d > Rat(48 * alpha)) {
      step("rank >= 2 chain forces d <= 48*alpha, but", d, ">", Rat(48 * alpha));
      verdict.kind = DestabilizerVerdict::Kind::contradicts_volume;
      verdict.bound = Rat(48 * alpha);
      return verdict;
    }
    if (!hodge_ok) {
      step("Hodge index fails", q1 * q1, "<", d * q2);
      verdict.kind = DestabilizerVerdict::Kind::inconsistent_input;
      verdict.failed = LemmaCheck::hodge;
      return verdict;
    }
    step("d within the rank >= 2 volume bound", d, "<=", Rat(48 * alpha));
    verdict.kind = DestabilizerVerdict::Kind::no_contradiction;
    verdict.note = "assumptions insufficient for rank >= 2 at this volume";
    return verdict;
  }

  // r = 1.
  if (q1 == 0) {
    verdict.kind = DestabilizerVerdict::Kind::curve_case;
    verdict.note =
        "candidate matches L tensor I_W; for zero-dimensional W the wall formula "
        "gives t0 = 1/8, so the curve case is reported, not asserted";
    return verdict;
  }

  if (q1 >= 1) {
    Rat kappa = q2;
    if (kappa >= Rat(alpha)) {
      Rat bound = reider_rhs(kappa, alpha);
      step("kappa = L.Gamma^2", kappa, ">=", Rat(alpha));
      if (d > bound) {
        step("Hodge + (I) force d <= 12*alpha + (kappa^2 + 36*alpha^2)/kappa, but", d, ">", bound);
        verdict.kind = DestabilizerVerdict::Kind::contradicts_volume;
        verdict.bound = bound;
        return verdict;
      }
      if (!hodge_ok) {
        step("Hodge index fails", q1 * q1, "<", d * q2);
        verdict.kind = DestabilizerVerdict::Kind::inconsistent_input;
        verdict.failed = LemmaCheck::hodge;
        return verdict;
      }
      step("d within the kappa volume bound", d, "<=", bound);
      verdict.kind = DestabilizerVerdict::Kind::no_contradiction;
      verdict.note = "assumptions insufficient for kappa >= alpha at this volume";
      return verdict;
    }
    // kappa < alpha (including kappa <= 0): condition (B) applies to the
    // integral class Gamma and demands q1 >= 7 alpha, while (I) caps q1
    // below that.
    step("kappa = L.Gamma^2", kappa, "<", Rat(alpha));
    step("(I) caps L^2.Gamma", q1, "<=", q2 + six_alpha);
    step("condition (B) would require L^2.Gamma >=", Rat(7 * alpha), ">", q1);
    verdict.kind = DestabilizerVerdict::Kind::excluded_by_assumption_b;
    return verdict;
  }

  if (!hodge_ok) {
    step("Hodge index fails", q1 * q1, "<", d * q2);
    verdict.kind = DestabilizerVerdict::Kind::inconsistent_input;
    verdict.failed = LemmaCheck::hodge;
    return verdict;
  }
  verdict.kind = DestabilizerVerdict::Kind::no_contradiction;
  verdict.note = "0 < L^2.Gamma < 1: integrality of Gamma unavailable";
  return verdict;
}

CurveCaseReport curve_case_chain(const PolarizedGeometry& geom, std::int64_t alpha, const Rat& lc) {
  require_alpha(alpha);
  if (lc <= 0) fail(Errc::nonpositive_degree, "L.C must be positive, got " + rat_str(lc));

  CurveCaseReport report;
  Rat d(geom.d);
  report.lower = d / 48 - rat(alpha, 2);
  report.upper = d / 48 - lc / 6;
  report.lattice_start = report.lower;
  report.lattice_step = rat(1, 2);

  if (lc > Rat(3 * alpha)) {
    report.verdict = CurveCaseReport::Verdict::empty;
    report.note = "interval empty: every curve-case candidate is excluded";
  } else if (lc == Rat(3 * alpha)) {
    report.verdict = CurveCaseReport::Verdict::boundary;
    report.note =
        "interval degenerates to its endpoint, forcing equality throughout; the remaining "
        "exclusion needs L.Delta = 0, while L.Delta of the candidate is 2*L.C != 0";
  } else {
    report.verdict = CurveCaseReport::Verdict::nonempty;
    report.note = "interval nonempty: the candidate survives the numeric chain";
  }
  return report;
}

DerivativeReport conj_equal_derivative(const NumClass& ch, const Rat& b0) {
  if (ch.r == 0) fail(Errc::zero_rank, "derivative identity needs ch0 != 0");
  if (ch.c1.kind != C1Data::Kind::proportional)
    fail(Errc::non_proportional_c1, "ch1 must be proportional to L");

  const Rat d(ch.geom.d);
  const Rat r = ch.r;
  const Rat c = ch.c1.coeff;
  const Rat e = ch.ch2L;

  // T(b)^2 = (6/rd) (e - b c d + (b^2/2) r d), from nu = 0 at twist b.
  Poly b = Poly::x();
  Poly t_sq = Poly::constant(6 * e / (r * d)) - (6 * c / r) * b + Poly::constant(3) * b * b;
  Rat t_sq_at_b0 = t_sq.eval(b0);
  if (t_sq_at_b0 <= 0)
    fail(Errc::negative_t_square, "no positive wall T at b0 = " + rat_str(b0) +
                                      " (T^2 = " + rat_str(t_sq_at_b0) + ")");

  // f(b) = ch3 - b e + (b^2/2) c d - (b^3/6) r d - (1/18) T(b)^2 (c - r b) d.
  Poly f = Poly::constant(ch.ch3) - e * b + (c * d / 2) * (b * b) - (r * d / 6) * (b * b * b) -
           rat(1, 18) * (t_sq * (Poly::constant(c) - r * b) * Poly::constant(d));

  DerivativeReport report;
  report.fprime = f.derivative().eval(b0);
  report.l_delta = chern::discriminant_L(ch);
  // Constant pinned by the finite-difference oracle in the acceptance
  // suite; it is an exact algebraic identity, so a mismatch is a bug.
  if (report.fprime * 3 * r != report.l_delta)
    throw std::logic_error("conj_equal_derivative: 3r f'(b0) != L.Delta");
  if (report.l_delta != 0) report.ratio = Rat(report.fprime / report.l_delta);
  return report;
}

bool operator==(const FujitaTuple& a, const FujitaTuple& b) {
  return a.d == b.d && a.q1 == b.q1 && a.q2 == b.q2 && a.lc == b.lc && a.failed == b.failed;
}

bool operator<(const FujitaTuple& a, const FujitaTuple& b) {
  return std::tie(a.d, a.q1, a.q2, a.lc, a.failed) < std::tie(b.d, b.q1, b.q2, b.lc, b.failed);
}

namespace {

// One contiguous d-slice of the Fujita grid. Bounds are small enough
// (validated below) that all products stay well inside int64.
void fujita_scan_range(std::int64_t m, std::int64_t alpha, std::int64_t grid_bound,
                       std::int64_t d_from, std::int64_t d_to,
                       std::vector<FujitaTuple>& out) {
  const std::int64_t m2 = m * m, m3 = m * m * m;
  std::vector<std::int64_t> c_failing;  // lc values with m*lc < 3*alpha
  for (std::int64_t lc = 1; lc <= grid_bound; ++lc)
    if (m * lc < 3 * alpha) c_failing.push_back(lc);

  for (std::int64_t d = d_from; d <= d_to; ++d) {
    const bool a_fails = m3 * d <= 49 * alpha;
    for (std::int64_t q1 = 1; q1 <= grid_bound; ++q1) {
      for (std::int64_t q2 = 0; q2 <= grid_bound; ++q2) {
        if (q1 * q1 < d * q2) break;  // Hodge; larger q2 only gets worse
        const bool b_fails = m * q2 < alpha && m2 * q1 < 7 * alpha;  // m^2 q1 > 0 always
        if (a_fails || b_fails) {
          // first failing condition in A, B, C order covers every lc
          const char failed = a_fails ? 'A' : 'B';
          for (std::int64_t lc = 1; lc <= grid_bound; ++lc)
            out.push_back(FujitaTuple{d, q1, q2, lc, failed});
        } else {
          for (std::int64_t lc : c_failing) out.push_back(FujitaTuple{d, q1, q2, lc, 'C'});
        }
      }
    }
  }
}

}  // namespace

FujitaResult fujita_verify(std::int64_t m, std::int64_t alpha, std::int64_t grid_bound,
                           std::int64_t min_d, unsigned workers) {
  if (m < 1) fail(Errc::invalid_argument, "m must be a positive integer");
  if (alpha != 1 && alpha != 2) fail(Errc::invalid_argument, "alpha must be 1 or 2");
  if (grid_bound < 1) fail(Errc::invalid_argument, "grid_bound must be >= 1");
  if (min_d < 1) fail(Errc::invalid_argument, "min_d must be >= 1");
  if (m > 10000 || grid_bound > 10000)
    fail(Errc::invalid_argument, "m and grid_bound are capped at 10000");

  FujitaResult result;
  if (min_d > grid_bound) return result;

  const std::int64_t span = grid_bound - min_d + 1;
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(span)));

  std::vector<std::vector<FujitaTuple>> parts(n);
  std::vector<std::thread> threads;
  for (unsigned k = 0; k < n; ++k) {
    const std::int64_t from = min_d + span * k / n;
    const std::int64_t to = min_d + span * (k + 1) / n - 1;
    threads.emplace_back(fujita_scan_range, m, alpha, grid_bound, from, to, std::ref(parts[k]));
  }
  for (auto& t : threads) t.join();

  for (auto& part : parts)
    result.counterexamples.insert(result.counterexamples.end(), part.begin(), part.end());
  std::sort(result.counterexamples.begin(), result.counterexamples.end());
  result.pass = result.counterexamples.empty();
  return result;
}

L5Report l5_analysis(std::int64_t m3, std::int64_t kxc) {
  if (m3 < 1) fail(Errc::invalid_argument, "M^3 must be a positive integer");

  L5Report report;
  report.d = 125 * m3;
  report.lc = Rat(5);
  report.mc = Rat(1);
  report.ch3t_a = Rat(report.d) / 48 - 1;
  report.ch3_oc = rat(-3, 2);
  report.g_a = rat(5, 2) + rat(kxc, 2);
  report.deg_kl_on_c = Rat(kxc + 5);
  report.parity_obstruction = kxc % 2 == 0;
  return report;
}

}  // namespace tiltstab::reider
