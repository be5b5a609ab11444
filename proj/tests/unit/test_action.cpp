#include <doctest.h>

#include "ncg/action.hpp"

using namespace ncg;

namespace {

GaugeTriple flat_triple(const Signature& sig, int N, int n, std::uint64_t seed) {
  return make_triple(random_fuzzy(N, sig, default_scale(N), seed, false),
                     random_finite(n, 1.0, seed + 1));
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_SUITE("action") {
  TEST_CASE("polynomial convention f(x) = 1/2 sum a_i x^i") {
    const ActionPolynomial f{{0.0, 1.0, 0.0, 3.0}};
    CHECK(f.degree() == 4);
    CHECK(f.a(4) == 3.0);
    CHECK(f.a(5) == 0.0);
    CHECK(f(2.0) == doctest::Approx(0.5 * (4.0 + 48.0)));
    CHECK(ActionPolynomial{{0.0, 0.0}}.degree() == 0);
  }

  TEST_CASE("direct spectral action on a diagonal operator") {
    Mat D = Mat::Zero(4, 4);
    D.diagonal() << 1.0, -1.0, 2.0, -2.0;
    CHECK(spectral_action_direct(D, ActionPolynomial{{0.0, 1.0}}) == doctest::Approx(1.25));
    CHECK(spectral_action_direct(Mat::Zero(4, 4), ActionPolynomial{{1.0, 1.0, 1.0, 1.0}}) == 0.0);
    Mat bad = Mat::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(trace_powers(bad, 2), NotSelfAdjoint);
  }

  TEST_CASE("analytic traces for a single diagonal L0") {
    // ad(L0) has eigenvalues 0, 0, +-2i, so 1/4 Tr D^2 = 8 and 1/4 Tr D^4 = 32
    const Signature sig = build_signature(0, 4);
    FuzzyData fz = FuzzyData::zero(2, sig);
    fz.K[0] = Mat::Zero(2, 2);
    fz.K[0].diagonal() << cplx(0, 1), cplx(0, -1);
    const GaugeTriple gt = make_triple(fz, FiniteData::zero(1));
    const Fluctuation fl = Fluctuation::zero(gt.m());
    CHECK(trace_d2_closed(gt, fl) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(trace_d4_closed(gt, fl) == doctest::Approx(32.0).epsilon(1e-14));
    const auto tp = trace_powers(assemble_fluctuated(gt, fl, build_gammas(sig)), 4);
    CHECK(tp[2] == doctest::Approx(32.0).epsilon(1e-12));
    CHECK(tp[4] == doctest::Approx(128.0).epsilon(1e-12));
  }

  TEST_CASE("zero data") {
    const Signature sig = build_signature(0, 4);
    const GaugeTriple gt = make_triple(FuzzyData::zero(2, sig), FiniteData::zero(2));
    const Fluctuation fl = Fluctuation::zero(gt.m());
    CHECK(trace_d2_closed(gt, fl) == 0.0);
    CHECK(trace_d4_closed(gt, fl) == 0.0);
    const ActionBreakdown b = sectors(gt, fl, ActionPolynomial{{0.0, 1.0, 0.0, 1.0}});
    CHECK(b.total_closed == 0.0);
    CHECK(b.s_ym == 0.0);
    CHECK(b.s_h == 0.0);
  }

  TEST_CASE("trace closed forms in every signature") {
    for (const auto& sig : all_signatures()) {
      CAPTURE(sig.label());
      const CliffordModule mod = build_gammas(sig);
      const GaugeTriple gt = flat_triple(sig, 3, 2, 5);
      const Fluctuation fl = random_fluctuation(gt, 0.5, 7, false);
      const auto tp = trace_powers(assemble_fluctuated(gt, fl, mod), 4);
      CHECK(rel(trace_d2_closed(gt, fl), tp[2] / 4) <= 1e-10);
      CHECK(rel(trace_d4_closed(gt, fl), tp[4] / 4) <= 1e-9);
    }
  }

  TEST_CASE("closed forms refuse curved data") {
    const Signature sig = build_signature(0, 4);
    const GaugeTriple gt = make_triple(random_fuzzy(2, sig, 0.5, 1, true), FiniteData::zero(2));
    const Fluctuation fl = Fluctuation::zero(gt.m());
    CHECK_THROWS_AS(trace_d2_closed(gt, fl), NotFlat);
    CHECK_THROWS_AS(sectors(gt, fl, ActionPolynomial{{0.0, 1.0}}), NotFlat);
    const Signature lor = build_signature(1, 3);
    const GaugeTriple gl = flat_triple(lor, 2, 2, 3);
    CHECK_THROWS_AS(sectors(gl, Fluctuation::zero(gl.m()), ActionPolynomial{{0.0, 1.0}}),
                    NotRiemannian);
  }

  TEST_CASE("sector sum equals the direct trace") {
    const Signature sig = build_signature(0, 4);
    const CliffordModule mod = build_gammas(sig);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const GaugeTriple gt = flat_triple(sig, 2, 2, 10 * seed);
      const Fluctuation fl = random_fluctuation(gt, 0.5, 10 * seed + 5, false);
      for (const auto& f : {ActionPolynomial{{0.0, 1.0, 0.0, 1.0}}, ActionPolynomial{{0.0, -2.0, 0.0, 0.5}},
                            ActionPolynomial{{0.7, 1.0, -0.3, 1.0}}}) {
        const ActionBreakdown b = sectors(gt, fl, f);
        CHECK(rel(b.total_closed, spectral_action_direct(assemble_fluctuated(gt, fl, mod), f)) <= 1e-9);
        if (f.a(4) >= 0.0) {
          CHECK(b.positivity_applies);
          CHECK(b.s_ym >= -1e-10);
        }
        // the theta and Higgs sectors are sums of f_e over eigenvalues, so a
        // negative a2 can push them below zero even when a4 >= 0
        if (f.a(4) >= 0.0 && f.a(2) >= 0.0) {
          CHECK(b.s_theta >= -1e-10);
          CHECK(b.s_h >= -1e-10);
        }
      }
    }
  }

  TEST_CASE("quadratic truncation") {
    const Signature sig = build_signature(0, 4);
    const GaugeTriple gt = flat_triple(sig, 2, 2, 41);
    const Fluctuation fl = random_fluctuation(gt, 0.5, 42, false);
    const ActionBreakdown b = sectors(gt, fl, ActionPolynomial{{0.0, 3.0}});
    CHECK(b.s_ym == 0.0);
    CHECK(b.s_gh == 0.0);
    const double trt = theta(gt, fl).trace().real();
    const SuperOp Phi = higgs_or_zero(gt, fl);
    const double trp = (Phi * Phi).trace().real();
    CHECK(rel(b.total_closed, 1.5 * (trt + trp)) <= 1e-12);
    CHECK_FALSE(sectors(gt, fl, ActionPolynomial{{0.0, 1.0, 0.0, -1.0}}).positivity_applies);
  }

  TEST_CASE("gauge-Higgs term: reduced form misses 2 a4 Tr(Phi^2 theta)") {
    const Signature sig = build_signature(0, 4);
    const GaugeTriple gt = flat_triple(sig, 2, 2, 51);
    const Fluctuation fl = random_fluctuation(gt, 0.5, 52, false);
    const GaugeHiggsSides s = gauge_higgs_sides(gt, fl, 1.0);
    CHECK(std::abs(s.lhs - s.rhs - 2.0 * s.tr_phi2_theta) <= 1e-10 * std::abs(s.lhs));
    CHECK(std::abs(s.tr_phi2_theta) > 1e-3);  // so the reduced form is really off
    const ActionBreakdown b = sectors(gt, fl, ActionPolynomial{{0.0, 1.0, 0.0, 1.0}});
    CHECK(b.s_gh == doctest::Approx(s.lhs).epsilon(1e-12));
    CHECK(b.s_gh_reduced == doctest::Approx(s.rhs).epsilon(1e-12));
  }

  TEST_CASE("tetrahedral term") {
    const Signature sig = build_signature(0, 4);
    std::array<Mat, 4> K;
    for (auto& k : K) k = Mat::Zero(2, 2);
    K[0] << cplx(0, 1), cplx(0.5, 0), cplx(-0.5, 0), cplx(0, -2);
    CHECK(tetrahedral(K, sig) == 0.0);
    for (auto& k : K) k = Mat::Identity(2, 2);
    CHECK(tetrahedral(K, sig) == 0.0);

    const FuzzyData fz = random_fuzzy(2, sig, 1.0, 61, false);
    std::array<Mat, 4> kop;
    const Mat one = Mat::Identity(2, 2);
    for (int mu = 0; mu < 4; ++mu)
      kop[mu] = kron(one, fz.K[mu]) + double(sig.e[mu]) * kron(fz.K[mu].transpose(), one);
    cplx naive = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        if (mu != nu)
          naive += double(sig.e[mu] * sig.e[nu]) * (kop[mu] * kop[nu] * kop[mu] * kop[nu]).trace();
    CHECK(tetrahedral(fz.K, sig) == doctest::Approx(-0.5 * naive.real()).epsilon(1e-12));
  }

  TEST_CASE("weitzenbock in every signature") {
    for (const auto& sig : all_signatures()) {
      CAPTURE(sig.label());
      const CliffordModule mod = build_gammas(sig);
      const GaugeTriple gt = make_triple(random_fuzzy(2, sig, default_scale(2), 71, true),
                                         FiniteData::zero(2));
      const Fluctuation fl = random_fluctuation(gt, 0.5, 72, true);
      const Mat D = assemble_fluctuated(gt, fl, mod);
      CHECK(rel_frobenius(weitzenbock_rhs(gt, fl, mod), D * D) <= 1e-10);

      const GaugeTriple fh = flat_triple(sig, 2, 2, 73);
      const Fluctuation fh_fl = random_fluctuation(fh, 0.5, 74, false);
      const Mat Dh = assemble_fluctuated(fh, fh_fl, mod);
      CHECK(rel_frobenius(flat_weitzenbock_rhs(fh, fh_fl, mod), Dh * Dh) <= 1e-10);
    }
  }
}
