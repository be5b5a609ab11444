#include <doctest.h>

#include <algorithm>

#include "ncg/dirac.hpp"
#include "ncg/random.hpp"

using namespace ncg;

TEST_SUITE("dirac") {
  TEST_CASE("lichnerowicz sign symbols") {
    const Signature e04 = build_signature(0, 4);
    CHECK(sign_s(e04, 0, 1, 2, 3) == -1);
    CHECK(sign_t(e04, 0, 1) == 1);
    CHECK(sign_s(e04, 0, 0, 2, 3) == 0);
    CHECK(sign_s(e04, 1, 2, 2, 3) == 0);
    for (const auto& sig : all_signatures())
      for (int mu = 0; mu < 4; ++mu) CHECK(sign_t(sig, mu, mu) == 0);
  }

  TEST_CASE("zero data assembles to zero") {
    const Signature sig = build_signature(1, 3);
    const Mat D = assemble_fuzzy_dirac(FuzzyData::zero(2, sig), build_gammas(sig));
    CHECK(D.rows() == 16);
    CHECK(max_abs(D) == 0.0);
  }

  TEST_CASE("single L0 in (0,4)") {
    const Signature sig = build_signature(0, 4);
    const CliffordModule mod = build_gammas(sig);
    FuzzyData fz = FuzzyData::zero(2, sig);
    Rng rng(3);
    Mat l = rng.ginibre(2, 2);
    l = (0.5 * (l - l.adjoint())).eval();
    fz.K[0] = l;
    const Mat one = Mat::Identity(2, 2);
    const Mat want = kron(mod.gamma(0), kron(one, l) - kron(l.transpose(), one));
    const Mat D = assemble_fuzzy_dirac(fz, mod);
    CHECK(max_abs(D - want) < 1e-15);
    CHECK(max_abs(D - D.adjoint()) < 1e-15);
  }

  TEST_CASE("random product operators are self-adjoint") {
    for (const auto& sig : all_signatures()) {
      CAPTURE(sig.label());
      const GaugeTriple gt = make_triple(random_fuzzy(2, sig, default_scale(2), 5, true),
                                         random_finite(2, 1.0, 6));
      const Mat D = assemble_product_dirac(gt, build_gammas(sig));
      CHECK(D.rows() == 64);
      CHECK(max_abs(D - D.adjoint()) <= 1e-12);
    }
  }

  TEST_CASE("vanishing D_F repeats the fuzzy spectrum n^2 times") {
    const Signature sig = build_signature(0, 4);
    const CliffordModule mod = build_gammas(sig);
    const FuzzyData fz = random_fuzzy(2, sig, default_scale(2), 9, true);
    const GaugeTriple gt = make_triple(fz, FiniteData::zero(2));
    Eigen::SelfAdjointEigenSolver<Mat> a(assemble_fuzzy_dirac(fz, mod), Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Mat> b(assemble_product_dirac(gt, mod), Eigen::EigenvaluesOnly);
    std::vector<double> want;
    for (Eigen::Index i = 0; i < a.eigenvalues().size(); ++i)
      for (int r = 0; r < 4; ++r) want.push_back(a.eigenvalues()(i));
    std::sort(want.begin(), want.end());
    REQUIRE(want.size() == std::size_t(b.eigenvalues().size()));
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(want[i] - b.eigenvalues()(i)) < 1e-12);
  }

  TEST_CASE("triple validation") {
    const Signature sig = build_signature(0, 4);
    FuzzyData fz = FuzzyData::zero(2, sig);
    FiniteData bad = FiniteData::zero(2);
    bad.D_F(0, 1) = 1.0;  // not Hermitian
    CHECK_THROWS_AS(make_triple(fz, bad), NotSelfAdjoint);
    FiniteData wrong{2, Mat::Zero(3, 3)};
    CHECK_THROWS_AS(make_triple(fz, wrong), DimensionMismatch);
    fz.K[1] = Mat::Zero(3, 3);
    CHECK_THROWS_AS(make_triple(fz, FiniteData::zero(2)), DimensionMismatch);
  }

  TEST_CASE("lichnerowicz formula with triples, every signature") {
    for (const auto& sig : all_signatures()) {
      const CliffordModule mod = build_gammas(sig);
      for (int N : {2, 3})
        for (std::uint64_t seed : {1u, 2u}) {
          CAPTURE(sig.label());
          CAPTURE(N);
          const FuzzyData fz = random_fuzzy(N, sig, default_scale(N), seed, true);
          const Mat D = assemble_fuzzy_dirac(fz, mod);
          CHECK(rel_frobenius(lichnerowicz_rhs(fz, mod), D * D) <= 1e-10);
        }
    }
  }

  TEST_CASE("lichnerowicz without triples") {
    const Signature sig = build_signature(0, 4);
    const CliffordModule mod = build_gammas(sig);
    const FuzzyData fz = random_fuzzy(3, sig, default_scale(3), 4, false);
    const auto k = k_ops(fz);
    SuperOp diag = SuperOp::zero(3);
    for (int mu = 0; mu < 4; ++mu) diag += double(sig.e[mu]) * (k[mu] * k[mu]);
    Mat want = kron(mod.identity(), diag.rep());
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        if (mu != nu)
          want += 0.5 * kron(mod.gamma(mu) * mod.gamma(nu), commutator(k[mu], k[nu]).rep());
    CHECK(rel_frobenius(lichnerowicz_rhs(fz, mod), want) < 1e-13);
  }

  TEST_CASE("axioms on Yang-Mills data") {
    for (const auto& sig : all_signatures()) {
      CAPTURE(sig.label());
      const CliffordModule mod = build_gammas(sig);
      const GaugeTriple gt = make_triple(random_fuzzy(2, sig, default_scale(2), 21, true),
                                         FiniteData::zero(2));
      const IdentityReport r = check_axioms(gt, mod, 22, 20);
      CHECK(r.pass());
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.enforced);
        CHECK(c.max_deviation <= 1e-10);
      }
      const RealStructure J = build_real_structure(mod, gt.m());
      CHECK(max_abs(J.square() - double(sig.eps) * Mat::Identity(gt.hilbert_dim(), gt.hilbert_dim())) <
            1e-14);
      const Mat g = chirality_operator(mod, gt.m());
      const Mat D = assemble_product_dirac(gt, mod);
      CHECK(max_abs(g * D + D * g) < 1e-13);
    }
  }
}
