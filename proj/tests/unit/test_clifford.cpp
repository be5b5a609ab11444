#include <doctest.h>

#include "ncg/clifford.hpp"

using namespace ncg;

namespace {
struct KoRow {
  int p, q, s, eps, eps_p, eps_pp;
  cplx sigma;
};
// KO sign table and chirality prefactors, one row per signature
const KoRow kRows[] = {
    {0, 4, 4, -1, +1, +1, {-1, 0}},
    {1, 3, 2, -1, +1, -1, {0, 1}},
    {2, 2, 0, +1, +1, +1, {1, 0}},
    {3, 1, 6, +1, +1, -1, {0, -1}},
};
}  // namespace

TEST_SUITE("clifford") {
  TEST_CASE("sign table") {
    for (const auto& r : kRows) {
      CAPTURE(r.p);
      const Signature s = build_signature(r.p, r.q);
      CHECK(s.s == r.s);
      CHECK(s.eps == r.eps);
      CHECK(s.eps_prime == r.eps_p);
      CHECK(s.eps_dblprime == r.eps_pp);
      CHECK(std::abs(s.sigma_eta - r.sigma) < 1e-15);
    }
    const Signature e04 = build_signature(0, 4);
    CHECK(e04.e == std::array<int, 4>{-1, -1, -1, -1});
    CHECK(e04.e_hat == std::array<int, 4>{1, 1, 1, 1});
    const Signature e13 = build_signature(1, 3);
    CHECK(e13.e == std::array<int, 4>{1, -1, -1, -1});
    CHECK(e13.e_hat == e13.e);
  }

  TEST_CASE("non four-dimensional signatures are rejected") {
    CHECK_THROWS_AS(build_signature(1, 4), NonFourDimensional);
    CHECK_THROWS_AS(build_signature(0, 3), NonFourDimensional);
    CHECK(all_signatures().size() == 4);
  }

  TEST_CASE("riemannian gammas") {
    const CliffordModule mod = build_gammas(build_signature(0, 4));
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(max_abs(mod.gamma(mu).adjoint() + mod.gamma(mu)) < 1e-15);
      CHECK(max_abs(mod.gamma(mu) * mod.gamma(mu).adjoint() - mod.identity()) < 1e-15);
      for (int nu = 0; nu < 4; ++nu) {
        const Mat ac = mod.gamma(mu) * mod.gamma(nu) + mod.gamma(nu) * mod.gamma(mu);
        CHECK(max_abs(ac + 2.0 * (mu == nu) * mod.identity()) < 1e-15);
      }
    }
    CHECK(max_abs(mod.chirality * mod.chirality - mod.identity()) < 1e-15);
    CHECK(max_abs(mod.chirality - mod.chirality.adjoint()) < 1e-15);
    CHECK(max_abs(conjugation_square(mod) + mod.identity()) < 1e-15);  // eps = -1
  }

  TEST_CASE("split signature hermiticity") {
    const CliffordModule mod = build_gammas(build_signature(2, 2));
    CHECK(max_abs(mod.gamma(0) - mod.gamma(0).adjoint()) < 1e-15);
    CHECK(max_abs(mod.gamma(1) - mod.gamma(1).adjoint()) < 1e-15);
    CHECK(max_abs(mod.gamma(2) + mod.gamma(2).adjoint()) < 1e-15);
    CHECK(max_abs(mod.gamma(3) + mod.gamma(3).adjoint()) < 1e-15);
  }

  TEST_CASE("triple products") {
    const CliffordModule m04 = build_gammas(build_signature(0, 4));
    const Mat h0 = gamma_product(m04, MultiIndex::hat(0));
    CHECK(max_abs(h0 - m04.gamma(1) * m04.gamma(2) * m04.gamma(3)) < 1e-15);
    CHECK(max_abs(h0 - h0.adjoint()) < 1e-15);
    const CliffordModule m13 = build_gammas(build_signature(1, 3));
    const Mat h13 = gamma_product(m13, MultiIndex::hat(0));
    CHECK(max_abs(h13 - h13.adjoint()) < 1e-15);
    CHECK(max_abs(gamma_product(m13, MultiIndex::single(2)) - m13.gamma(2)) == 0.0);
  }

  TEST_CASE("four-gamma traces") {
    const Signature e04 = build_signature(0, 4), e13 = build_signature(1, 3);
    CHECK(trace4(e04, 0, 1, 2, 3) == 0.0);
    CHECK(trace4(e04, 0, 1, 1, 0) == 4.0);
    CHECK(trace4(e13, 0, 0, 1, 1) == -4.0);
    CHECK(trace4(e04, 0, 1, 0, 1) == -4.0);
    CHECK(trace4(e13, 0, 0, 0, 0) == 4.0);
  }

  TEST_CASE("full invariant and identity reports pass in every signature") {
    for (const auto& sig : all_signatures()) {
      CAPTURE(sig.label());
      const CliffordModule mod = build_gammas(sig);
      const IdentityReport a = verify_module_invariants(mod);
      const IdentityReport b = verify_gamma_identities(mod);
      CHECK(a.pass());
      CHECK(b.pass());
      for (const auto& c : a.checks) CHECK(c.max_deviation <= 1e-12);
      for (const auto& c : b.checks) CHECK(c.max_deviation <= 1e-12);
    }
  }

  TEST_CASE("levi civita") {
    CHECK(levi_civita_abs(0, 1, 2, 3) == 1);
    CHECK(levi_civita_abs(0, 1, 1, 3) == 0);
    CHECK(levi_civita_abs(3, 2, 1, 0) == 1);
  }
}
