#include <doctest.h>

#include "ncg/sampler.hpp"

using namespace ncg;

namespace {
SamplerConfig small_config(long steps, long burn_in, std::uint64_t seed) {
  SamplerConfig c;
  c.steps = steps;
  c.burn_in = burn_in;
  c.tune_every = 50;
  c.seed = seed;
  return c;
}

GaugeTriple template_triple() {
  const Signature sig = build_signature(0, 4);
  return make_triple(random_fuzzy(2, sig, default_scale(2), 1, false), random_finite(2, 1.0, 2));
}
}  // namespace

TEST_SUITE("sampler") {
  TEST_CASE("histograms") {
    const Histogram z = eigen_histogram(Mat::Zero(16, 16), 4);
    CHECK(z.total() == 16);
    CHECK(z.counts == std::vector<long>{0, 0, 16, 0});
    CHECK(z.edges.front() == -1.0);
    CHECK(z.edges.back() == 1.0);
    const Histogram one = eigen_histogram(Mat::Identity(64, 64), 1);
    CHECK(one.total() == 64);
    const Histogram top = histogram_of({-2.0, 2.0, 0.5}, 2);
    CHECK(top.counts == std::vector<long>{1, 2});
  }

  TEST_CASE("chiral spectra are symmetric") {
    const Signature sig = build_signature(0, 4);
    const GaugeTriple gt = make_triple(random_fuzzy(2, sig, default_scale(2), 3, true),
                                       FiniteData::zero(2));
    const Histogram h = eigen_histogram(assemble_product_dirac(gt, build_gammas(sig)), 10);
    for (std::size_t i = 0; i < h.counts.size(); ++i)
      CHECK(h.counts[i] == h.counts[h.counts.size() - 1 - i]);
  }

  TEST_CASE("integrability") {
    CHECK_NOTHROW(require_integrable(ActionPolynomial{{0.0, 1.0, 0.0, 1.0}}));
    CHECK_THROWS_AS(require_integrable(ActionPolynomial{{0.0, 1.0, 0.0, -1.0}}), ConfigError);
    CHECK_THROWS_AS(require_integrable(ActionPolynomial{{0.0, 1.0, 1.0}}), ConfigError);
  }

  TEST_CASE("empty runs") {
    CHECK(run_chain(small_config(0, 0, 1), template_triple()).records.empty());
    CHECK(run_chain(small_config(30, 30, 1), template_triple()).records.empty());
  }

  TEST_CASE("chain keeps its constraints and is reproducible") {
    const GaugeTriple gt = template_triple();
    SamplerConfig c = small_config(400, 100, 9);
    c.thin = 3;
    const ChainResult a = run_chain(c, gt);
    const ChainResult b = run_chain(c, gt);
    REQUIRE(a.records.size() == 100);
    CHECK(a.records.front().step == 100);
    CHECK(a.records[1].step == 103);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].s_total == b.records[i].s_total);
      CHECK(a.records[i].acceptance == b.records[i].acceptance);
    }
    CHECK(state_constraint_deviation(a.final_state, one_form_basis(gt.finite.D_F), 2) < 1e-12);
    for (const auto& r : a.records)
      CHECK(r.s_total == doctest::Approx(r.s_ym + r.s_h + r.s_gh + r.s_theta).epsilon(1e-12));
    c.seed = 10;
    CHECK(run_chain(c, gt).records.back().s_total != a.records.back().s_total);
  }

  TEST_CASE("gaussian self-test") {
    SamplerConfig c = small_config(60000, 10000, 3);
    c.N = 2;
    c.step = {1.0, 1.0, 1.0};
    const ChainResult r = run_gaussian_self_test(c);
    std::vector<double> x;
    for (const auto& s : r.records) x.push_back(s.s_total);
    const Estimate e = batch_means(x);
    CHECK(e.samples == 50000);
    CHECK(std::abs(e.mean - 2.0) <= 3.0 * e.stderr_);
    CHECK(r.acceptance > 0.2);
    CHECK(r.acceptance < 0.6);
  }

  TEST_CASE("batch means") {
    std::vector<double> x(40);
    for (int i = 0; i < 40; ++i) x[i] = i % 2;
    const Estimate e = batch_means(x, 20);
    CHECK(e.mean == doctest::Approx(0.5));
    CHECK(e.stderr_ == doctest::Approx(0.0));
    std::vector<double> ramp(100);
    for (int i = 0; i < 100; ++i) ramp[i] = i;
    CHECK(half_split_z(ramp) > 5.0);
  }
}
