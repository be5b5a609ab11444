#include "ncg/gauge.hpp"

#include <cmath>

#include "ncg/random.hpp"

namespace ncg {

double GaugeElement::unitarity_deviation() const {
  return max_abs(u.adjoint() * u - Mat::Identity(u.rows(), u.cols()));
}

Mat haar_unitary(int k, std::uint64_t seed) {
  Rng rng(seed);
  const Mat z = rng.ginibre(k, k);
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < k; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

GaugeElement random_unitary(int N, int n, bool product_form, std::uint64_t seed) {
  GaugeElement g;
  if (product_form) {
    g.u1 = haar_unitary(N, derive_seed(seed, 400));
    g.u2 = haar_unitary(n, derive_seed(seed, 401));
    g.u = kron(*g.u1, *g.u2);
  } else {
    g.u = haar_unitary(N * n, derive_seed(seed, 402));
  }
  return g;
}

GaugeElement identity_element(int N, int n) {
  return {Mat::Identity(N * n, N * n), Mat::Identity(N, N), Mat::Identity(n, n)};
}

GaugeElement central_element(int N, int n, cplx lambda) {
  return {lambda * Mat::Identity(N * n, N * n), std::nullopt, std::nullopt};
}

Fluctuation transform(const GaugeTriple& gt, const Fluctuation& fl, const GaugeElement& g,
                      bool allow_any_signature) {
  if (!allow_any_signature) require_riemannian(gt.sig());
  const int m = gt.m();
  if (g.u.rows() != m || g.u.cols() != m || fl.m != m)
    throw DimensionMismatch("DimensionMismatch: gauge element size");
  const Mat& u = g.u;
  const Mat us = u.adjoint();
  auto rule = [&](const Mat& field, const Mat& base) -> Mat {
    return u * field * us + u * (base * us - us * base);
  };
  Fluctuation out = Fluctuation::zero(m);
  for (int mu = 0; mu < 4; ++mu) {
    out.A[mu] = rule(fl.A[mu], lift(gt.fuzzy.K[mu], gt.n()));
    out.S[mu] = rule(fl.S[mu], lift(gt.fuzzy.X[mu], gt.n()));
  }
  if (gt.yang_mills())
    out.phi = u * fl.phi * us;
  else
    out.phi = rule(fl.phi, kron(Mat::Identity(gt.N(), gt.N()), gt.finite.D_F));
  return out;
}

Mat adjoint_action_operator(const GaugeElement& g, int dimV) {
  const SuperOp ad = SuperOp::left(g.u) * SuperOp::right(g.u.adjoint());
  return kron(Mat::Identity(dimV, dimV), ad.rep());
}

namespace {

double rel_change(double after, double before, double scale) {
  const double denom = std::max(std::abs(before), scale);
  return denom > 0.0 ? std::abs(after - before) / denom : std::abs(after - before);
}

}  // namespace

CovarianceReport covariance_report(const GaugeTriple& gt, const Fluctuation& fl,
                                   const GaugeElement& g, const ActionPolynomial& f,
                                   const CliffordModule& mod) {
  const Signature& sig = gt.sig();
  const bool riem = sig.riemannian();
  const Fluctuation flu = transform(gt, fl, g, true);
  const Mat& u = g.u;
  const Mat us = u.adjoint();
  // The phi rule is unitarily implemented only if u commutes with 1 (x) D_F;
  // otherwise the Higgs-dependent checks are informational.
  const Mat dF = kron(Mat::Identity(gt.N(), gt.N()), gt.finite.D_F);
  const bool higgs = (!gt.yang_mills() || max_abs(fl.phi) > 0.0) &&
                     max_abs(u * dF - dF * u) > 1e-12 * (1.0 + max_abs(dF));

  CovarianceReport rep;
  rep.checks.section = sig.label();
  rep.checks.add("unitarity", g.unitarity_deviation(), 1e-12);

  // superoperator form: F(A^u) = Ad_U F(A) Ad_U^{-1}
  const FieldStrength fs = field_strength(gt, fl);
  const FieldStrength fsu = field_strength(gt, flu);
  const SuperOp U = SuperOp::left(u) * SuperOp::right(us);
  const SuperOp Ui = SuperOp::left(us) * SuperOp::right(u);
  double dev_super = 0.0, dev_matrix = 0.0, dev_ts = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      dev_super = std::max(
          dev_super, max_abs(fsu.F_super[mu][nu].rep() - (U * fs.F_super[mu][nu] * Ui).rep()));
      if (riem) {
        const Mat& F = fs.F_matrix[mu][nu];
        dev_matrix = std::max(dev_matrix, max_abs(fsu.F_matrix[mu][nu] - u * F * us));
        const Mat Lm = lift(gt.fuzzy.K[mu], gt.n()), Ln = lift(gt.fuzzy.K[nu], gt.n());
        const Mat LL = Lm * Ln - Ln * Lm;
        const Mat T = F - LL;
        const Mat Tu = fsu.F_matrix[mu][nu] - LL;
        dev_ts = std::max(dev_ts, max_abs(Tu - (u * T * us + u * LL * us - LL)));
      }
    }
  rep.checks.add("field_strength_covariance_superop", dev_super, 1e-10, riem);
  if (riem) {
    rep.checks.add("field_strength_covariance", dev_matrix, 1e-10);
    rep.checks.add("Ts_identity", dev_ts, 1e-10);
  }

  const Mat D = assemble_fluctuated(gt, fl, mod);
  const Mat Du = assemble_fluctuated(gt, flu, mod);
  const Mat AdU = adjoint_action_operator(g, mod.dimV);
  rep.checks.add("unitary_equivalence", rel_frobenius(Du, AdU * D * AdU.adjoint()), 1e-10,
                 !higgs);

  const double s0 = spectral_action_direct(D, f);
  const double s1 = spectral_action_direct(Du, f);
  rep.checks.add("spectral_action_invariance", rel_change(s1, s0, 0.0), 1e-9, !higgs);

  if (riem && gt.fuzzy.flat() && fl.flat() && f.degree() <= 4) {
    const ActionBreakdown b0 = sectors(gt, fl, f);
    const ActionBreakdown b1 = sectors(gt, flu, f);
    const double scale = std::abs(b0.total_closed);
    rep.checks.add("sector_ym_invariance", rel_change(b1.s_ym, b0.s_ym, scale), 1e-9);
    rep.checks.add("sector_theta_invariance", rel_change(b1.s_theta, b0.s_theta, scale), 1e-9);
    rep.checks.add("sector_h_invariance", rel_change(b1.s_h, b0.s_h, scale), 1e-9, !higgs);
    rep.checks.add("sector_gh_invariance", rel_change(b1.s_gh, b0.s_gh, scale), 1e-9, !higgs);
  }
  if (!gt.yang_mills()) {
    const OneFormBasis ob = one_form_basis(gt.finite.D_F);
    rep.leakage = higgs_leakage(flu.phi, ob, gt.N());
  }
  return rep;
}

}  // namespace ncg
