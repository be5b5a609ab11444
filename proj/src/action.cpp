#include "ncg/action.hpp"

#include <cmath>

namespace ncg {

namespace {

// Tr(AB) without forming the product
cplx trace_prod(const Mat& a, const Mat& b) { return a.transpose().cwiseProduct(b).sum(); }

}  // namespace

int ActionPolynomial::degree() const {
  for (int i = int(coeffs.size()); i >= 1; --i)
    if (coeffs[i - 1] != 0.0) return i;
  return 0;
}

double ActionPolynomial::operator()(double x) const {
  double acc = 0.0, xp = x;
  for (double c : coeffs) {
    acc += c * xp;
    xp *= x;
  }
  return 0.5 * acc;
}

void require_flat(const GaugeTriple& gt, const Fluctuation& fl) {
  if (!gt.fuzzy.flat() || !fl.flat())
    throw NotFlat("NotFlat: closed forms need X = 0 and S = 0");
}

void require_riemannian(const Signature& sig) {
  if (!sig.riemannian())
    throw NotRiemannian("NotRiemannian: signature " + sig.label() + " is not (0,4)");
}

FieldStrength field_strength(const GaugeTriple& gt, const Fluctuation& fl) {
  const auto d = covariant_k(gt, fl);
  FieldStrength fs;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      fs.F_super[mu][nu] = mu == nu ? SuperOp::zero(gt.m()) : commutator(d[mu], d[nu]);
  if (gt.sig().riemannian()) {
    fs.has_matrix = true;
    std::array<Mat, 4> cov;
    for (int mu = 0; mu < 4; ++mu) cov[mu] = lift(gt.fuzzy.K[mu], gt.n()) + fl.A[mu];
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        fs.F_matrix[mu][nu] = cov[mu] * cov[nu] - cov[nu] * cov[mu];
  }
  return fs;
}

SuperOp theta(const GaugeTriple& gt, const Fluctuation& fl) {
  const auto d = covariant_k(gt, fl);
  SuperOp t = SuperOp::zero(gt.m());
  for (int mu = 0; mu < 4; ++mu) t += double(gt.sig().e[mu]) * (d[mu] * d[mu]);
  return t;
}

SuperOp higgs_or_zero(const GaugeTriple& gt, const Fluctuation& fl) {
  if (gt.yang_mills() && max_abs(fl.phi) == 0.0) return SuperOp::zero(gt.m());
  return higgs_field(fl, gt);
}

double trace_d2_closed(const GaugeTriple& gt, const Fluctuation& fl) {
  require_flat(gt, fl);
  const SuperOp th = theta(gt, fl);
  const SuperOp phi = higgs_or_zero(gt, fl);
  return (th.trace() + trace_prod(phi.rep(), phi.rep())).real();
}

double trace_d4_closed(const GaugeTriple& gt, const Fluctuation& fl) {
  require_flat(gt, fl);
  const Signature& sig = gt.sig();
  const auto d = covariant_k(gt, fl);
  const SuperOp phi = higgs_or_zero(gt, fl);
  const FieldStrength fs = field_strength(gt, fl);

  cplx ff = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      const Mat& F = fs.F_super[mu][nu].rep();
      ff += double(sig.e[mu] * sig.e[nu]) * trace_prod(F, F);
    }
  SuperOp th = theta(gt, fl);
  const Mat sq = th.rep() + phi.rep() * phi.rep();
  cplx dphi = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const Mat c = commutator(d[mu], phi).rep();
    dphi += double(sig.e[mu]) * trace_prod(c, c);
  }
  return (-0.5 * ff + trace_prod(sq, sq) - dphi).real();
}

GaugeHiggsSides gauge_higgs_sides(const GaugeTriple& gt, const Fluctuation& fl, double a4) {
  const Signature& sig = gt.sig();
  const auto d = covariant_k(gt, fl);
  const SuperOp phi = higgs_or_zero(gt, fl);
  const Mat& P = phi.rep();
  const Mat th = theta(gt, fl).rep();
  GaugeHiggsSides out;
  out.tr_phi2_theta = trace_prod(P * P, th).real();
  cplx comm = 0.0, dpdp = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const Mat c = commutator(d[mu], phi).rep();
    comm += double(sig.e[mu]) * trace_prod(c, c);
    const Mat dp = d[mu].rep() * P;
    dpdp += double(sig.e[mu]) * trace_prod(dp, dp);
  }
  out.lhs = a4 * (out.tr_phi2_theta - 0.5 * comm.real());
  out.rhs = -a4 * dpdp.real();
  return out;
}

ActionBreakdown sectors(const GaugeTriple& gt, const Fluctuation& fl,
                        const ActionPolynomial& f) {
  require_riemannian(gt.sig());
  require_flat(gt, fl);
  const Signature& sig = gt.sig();
  const double a2 = f.a(2), a4 = f.a(4);

  const FieldStrength fs = field_strength(gt, fl);
  cplx ff = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      const Mat& F = fs.F_super[mu][nu].rep();
      ff += double(sig.e[mu] * sig.e[nu]) * trace_prod(F, F);
    }

  const Mat th = theta(gt, fl).rep();
  const SuperOp phi = higgs_or_zero(gt, fl);
  const Mat P2 = phi.rep() * phi.rep();

  ActionBreakdown out;
  out.s_ym = -0.25 * a4 * ff.real();
  out.s_theta = 0.5 * a2 * th.trace().real() + 0.5 * a4 * trace_prod(th, th).real();
  out.s_h = 0.5 * a2 * P2.trace().real() + 0.5 * a4 * trace_prod(P2, P2).real();
  const GaugeHiggsSides gh = gauge_higgs_sides(gt, fl, a4);
  out.s_gh = gh.lhs;
  out.s_gh_reduced = gh.rhs;
  out.total_closed = out.s_ym + out.s_theta + out.s_h + out.s_gh;
  out.positivity_applies = a4 >= 0.0;
  return out;
}

std::vector<double> trace_powers(const Mat& D, int kmax) {
  if (D.rows() != D.cols()) throw DimensionMismatch("DimensionMismatch: operator not square");
  if ((D - D.adjoint()).norm() > 1e-10 * (1.0 + D.norm()))
    throw NotSelfAdjoint("NotSelfAdjoint: spectral action needs a self-adjoint operator");
  std::vector<double> out(kmax + 1, 0.0);
  if (D.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Mat> es(D, Eigen::EigenvaluesOnly);
  for (double lam : es.eigenvalues()) {
    double p = 1.0;
    for (int k = 0; k <= kmax; ++k) {
      out[k] += p;
      p *= lam;
    }
  }
  return out;
}

double spectral_action_direct(const Mat& D, const ActionPolynomial& f) {
  const int deg = f.degree();
  const auto tr = trace_powers(D, deg);
  double acc = 0.0;
  for (int i = 1; i <= deg; ++i) acc += 0.5 * f.a(i) * tr[i];
  return 0.25 * acc;
}

double tetrahedral(const std::array<Mat, 4>& K, const Signature& sig) {
  const int m = int(K[0].rows());
  std::array<SuperOp, 4> k;
  for (int mu = 0; mu < 4; ++mu) {
    if (K[mu].rows() != m) throw DimensionMismatch("DimensionMismatch: tetrahedral blocks");
    k[mu] = SuperOp::gen_comm(K[mu], sig.e[mu]);
  }
  cplx acc = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      const Mat kk = k[mu].rep() * k[nu].rep();
      acc += double(sig.e[mu] * sig.e[nu]) * trace_prod(kk, kk);
    }
  return -0.5 * acc.real();
}

Mat flat_weitzenbock_rhs(const GaugeTriple& gt, const Fluctuation& fl,
                         const CliffordModule& mod) {
  require_flat(gt, fl);
  const auto d = covariant_k(gt, fl);
  const SuperOp phi = higgs_or_zero(gt, fl);
  const FieldStrength fs = field_strength(gt, fl);
  Mat out = kron(mod.identity(), theta(gt, fl).rep() + phi.rep() * phi.rep());
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu)
      if (mu != nu)
        out += kron(mod.gamma(mu) * mod.gamma(nu), 0.5 * fs.F_super[mu][nu].rep());
    out += kron(mod.gamma(mu) * mod.chirality, commutator(d[mu], phi).rep());
  }
  return out;
}

Mat weitzenbock_rhs(const GaugeTriple& gt, const Fluctuation& fl, const CliffordModule& mod) {
  return lichnerowicz_rhs(mod, covariant_k(gt, fl), covariant_x(gt, fl));
}

}  // namespace ncg
