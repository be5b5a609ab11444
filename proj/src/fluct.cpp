#include "ncg/fluct.hpp"

#include <cmath>

#include "ncg/random.hpp"

namespace ncg {

Fluctuation Fluctuation::zero(int m) {
  Fluctuation fl;
  fl.m = m;
  for (int mu = 0; mu < 4; ++mu) {
    fl.A[mu] = Mat::Zero(m, m);
    fl.S[mu] = Mat::Zero(m, m);
  }
  fl.phi = Mat::Zero(m, m);
  return fl;
}

bool Fluctuation::flat(double tol) const {
  for (const auto& s : S)
    if (max_abs(s) > tol) return false;
  return true;
}

double adjointness_deviation(const Fluctuation& fl, const Signature& sig) {
  double dev = max_abs(fl.phi - fl.phi.adjoint());
  for (int mu = 0; mu < 4; ++mu) {
    dev = std::max(dev, max_abs(fl.A[mu].adjoint() - double(sig.e[mu]) * fl.A[mu]));
    dev = std::max(dev, max_abs(fl.S[mu].adjoint() - double(sig.e_hat[mu]) * fl.S[mu]));
  }
  return dev;
}

OneFormBasis one_form_basis(const Mat& D_F, double rel_cutoff) {
  const int n = int(D_F.rows());
  const int n2 = n * n;
  Mat cols(n2, n2 * n2);
  int c = 0;
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      Mat ea = Mat::Zero(n, n), eb = Mat::Zero(n, n);
      ea(a % n, a / n) = 1.0;
      eb(b % n, b / n) = 1.0;
      cols.col(c++) = vec(ea * (D_F * eb - eb * D_F));
    }
  Eigen::JacobiSVD<Mat> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int r = 0;
  const double top = sv.size() ? sv(0) : 0.0;
  if (top > 0.0)
    while (r < sv.size() && sv(r) > rel_cutoff * top) ++r;
  return {n, svd.matrixU().leftCols(r)};
}

Mat project_higgs(const Mat& phi, const OneFormBasis& b, int N) {
  const int n = b.n;
  if (phi.rows() != N * n || phi.cols() != N * n)
    throw DimensionMismatch("DimensionMismatch: Higgs matrix is not Nn x Nn");
  Mat out = Mat::Zero(N * n, N * n);
  if (b.rank() == 0) return out;
  // kron(E_ij, f) places f in block (i, j)
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Vec v = vec(phi.block(i * n, j * n, n, n));
      const Vec p = b.basis * (b.basis.adjoint() * v);
      out.block(i * n, j * n, n, n) = unvec(p, n);
    }
  return out;
}

double higgs_leakage(const Mat& phi, const OneFormBasis& b, int N) {
  return (phi - project_higgs(phi, b, N)).norm();
}

std::vector<AlgebraPair> random_pairs(int m, int count, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 200));
  std::vector<AlgebraPair> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Mat a = rng.ginibre(m, m);
    Mat c = rng.ginibre(m, m);
    out.push_back({std::move(a), std::move(c)});
  }
  return out;
}

Mat connes_one_form(const GaugeTriple& gt, const CliffordModule& mod,
                    const std::vector<AlgebraPair>& pairs) {
  const int m = gt.m();
  const Mat D = assemble_product_dirac(gt, mod);
  Mat omega = Mat::Zero(D.rows(), D.cols());
  for (const auto& pr : pairs) {
    if (pr.a.rows() != m || pr.a.cols() != m || pr.c.rows() != m || pr.c.cols() != m)
      throw DimensionMismatch("DimensionMismatch: algebra element is not Nn x Nn");
    const Mat ra = algebra_rep(pr.a, mod.dimV);
    const Mat rc = algebra_rep(pr.c, mod.dimV);
    omega += ra * (D * rc - rc * D);
  }
  return omega;
}

Mat fluctuate(const Mat& D, const Mat& omega, const RealStructure& J, int eps_prime,
              bool symmetrize) {
  if (D.rows() != omega.rows() || D.cols() != omega.cols() ||
      J.unitary.rows() != D.rows())
    throw DimensionMismatch("DimensionMismatch: fluctuate operand sizes");
  Mat w = omega;
  const double asym = (omega - omega.adjoint()).norm();
  if (asym > 1e-9 * omega.norm()) {
    if (!symmetrize)
      throw NotSelfAdjoint("NotSelfAdjoint: one-form is not self-adjoint (use symmetrize)");
    w = 0.5 * (omega + omega.adjoint());
  }
  return D + w + double(eps_prime) * J.conjugate(w);
}

Fluctuation extract_fluctuation(const Mat& omega, const CliffordModule& mod, int m,
                                double* residual) {
  const int dv = mod.dimV;
  const Eigen::Index b = Eigen::Index(m) * m;
  if (omega.rows() != dv * b || omega.cols() != dv * b)
    throw DimensionMismatch("DimensionMismatch: one-form size");

  // partial trace Tr_V(G^{-1} omega) / dimV
  auto coefficient = [&](const Mat& g) {
    const Mat gi = g.inverse();
    Mat acc = Mat::Zero(b, b);
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dv; ++j)
        if (gi(j, i) != cplx(0.0)) acc += gi(j, i) * omega.block(i * b, j * b, b, b);
    return Mat(acc / double(dv));
  };

  Fluctuation fl = Fluctuation::zero(m);
  Mat rebuilt = Mat::Zero(omega.rows(), omega.cols());
  auto take = [&](const Mat& g, Mat& out) {
    const Mat B = coefficient(g);
    out = B.topLeftCorner(m, m);  // Left(b) = 1 (x) b
    rebuilt += kron(g, SuperOp::left(out).rep());
  };
  for (int mu = 0; mu < 4; ++mu) {
    take(mod.gamma(mu), fl.A[mu]);
    take(gamma_product(mod, MultiIndex::hat(mu)), fl.S[mu]);
  }
  take(mod.chirality, fl.phi);
  if (residual) *residual = max_abs(omega - rebuilt);
  return fl;
}

Fluctuation random_fluctuation(const GaugeTriple& gt, double scale, std::uint64_t seed,
                               bool include_S) {
  const Signature& sig = gt.sig();
  const int m = gt.m();
  Fluctuation fl = Fluctuation::zero(m);
  for (int mu = 0; mu < 4; ++mu) {
    Rng ra(derive_seed(seed, 300 + mu));
    const Mat g = ra.hermitian(m, scale);
    fl.A[mu] = sig.e[mu] > 0 ? g : Mat(I_unit * g);
    if (include_S) {
      Rng rs(derive_seed(seed, 310 + mu));
      const Mat h = rs.hermitian(m, scale);
      fl.S[mu] = sig.e_hat[mu] > 0 ? h : Mat(I_unit * h);
    }
  }
  if (!gt.yang_mills()) {
    Rng rp(derive_seed(seed, 320));
    const OneFormBasis ob = one_form_basis(gt.finite.D_F);
    const Mat p = project_higgs(rp.hermitian(m, scale), ob, gt.N());
    fl.phi = 0.5 * (p + p.adjoint());
  }
  return fl;
}

SuperOp higgs_field(const Fluctuation& fl, const GaugeTriple& gt) {
  const int N = gt.N();
  const Mat base = kron(Mat::Identity(N, N), gt.finite.D_F);
  if (fl.phi.rows() != base.rows()) throw DimensionMismatch("DimensionMismatch: phi size");
  return SuperOp::left(base + fl.phi) + double(gt.sig().eps_dblprime) * SuperOp::right(fl.phi);
}

std::array<SuperOp, 4> covariant_k(const GaugeTriple& gt, const Fluctuation& fl) {
  std::array<SuperOp, 4> out;
  for (int mu = 0; mu < 4; ++mu)
    out[mu] = SuperOp::gen_comm(lift(gt.fuzzy.K[mu], gt.n()) + fl.A[mu], gt.sig().e[mu]);
  return out;
}

std::array<SuperOp, 4> covariant_x(const GaugeTriple& gt, const Fluctuation& fl) {
  std::array<SuperOp, 4> out;
  for (int mu = 0; mu < 4; ++mu)
    out[mu] = SuperOp::gen_comm(lift(gt.fuzzy.X[mu], gt.n()) + fl.S[mu], gt.sig().e_hat[mu]);
  return out;
}

Mat assemble_fluctuated(const GaugeTriple& gt, const Fluctuation& fl,
                        const CliffordModule& mod) {
  if (fl.m != gt.m()) throw DimensionMismatch("DimensionMismatch: fluctuation size");
  std::optional<SuperOp> phi;
  if (!gt.yang_mills() || max_abs(fl.phi) > 0.0) phi = higgs_field(fl, gt);
  return assemble_blocks(mod, covariant_k(gt, fl), covariant_x(gt, fl), phi);
}

double measured_higgs_sign(const CliffordModule& mod, int m, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 330));
  const Mat phi = rng.hermitian(m);
  const RealStructure J = build_real_structure(mod, m);
  const Mat got = J.conjugate(kron(mod.chirality, SuperOp::left(phi).rep()));
  const Mat ref = kron(mod.chirality, SuperOp::right(phi.adjoint()).rep());
  const cplx c = (ref.adjoint() * got).trace() / (ref.adjoint() * ref).trace();
  return c.real();
}

}  // namespace ncg
