#include "ncg/dirac.hpp"

#include <cmath>
#include <string>

#include "ncg/random.hpp"

namespace ncg {

FuzzyData FuzzyData::zero(int N, const Signature& sig) {
  FuzzyData fz;
  fz.N = N;
  fz.sig = sig;
  for (int mu = 0; mu < 4; ++mu) {
    fz.K[mu] = Mat::Zero(N, N);
    fz.X[mu] = Mat::Zero(N, N);
  }
  return fz;
}

bool FuzzyData::flat(double tol) const {
  for (const auto& x : X)
    if (max_abs(x) > tol) return false;
  return true;
}

GaugeTriple make_triple(FuzzyData fuzzy, FiniteData finite) {
  if (fuzzy.sig.dim() != 4)
    throw NonFourDimensional("NonFourDimensional: p+q = " + std::to_string(fuzzy.sig.dim()));
  if (fuzzy.N < 1 || finite.n < 1) throw DimensionMismatch("DimensionMismatch: N, n must be >= 1");
  for (int mu = 0; mu < 4; ++mu) {
    for (Mat* blk : {&fuzzy.K[mu], &fuzzy.X[mu]}) {
      if (blk->size() == 0) *blk = Mat::Zero(fuzzy.N, fuzzy.N);
      if (blk->rows() != fuzzy.N || blk->cols() != fuzzy.N)
        throw DimensionMismatch("DimensionMismatch: fuzzy block is not N x N");
    }
  }
  if (finite.D_F.size() == 0) finite.D_F = Mat::Zero(finite.n, finite.n);
  if (finite.D_F.rows() != finite.n || finite.D_F.cols() != finite.n)
    throw DimensionMismatch("DimensionMismatch: D_F is not n x n");
  if (max_abs(finite.D_F - finite.D_F.adjoint()) > 1e-12 * (1.0 + max_abs(finite.D_F)))
    throw NotSelfAdjoint("NotSelfAdjoint: D_F must be Hermitian");
  return {std::move(fuzzy), std::move(finite)};
}

double default_scale(int N) { return 1.0 / std::sqrt(double(N)); }

FuzzyData random_fuzzy(int N, const Signature& sig, double scale, std::uint64_t seed,
                       bool include_X) {
  FuzzyData fz = FuzzyData::zero(N, sig);
  for (const auto& idx : all_multi_indices()) {
    if (idx.is_triple() && !include_X) continue;
    // one stream per block: counters 0..3 singles, 4..7 triples
    Rng rng(derive_seed(seed, std::uint64_t(idx.mu + (idx.is_triple() ? 4 : 0))));
    Mat g = rng.hermitian(N, scale);
    fz.block(idx) = idx.sign(sig) > 0 ? g : Mat(I_unit * g);
  }
  return fz;
}

FiniteData random_finite(int n, double scale, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 8));
  return {n, rng.hermitian(n, scale)};
}

Mat lift(const Mat& k, int n) { return n == 1 ? k : kron(k, Mat::Identity(n, n)); }

Mat assemble_blocks(const CliffordModule& mod, const std::array<SuperOp, 4>& k,
                    const std::array<SuperOp, 4>& x, const std::optional<SuperOp>& phi) {
  const int m = k[0].side_dim();
  const Eigen::Index dim = Eigen::Index(mod.dimV) * m * m;
  Mat D = Mat::Zero(dim, dim);
  for (int mu = 0; mu < 4; ++mu) {
    if (k[mu].side_dim() != m || x[mu].side_dim() != m)
      throw DimensionMismatch("DimensionMismatch: block side dims differ");
    if (!k[mu].rep().isZero(0.0)) D += kron(mod.gamma(mu), k[mu].rep());
    if (!x[mu].rep().isZero(0.0))
      D += kron(gamma_product(mod, MultiIndex::hat(mu)), x[mu].rep());
  }
  if (phi) {
    if (phi->side_dim() != m) throw DimensionMismatch("DimensionMismatch: Higgs side dim");
    D += kron(mod.chirality, phi->rep());
  }
  return D;
}

std::array<SuperOp, 4> k_ops(const FuzzyData& fz, int n) {
  std::array<SuperOp, 4> out;
  for (int mu = 0; mu < 4; ++mu) out[mu] = SuperOp::gen_comm(lift(fz.K[mu], n), fz.sig.e[mu]);
  return out;
}

std::array<SuperOp, 4> x_ops(const FuzzyData& fz, int n) {
  std::array<SuperOp, 4> out;
  for (int mu = 0; mu < 4; ++mu)
    out[mu] = SuperOp::gen_comm(lift(fz.X[mu], n), fz.sig.e_hat[mu]);
  return out;
}

namespace {

void require_module(const Signature& sig, const CliffordModule& mod) {
  if (sig.p != mod.signature.p || sig.q != mod.signature.q)
    throw DimensionMismatch("DimensionMismatch: data signature " + sig.label() +
                            " does not match module " + mod.signature.label());
}

}  // namespace

Mat assemble_fuzzy_dirac(const FuzzyData& fz, const CliffordModule& mod) {
  require_module(fz.sig, mod);
  return assemble_blocks(mod, k_ops(fz), x_ops(fz));
}

Mat assemble_product_dirac(const GaugeTriple& gt, const CliffordModule& mod) {
  require_module(gt.sig(), mod);
  const int n = gt.n();
  std::optional<SuperOp> phi;
  if (!gt.yang_mills())
    phi = SuperOp::left(kron(Mat::Identity(gt.N(), gt.N()), gt.finite.D_F));
  return assemble_blocks(mod, k_ops(gt.fuzzy, n), x_ops(gt.fuzzy, n), phi);
}

Mat chirality_operator(const CliffordModule& mod, int m) {
  return kron(mod.chirality, Mat::Identity(m * m, m * m));
}

Mat algebra_rep(const Mat& a, int dimV) {
  return kron(Mat::Identity(dimV, dimV), SuperOp::left(a).rep());
}

Mat RealStructure::conjugate(const Mat& op) const {
  return unitary * op.conjugate() * unitary.adjoint();
}

Mat RealStructure::square() const { return unitary * unitary.conjugate(); }

RealStructure build_real_structure(const CliffordModule& mod, int m) {
  return {kron(mod.conj_unitary, transpose_permutation(m))};
}

IdentityReport check_axioms(const GaugeTriple& gt, const CliffordModule& mod,
                            std::uint64_t seed, int pairs, double tol) {
  const Signature& sig = gt.sig();
  const int m = gt.m();
  const Mat D = assemble_product_dirac(gt, mod);
  const Mat G = chirality_operator(mod, m);
  const RealStructure J = build_real_structure(mod, m);
  const Mat& U = J.unitary;
  const Eigen::Index dim = D.rows();
  const bool finite_on = !gt.yang_mills();

  IdentityReport rep;
  rep.section = sig.label();
  rep.add("self_adjoint", max_abs(D - D.adjoint()), 1e-12);
  rep.add("J_square_eps", max_abs(J.square() - double(sig.eps) * Mat::Identity(dim, dim)), tol);
  rep.add("J_unitary", max_abs(U * U.adjoint() - Mat::Identity(dim, dim)), tol);
  // with a left-acting D_F the JD and D-gamma relations are reported only
  rep.add("JD_eps_prime", max_abs(U * D.conjugate() - double(sig.eps_prime) * D * U), tol,
          !finite_on);
  rep.add("Jgamma_eps_dblprime", max_abs(U * G.conjugate() - double(sig.eps_dblprime) * G * U),
          tol);
  rep.add("D_gamma_anticommute", max_abs(D * G + G * D), tol, !finite_on);

  Rng rng(derive_seed(seed, 100));
  double order_one = 0.0, commutant = 0.0;
  for (int t = 0; t < pairs; ++t) {
    const Mat a = rng.ginibre(m, m);
    const Mat b = rng.ginibre(m, m);
    const Mat ra = algebra_rep(a, mod.dimV);
    const Mat rb_op = J.conjugate(algebra_rep(b.adjoint(), mod.dimV));
    const Mat da = D * ra - ra * D;
    order_one = std::max(order_one, max_abs(da * rb_op - rb_op * da));
    commutant = std::max(commutant, max_abs(ra * rb_op - rb_op * ra));
  }
  {
    // central elements give an exactly vanishing commutator
    const Mat rc = algebra_rep(cplx(0.3, -1.1) * Mat::Identity(m, m), mod.dimV);
    rep.add("order_one_central", max_abs(D * rc - rc * D), 0.0);
  }
  rep.add("order_one", order_one, tol);
  rep.add("commutant", commutant, tol);
  return rep;
}

int sign_s(const Signature& sig, int mu, int nu, int alpha, int sigma) {
  const int d = levi_civita_abs(mu, nu, alpha, sigma);
  if (d == 0) return 0;
  const int par = (mu % 2 == 0) ? 1 : -1;
  return sig.e[mu] * par * sgn(nu - mu) * sgn(sigma - alpha);
}

int sign_t(const Signature& sig, int mu, int nu) {
  int t = 0;
  const int par = ((1 + std::abs(mu - nu)) % 2 == 0) ? 1 : -1;
  for (int l = 0; l < 4; ++l)
    for (int r = l + 1; r < 4; ++r)
      if (levi_civita_abs(mu, nu, l, r)) t += par * sig.e[l] * sig.e[r];
  return t;
}

Mat lichnerowicz_rhs(const CliffordModule& mod, const std::array<SuperOp, 4>& k,
                     const std::array<SuperOp, 4>& x) {
  const Signature& sig = mod.signature;
  const int m = k[0].side_dim();
  const Mat one = mod.identity();
  SuperOp scalar = SuperOp::zero(m);
  for (int mu = 0; mu < 4; ++mu) {
    scalar += double(sig.e[mu]) * (k[mu] * k[mu]);
    scalar -= double(sig.det_eta() * sig.e[mu]) * (x[mu] * x[mu]);
  }
  Mat out = kron(one, scalar.rep());

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      const Mat gg = mod.gamma(mu) * mod.gamma(nu);
      out += kron(gg, 0.5 * commutator(k[mu], k[nu]).rep());
      if (mu < nu) {
        const int t = sign_t(sig, mu, nu);
        if (t != 0) out += kron(gg, double(t) * commutator(x[mu], x[nu]).rep());
      }
    }

  for (int al = 0; al < 4; ++al)
    for (int si = 0; si < 4; ++si) {
      if (al == si) continue;
      SuperOp acc = SuperOp::zero(m);
      bool any = false;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const int s = sign_s(sig, mu, nu, al, si);
          if (s == 0) continue;
          acc += (0.5 * s) * anticommutator(x[nu], k[mu]);
          any = true;
        }
      if (any) out += kron(mod.gamma(al) * mod.gamma(si), acc.rep());
    }

  // chirality cross term; the order [k, x] is what squaring D produces
  SuperOp chi = SuperOp::zero(m);
  for (int mu = 0; mu < 4; ++mu)
    chi += double(mu % 2 == 0 ? 1 : -1) * commutator(k[mu], x[mu]);
  out += kron(mod.chirality, (1.0 / sig.sigma_eta) * chi.rep());
  return out;
}

Mat lichnerowicz_rhs(const FuzzyData& fz, const CliffordModule& mod) {
  require_module(fz.sig, mod);
  return lichnerowicz_rhs(mod, k_ops(fz), x_ops(fz));
}

}  // namespace ncg
