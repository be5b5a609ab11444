#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ncg/dirac.hpp"

namespace ncg {

/// Gauge potentials and Higgs matrix on M_N (x) M_n, all of size m = N n.
/// A[mu]* = e_mu A[mu], S[mu]* = e^_mu S[mu], phi* = phi.
struct Fluctuation {
  int m = 1;
  std::array<Mat, 4> A;
  std::array<Mat, 4> S;
  Mat phi;

  static Fluctuation zero(int m);
  bool flat(double tol = 0.0) const;
};

/// Largest violation of the adjointness rules for the given signature.
double adjointness_deviation(const Fluctuation& fl, const Signature& sig);

/// Orthonormal (Hilbert-Schmidt) basis of span{a [D_F, c]} inside M_n,
/// stored as columns of an n^2 x r matrix of vec'd matrices.
struct OneFormBasis {
  int n = 1;
  Mat basis;
  int rank() const { return int(basis.cols()); }
};

/// Spans the one-forms with matrix-unit pairs (a, c) = (E_ij, E_kl) and
/// orthonormalizes by SVD with a relative rank cutoff.
OneFormBasis one_form_basis(const Mat& D_F, double rel_cutoff = 1e-10);

/// Blockwise orthogonal projection of an (N n) x (N n) matrix onto
/// M_N (x) Omega^1_{D_F}.
Mat project_higgs(const Mat& phi, const OneFormBasis& b, int N);

/// Norm of the part of phi outside M_N (x) Omega^1.
double higgs_leakage(const Mat& phi, const OneFormBasis& b, int N);

/// One algebra pair (a, c) of M_N (x) M_n = M_m contributing a [D, c].
struct AlgebraPair {
  Mat a;
  Mat c;
};

std::vector<AlgebraPair> random_pairs(int m, int count, std::uint64_t seed);

/// Connes one-form sum_j rho(a_j) [D, rho(c_j)] with D the product operator.
Mat connes_one_form(const GaugeTriple& gt, const CliffordModule& mod,
                    const std::vector<AlgebraPair>& pairs);

/// D + omega + eps' J omega J^{-1}. omega must be self-adjoint up to
/// 1e-9 relative; with symmetrize set it is replaced by (omega + omega*)/2.
Mat fluctuate(const Mat& D, const Mat& omega, const RealStructure& J, int eps_prime,
              bool symmetrize = false);

/// Read (A, S, phi) off a one-form by trace-orthogonality of the gamma basis.
/// `residual` receives the part of omega not of the form
/// sum gamma^A (x) (left multiplication).
Fluctuation extract_fluctuation(const Mat& omega, const CliffordModule& mod, int m,
                                double* residual = nullptr);

/// Random potentials with the signature's adjointness types; phi projected
/// onto M_N (x) Omega^1 and zero in the Yang-Mills case.
Fluctuation random_fluctuation(const GaugeTriple& gt, double scale, std::uint64_t seed,
                               bool include_S);

/// Phi = Left(1 (x) D_F + phi) + eps'' Right(phi).
SuperOp higgs_field(const Fluctuation& fl, const GaugeTriple& gt);

/// d_mu = {K_mu (x) 1 + A_mu, .}_{e_mu}, and the triple analogue.
std::array<SuperOp, 4> covariant_k(const GaugeTriple& gt, const Fluctuation& fl);
std::array<SuperOp, 4> covariant_x(const GaugeTriple& gt, const Fluctuation& fl);

/// D_omega assembled directly from (K + A, X + S, Phi).
Mat assemble_fluctuated(const GaugeTriple& gt, const Fluctuation& fl,
                        const CliffordModule& mod);

/// Coefficient c with J (gamma (x) L(phi)) J^{-1} = c gamma (x) R(phi*),
/// measured on a random Hermitian phi.
double measured_higgs_sign(const CliffordModule& mod, int m, std::uint64_t seed);

}  // namespace ncg
