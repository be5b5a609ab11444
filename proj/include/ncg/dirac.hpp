#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ncg/clifford.hpp"
#include "ncg/superop.hpp"

namespace ncg {

/// Matrices parametrizing a four-dimensional fuzzy Dirac operator
///   D(v (x) T) = sum_I gamma^I v (x) {K_I, T}_{e_I}.
/// K[mu] multiplies gamma^mu, X[mu] multiplies the triple gamma^^mu. Absent
/// blocks are zero matrices.
struct FuzzyData {
  int N = 1;
  Signature sig;
  std::array<Mat, 4> K;
  std::array<Mat, 4> X;

  static FuzzyData zero(int N, const Signature& sig);
  const Mat& block(const MultiIndex& idx) const {
    return idx.is_triple() ? X[idx.mu] : K[idx.mu];
  }
  Mat& block(const MultiIndex& idx) { return idx.is_triple() ? X[idx.mu] : K[idx.mu]; }
  bool flat(double tol = 0.0) const;
};

struct FiniteData {
  int n = 1;
  Mat D_F;  // Hermitian n x n, acting on H_F = M_n by left multiplication

  static FiniteData zero(int n) { return {n, Mat::Zero(n, n)}; }
};

/// Product of a fuzzy geometry with the finite geometry (M_n, M_n, D_F).
struct GaugeTriple {
  FuzzyData fuzzy;
  FiniteData finite;

  int N() const { return fuzzy.N; }
  int n() const { return finite.n; }
  int m() const { return fuzzy.N * finite.n; }
  int hilbert_dim() const { return 4 * m() * m(); }
  bool yang_mills() const { return finite.D_F.isZero(0.0); }
  const Signature& sig() const { return fuzzy.sig; }
};

GaugeTriple make_triple(FuzzyData fuzzy, FiniteData finite);

/// Hermitian scale used when none is given, 1/sqrt(N).
double default_scale(int N);

/// Random blocks with the adjointness type fixed by the signature:
/// a Hermitian Gaussian draw G for e_I = +1, i*G for e_I = -1.
FuzzyData random_fuzzy(int N, const Signature& sig, double scale, std::uint64_t seed,
                       bool include_X);

/// Random Hermitian D_F.
FiniteData random_finite(int n, double scale, std::uint64_t seed);

/// K (x) 1_n.
Mat lift(const Mat& k, int n);

/// sum_mu gamma^mu (x) k_mu + gamma^^mu (x) x_mu (+ gamma (x) phi).
Mat assemble_blocks(const CliffordModule& mod, const std::array<SuperOp, 4>& k,
                    const std::array<SuperOp, 4>& x,
                    const std::optional<SuperOp>& phi = std::nullopt);

Mat assemble_fuzzy_dirac(const FuzzyData& fz, const CliffordModule& mod);

/// D_f (x) 1_F + gamma_f (x) D_F on V (x) M_N (x) M_n.
Mat assemble_product_dirac(const GaugeTriple& gt, const CliffordModule& mod);

/// gamma (x) 1 on V (x) M_m.
Mat chirality_operator(const CliffordModule& mod, int m);

/// rho(a) = 1_V (x) left multiplication by a.
Mat algebra_rep(const Mat& a, int dimV = 4);

/// Real structure J = C (x) (matrix adjoint), realized as J x = U conj(x)
/// with U = U_C (x) P where P implements X -> X^T at vec level.
struct RealStructure {
  Mat unitary;

  /// J op J^{-1} as a linear operator.
  Mat conjugate(const Mat& op) const;
  /// J^2 as a linear operator (U conj(U)).
  Mat square() const;
};

RealStructure build_real_structure(const CliffordModule& mod, int m);

/// Numerical check of the real even spectral triple axioms: J^2, JD, J gamma,
/// chirality anticommutation, order-one and commutant conditions on
/// `pairs` random algebra pairs.
IdentityReport check_axioms(const GaugeTriple& gt, const CliffordModule& mod,
                            std::uint64_t seed, int pairs = 20, double tol = 1e-10);

/// Sign symbols of the fuzzy Lichnerowicz formula.
int sign_s(const Signature& sig, int mu, int nu, int alpha, int sigma);
int sign_t(const Signature& sig, int mu, int nu);

/// Right-hand side of the fuzzy Lichnerowicz formula for arbitrary families
/// of superoperators k_mu (multiplying gamma^mu) and x_mu (multiplying
/// gamma^^mu). D^2 equals this for D = sum gamma^mu (x) k_mu + gamma^^mu (x) x_mu.
Mat lichnerowicz_rhs(const CliffordModule& mod, const std::array<SuperOp, 4>& k,
                     const std::array<SuperOp, 4>& x);
Mat lichnerowicz_rhs(const FuzzyData& fz, const CliffordModule& mod);

/// k_mu = {K_mu, .}_{e_mu} and x_mu = {X_mu, .}_{e^_mu}, lifted by 1_n.
std::array<SuperOp, 4> k_ops(const FuzzyData& fz, int n = 1);
std::array<SuperOp, 4> x_ops(const FuzzyData& fz, int n = 1);

}  // namespace ncg
