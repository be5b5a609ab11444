#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ncg/fluct.hpp"

namespace ncg {

/// f(x) = 1/2 sum_{i>=1} a_i x^i; coeffs[i-1] holds a_i.
struct ActionPolynomial {
  std::vector<double> coeffs;

  double a(int i) const {
    return (i >= 1 && i <= int(coeffs.size())) ? coeffs[i - 1] : 0.0;
  }
  /// Highest index with a nonzero coefficient (0 for f = 0).
  int degree() const;
  double operator()(double x) const;
};

struct ActionBreakdown {
  double s_ym = 0.0;
  double s_h = 0.0;
  double s_gh = 0.0;
  double s_theta = 0.0;
  double s_gh_reduced = 0.0;  // -a_4 Tr(d_mu Phi d^mu Phi), not part of the sum
  double total_closed = 0.0;
  std::optional<double> total_direct;
  std::optional<double> rest;  // total_direct - total_closed
  bool positivity_applies = false;  // a_4 >= 0
};

using SuperGrid = std::array<std::array<SuperOp, 4>, 4>;
using MatGrid = std::array<std::array<Mat, 4>, 4>;

struct FieldStrength {
  SuperGrid F_super;
  bool has_matrix = false;
  MatGrid F_matrix;  // [L_mu + A_mu, L_nu + A_nu], Riemannian only
};

FieldStrength field_strength(const GaugeTriple& gt, const Fluctuation& fl);

/// sum_mu e_mu d_mu o d_mu.
SuperOp theta(const GaugeTriple& gt, const Fluctuation& fl);

/// Phi as a SuperOp, zero operator in the pure Yang-Mills case.
SuperOp higgs_or_zero(const GaugeTriple& gt, const Fluctuation& fl);

/// 1/4 Tr D^2 = Tr(theta + Phi^2).
double trace_d2_closed(const GaugeTriple& gt, const Fluctuation& fl);

/// 1/4 Tr D^4 = -1/2 Tr F_{mu nu} F^{mu nu} + Tr (theta + Phi^2)^2
///              - eta^{mu nu} Tr [d_mu, Phi][d_nu, Phi].
double trace_d4_closed(const GaugeTriple& gt, const Fluctuation& fl);

/// Sector decomposition for a flat Riemannian triple. Only a_2 and a_4 enter.
/// s_gh is a_4 Tr(Phi^2 theta - 1/2 [d_mu,Phi][d^mu,Phi]), the cross term left
/// over once theta and Phi^4 are split off; this equals
/// 2 a_4 Tr(Phi^2 theta) - a_4 Tr(d_mu Phi d^mu Phi).
ActionBreakdown sectors(const GaugeTriple& gt, const Fluctuation& fl,
                        const ActionPolynomial& f);

/// The two sides of the gauge-Higgs rewriting used to define S_gH:
/// lhs = a_4 Tr(Phi^2 theta - 1/2 [d_mu,Phi][d^mu,Phi]),
/// rhs = -a_4 Tr(d_mu Phi d^mu Phi).
struct GaugeHiggsSides {
  double lhs = 0.0;
  double rhs = 0.0;
  double tr_phi2_theta = 0.0;
};
GaugeHiggsSides gauge_higgs_sides(const GaugeTriple& gt, const Fluctuation& fl, double a4);

/// Tr D^k for self-adjoint D, through the eigenvalues.
std::vector<double> trace_powers(const Mat& D, int kmax);

/// 1/4 sum_i (a_i / 2) Tr D^i.
double spectral_action_direct(const Mat& D, const ActionPolynomial& f);

/// -1/2 sum_{mu != nu} Tr(k_mu k_nu k^mu k^nu) for the K blocks of a signature.
double tetrahedral(const std::array<Mat, 4>& K, const Signature& sig);

/// Flat Weitzenbock right-hand side
///   1 (x) (theta + Phi^2) + 1/2 gamma^mu gamma^nu (x) F_{mu nu}
///   + gamma^mu gamma (x) [d_mu, Phi].
Mat flat_weitzenbock_rhs(const GaugeTriple& gt, const Fluctuation& fl,
                         const CliffordModule& mod);

/// Weitzenbock formula with triples: the Lichnerowicz right-hand side with
/// k -> k + a and x -> x + s (no Higgs field).
Mat weitzenbock_rhs(const GaugeTriple& gt, const Fluctuation& fl, const CliffordModule& mod);

void require_flat(const GaugeTriple& gt, const Fluctuation& fl);
void require_riemannian(const Signature& sig);

}  // namespace ncg
