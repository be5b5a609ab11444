#pragma once

#include <cstdint>
#include <optional>

#include "ncg/action.hpp"

namespace ncg {

/// Unitary u in M_N (x) M_n, optionally remembered as u1 (x) u2.
struct GaugeElement {
  Mat u;
  std::optional<Mat> u1;
  std::optional<Mat> u2;

  double unitarity_deviation() const;
};

/// Haar unitary of size k: QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q.
Mat haar_unitary(int k, std::uint64_t seed);

GaugeElement random_unitary(int N, int n, bool product_form, std::uint64_t seed);
GaugeElement identity_element(int N, int n);
GaugeElement central_element(int N, int n, cplx lambda);

/// A^u = u A u* + u [K (x) 1, u*], S^u likewise with X, and
/// phi^u = u phi u* + u [1 (x) D_F, u*].
/// The rule is stated for the Riemannian signature; other signatures raise
/// NotRiemannian unless allow_any_signature is set.
Fluctuation transform(const GaugeTriple& gt, const Fluctuation& fl, const GaugeElement& g,
                      bool allow_any_signature = false);

/// Operator implementing T -> u T u* on V (x) M_m, i.e. u J u J^{-1}.
Mat adjoint_action_operator(const GaugeElement& g, int dimV = 4);

struct CovarianceReport {
  IdentityReport checks;
  double leakage = 0.0;  // part of phi^u outside M_N (x) Omega^1
};

/// Field-strength covariance, the T-identity, spectral action and sector
/// invariance, and U D_omega U* = D_{omega^u}. Checks that involve the Higgs
/// field are enforced only when u commutes with 1 (x) D_F (see README).
CovarianceReport covariance_report(const GaugeTriple& gt, const Fluctuation& fl,
                                   const GaugeElement& g, const ActionPolynomial& f,
                                   const CliffordModule& mod);

}  // namespace ncg
