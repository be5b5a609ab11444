#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncg/types.hpp"

namespace ncg {

/// Signature (p,q) of a four-dimensional fuzzy geometry together with every
/// sign derived from it.
struct Signature {
  int p = 0;
  int q = 4;
  int s = 4;                    // KO-dimension (q - p) mod 8
  std::array<int, 4> e{};       // e_mu = +1 iff mu < p
  std::array<int, 4> e_hat{};   // sign of the triple product omitting mu
  int eps = 0;                  // J^2
  int eps_prime = 0;            // J D = eps' D J
  int eps_dblprime = 0;         // J gamma = eps'' gamma J
  cplx sigma_eta{1.0, 0.0};     // chirality prefactor

  int dim() const { return p + q; }
  int det_eta() const { return e[0] * e[1] * e[2] * e[3]; }
  int eta(int mu, int nu) const { return mu == nu ? e[mu] : 0; }
  bool riemannian() const { return p == 0 && q == 4; }
  std::string label() const;
};

Signature build_signature(int p, int q);

/// The four signatures with p+q = 4 in the order (0,4), (1,3), (2,2), (3,1).
std::vector<Signature> all_signatures();

/// Odd multi-index of a four-dimensional Dirac operator: either a single
/// gamma index, or the increasing product of the three indices != mu.
struct MultiIndex {
  enum class Kind { Single, Triple };
  Kind kind = Kind::Single;
  int mu = 0;

  static MultiIndex single(int mu) { return {Kind::Single, mu}; }
  static MultiIndex hat(int mu) { return {Kind::Triple, mu}; }

  bool is_triple() const { return kind == Kind::Triple; }
  int sign(const Signature& sig) const {
    return is_triple() ? sig.e_hat[mu] : sig.e[mu];
  }
  std::string label() const;
};

/// The eight multi-indices 0,1,2,3,^0,^1,^2,^3.
std::array<MultiIndex, 8> all_multi_indices();

/// Concrete irreducible Clifford module V = C^4.
///
/// The anti-linear charge conjugation is C = conj_unitary o (complex
/// conjugation), so C v = U_C * conj(v).
struct CliffordModule {
  Signature signature;
  int dimV = 4;
  std::array<Mat, 4> gammas;
  Mat chirality;
  Mat conj_unitary;

  const Mat& gamma(int mu) const { return gammas[mu]; }
  Mat identity() const { return Mat::Identity(dimV, dimV); }
};

/// Fixed representation: Hermitian Euclidean generators
///   E0 = sx(x)1, E1 = sy(x)1, E2 = sz(x)sx, E3 = sz(x)sy
/// with gamma^mu = E_mu for mu < p and i*E_mu otherwise. U_C comes from a
/// deterministic search over Pauli tensor products times {1, i, -1, -i}.
CliffordModule build_gammas(const Signature& sig);

Mat gamma_product(const CliffordModule& mod, const MultiIndex& idx);

/// Tr_V(g^mu g^nu g^alpha g^rho) from the pairing formula.
double trace4(const Signature& sig, int mu, int nu, int alpha, int rho,
              int dimV = 4);

struct IdentityCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool enforced = true;
  bool pass() const { return !enforced || max_deviation <= tolerance; }
};

struct IdentityReport {
  std::string section;
  std::vector<IdentityCheck> checks;

  bool pass() const;
  void add(std::string name, double dev, double tol, bool enforced = true);
  const IdentityCheck* find(const std::string& name) const;
};

/// Structural module invariants: Clifford relations, (anti-)Hermiticity,
/// unitarity, chirality, and the sign relations of C.
IdentityReport verify_module_invariants(const CliffordModule& mod,
                                        double tol = 1e-12);

/// The four triple-product relations (gamma^mu gamma^^nu expansion,
/// anticommutation with the omitted index, commutation otherwise, and the
/// product of two triples), plus odd-trace vanishing and the four-gamma
/// trace formula over all 256 tuples.
IdentityReport verify_gamma_identities(const CliffordModule& mod,
                                       double tol = 1e-12);

/// Right-hand side of the gamma^mu gamma^^nu expansion (used by tests).
Mat gammas13_rhs(const CliffordModule& mod, int mu, int nu);
/// Right-hand side of the gamma^^mu gamma^^nu expansion.
Mat gamma_triples_rhs(const CliffordModule& mod, int mu, int nu);

/// Anti-linear composition U conj(U) of C with itself.
Mat conjugation_square(const CliffordModule& mod);

int levi_civita_abs(int a, int b, int c, int d);
inline int sgn(int x) { return (x > 0) - (x < 0); }

}  // namespace ncg
