#include "ncg/clifford.hpp"

#include <algorithm>
#include <sstream>

namespace ncg {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

// KO sign table, indexed by s = (q - p) mod 8.
constexpr std::array<int, 8> kEps{+1, +1, -1, -1, -1, -1, +1, +1};
constexpr std::array<int, 8> kEpsPrime{+1, -1, +1, +1, +1, -1, +1, +1};
constexpr std::array<int, 8> kEpsDblPrime{+1, +1, -1, +1, +1, +1, -1, +1};

Mat pauli(int k) {
  Mat m = Mat::Zero(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -I_unit, I_unit, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

bool close(const Mat& a, const Mat& b, double tol) { return max_abs(a - b) <= tol; }

}  // namespace

std::string Signature::label() const {
  std::ostringstream os;
  os << "(" << p << "," << q << ")";
  return os.str();
}

std::string MultiIndex::label() const {
  return (is_triple() ? "^" : "") + std::to_string(mu);
}

std::array<MultiIndex, 8> all_multi_indices() {
  return {MultiIndex::single(0), MultiIndex::single(1), MultiIndex::single(2),
          MultiIndex::single(3), MultiIndex::hat(0),    MultiIndex::hat(1),
          MultiIndex::hat(2),    MultiIndex::hat(3)};
}

Signature build_signature(int p, int q) {
  if (p < 0 || q < 0 || p + q != 4) {
    std::ostringstream os;
    os << "NonFourDimensional: signature (" << p << "," << q
       << ") has p+q != 4";
    throw NonFourDimensional(os.str());
  }
  Signature sig;
  sig.p = p;
  sig.q = q;
  sig.s = (((q - p) % 8) + 8) % 8;
  const int hat_factor = ((q + 1) % 2 == 0) ? 1 : -1;
  for (int mu = 0; mu < 4; ++mu) {
    sig.e[mu] = mu < p ? 1 : -1;
    sig.e_hat[mu] = sig.e[mu] * hat_factor;
  }
  sig.eps = kEps[sig.s];
  sig.eps_prime = kEpsPrime[sig.s];
  sig.eps_dblprime = kEpsDblPrime[sig.s];
  // (-i)^{s(s+1)/2}
  static const std::array<cplx, 4> powers{cplx(1, 0), cplx(0, -1), cplx(-1, 0),
                                          cplx(0, 1)};
  sig.sigma_eta = powers[(sig.s * (sig.s + 1) / 2) % 4];
  return sig;
}

std::vector<Signature> all_signatures() {
  return {build_signature(0, 4), build_signature(1, 3), build_signature(2, 2),
          build_signature(3, 1)};
}

int levi_civita_abs(int a, int b, int c, int d) {
  return (a != b && a != c && a != d && b != c && b != d && c != d) ? 1 : 0;
}

CliffordModule build_gammas(const Signature& sig) {
  if (sig.dim() != 4)
    throw NonFourDimensional("NonFourDimensional: Clifford module requires d=4");
  CliffordModule mod;
  mod.signature = sig;
  mod.dimV = 4;
  const std::array<Mat, 4> euclid{kron(pauli(1), pauli(0)), kron(pauli(2), pauli(0)),
                                  kron(pauli(3), pauli(1)), kron(pauli(3), pauli(2))};
  for (int mu = 0; mu < 4; ++mu)
    mod.gammas[mu] = mu < sig.p ? euclid[mu] : Mat(I_unit * euclid[mu]);
  mod.chirality = sig.sigma_eta * mod.gammas[0] * mod.gammas[1] * mod.gammas[2] *
                  mod.gammas[3];

  const Mat id = Mat::Identity(4, 4);
  const std::array<cplx, 4> phases{cplx(1, 0), I_unit, cplx(-1, 0), -I_unit};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (const cplx& ph : phases) {
        const Mat u = ph * kron(pauli(a), pauli(b));
        if (!close(u * u.conjugate(), sig.eps * id, 1e-14)) continue;
        bool ok = true;
        for (int mu = 0; mu < 4 && ok; ++mu)
          ok = close(u * mod.gammas[mu].conjugate(),
                     sig.eps_prime * mod.gammas[mu] * u, 1e-14);
        if (!ok) continue;
        if (!close(u * mod.chirality.conjugate(),
                   sig.eps_dblprime * mod.chirality * u, 1e-14))
          continue;
        mod.conj_unitary = u;
        return mod;
      }
    }
  }
  throw ConjugationNotFound("ConjugationNotFound: no charge conjugation for " +
                            sig.label());
}

Mat gamma_product(const CliffordModule& mod, const MultiIndex& idx) {
  if (!idx.is_triple()) return mod.gammas[idx.mu];
  Mat out = Mat::Identity(mod.dimV, mod.dimV);
  for (int nu = 0; nu < 4; ++nu)
    if (nu != idx.mu) out = out * mod.gammas[nu];
  return out;
}

double trace4(const Signature& sig, int mu, int nu, int alpha, int rho, int dimV) {
  return dimV * (sig.eta(mu, nu) * sig.eta(alpha, rho) -
                 sig.eta(mu, alpha) * sig.eta(nu, rho) +
                 sig.eta(mu, rho) * sig.eta(nu, alpha));
}

Mat conjugation_square(const CliffordModule& mod) {
  return mod.conj_unitary * mod.conj_unitary.conjugate();
}

Mat gammas13_rhs(const CliffordModule& mod, int mu, int nu) {
  const auto& sig = mod.signature;
  const auto& g = mod.gammas;
  Mat out = Mat::Zero(4, 4);
  if (mu == nu) out += g[0] * g[1] * g[2] * g[3];
  for (int a = 0; a < 4; ++a)
    for (int s = a + 1; s < 4; ++s)
      if (levi_civita_abs(mu, nu, a, s))
        out += double(sgn(nu - mu) * sig.e[mu]) * g[a] * g[s];
  return (mu % 2 == 0 ? 1.0 : -1.0) * out;
}

Mat gamma_triples_rhs(const CliffordModule& mod, int mu, int nu) {
  const auto& sig = mod.signature;
  const auto& g = mod.gammas;
  double coeff = 0.0;
  for (int l = 0; l < 4; ++l)
    for (int r = 0; r < 4; ++r)
      if (levi_civita_abs(mu, nu, l, r)) coeff += 0.5 * sig.e[l] * sig.e[r];
  const double sign = ((1 + std::abs(mu - nu)) % 2 == 0) ? 1.0 : -1.0;
  Mat out = sign * coeff * g[mu] * g[nu];
  if (mu == nu) out -= double(sig.e[mu] * sig.det_eta()) * mod.identity();
  return out;
}

bool IdentityReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass(); });
}

void IdentityReport::add(std::string name, double dev, double tol, bool enforced) {
  checks.push_back({std::move(name), dev, tol, enforced});
}

const IdentityCheck* IdentityReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

IdentityReport verify_module_invariants(const CliffordModule& mod, double tol) {
  const auto& sig = mod.signature;
  const auto& g = mod.gammas;
  const Mat id = mod.identity();
  const Mat& gam = mod.chirality;
  const Mat& u = mod.conj_unitary;

  double anti = 0, square = 0, herm = 0, unitary = 0, anticomm_chir = 0, cgam = 0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu)
      anti = std::max(anti, max_abs(g[mu] * g[nu] + g[nu] * g[mu] -
                                    2.0 * sig.eta(mu, nu) * id));
    square = std::max(square, max_abs(g[mu] * g[mu] - double(sig.e[mu]) * id));
    herm = std::max(herm, max_abs(g[mu].adjoint() - double(sig.e[mu]) * g[mu]));
    unitary = std::max(unitary, max_abs(g[mu].adjoint() * g[mu] - id));
    anticomm_chir = std::max(anticomm_chir, max_abs(gam * g[mu] + g[mu] * gam));
    cgam = std::max(cgam, max_abs(u * g[mu].conjugate() -
                                  double(sig.eps_prime) * g[mu] * u));
  }
  IdentityReport rep{"clifford" + sig.label(), {}};
  rep.add("anticommutation", anti, tol);
  rep.add("gamma_square_sign", square, tol);
  rep.add("gamma_adjointness", herm, tol);
  rep.add("gamma_unitary", unitary, tol);
  rep.add("chirality_definition",
          max_abs(gam - sig.sigma_eta * g[0] * g[1] * g[2] * g[3]), tol);
  rep.add("chirality_selfadjoint", max_abs(gam.adjoint() - gam), tol);
  rep.add("chirality_square", max_abs(gam * gam - id), tol);
  rep.add("chirality_anticommutes", anticomm_chir, tol);
  rep.add("C_square_eps", max_abs(conjugation_square(mod) - double(sig.eps) * id), tol);
  rep.add("C_gamma_eps_prime", cgam, tol);
  rep.add("C_chirality_eps_dblprime",
          max_abs(u * gam.conjugate() - double(sig.eps_dblprime) * gam * u), tol);
  rep.add("C_unitary", max_abs(u.adjoint() * u - id), tol);
  return rep;
}

IdentityReport verify_gamma_identities(const CliffordModule& mod, double tol) {
  const auto& sig = mod.signature;
  const auto& g = mod.gammas;
  std::array<Mat, 4> hat;
  for (int mu = 0; mu < 4; ++mu) hat[mu] = gamma_product(mod, MultiIndex::hat(mu));

  double d13 = 0, d13b = 0, d13c = 0, dtriples = 0, dhat_adj = 0;
  for (int mu = 0; mu < 4; ++mu) {
    d13b = std::max(d13b, max_abs(hat[mu] * g[mu] + g[mu] * hat[mu]));
    dhat_adj = std::max(dhat_adj,
                        max_abs(hat[mu].adjoint() - double(sig.e_hat[mu]) * hat[mu]));
    for (int nu = 0; nu < 4; ++nu) {
      d13 = std::max(d13, max_abs(g[mu] * hat[nu] - gammas13_rhs(mod, mu, nu)));
      if (nu != mu) d13c = std::max(d13c, max_abs(hat[nu] * g[mu] - g[mu] * hat[nu]));
      dtriples = std::max(dtriples,
                          max_abs(hat[mu] * hat[nu] - gamma_triples_rhs(mod, mu, nu)));
    }
  }

  double odd = 0, tr4 = 0;
  for (int a = 0; a < 4; ++a) {
    odd = std::max(odd, std::abs(g[a].trace()));
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        odd = std::max(odd, std::abs((g[a] * g[b] * g[c]).trace()));
        odd = std::max(odd, std::abs((g[a] * g[b] * g[c] * mod.chirality).trace()));
        for (int d = 0; d < 4; ++d)
          tr4 = std::max(tr4, std::abs((g[a] * g[b] * g[c] * g[d]).trace() -
                                       trace4(sig, a, b, c, d, mod.dimV)));
      }
  }

  IdentityReport rep{"gamma_identities" + sig.label(), {}};
  rep.add("gammas13", d13, tol);
  rep.add("gammas13b", d13b, tol);
  rep.add("gammas13c", d13c, tol);
  rep.add("gammastriples", dtriples, tol);
  rep.add("triple_adjointness", dhat_adj, tol);
  rep.add("odd_traces", odd, tol);
  rep.add("trace4_formula", tr4, tol);
  return rep;
}

}  // namespace ncg
