#include "ncg/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ncg/random.hpp"

namespace ncg {

long Histogram::total() const {
  long t = 0;
  for (long c : counts) t += c;
  return t;
}

Histogram histogram_of(const std::vector<double>& values, int bins) {
  if (bins < 1) throw ConfigError("ConfigError: histogram needs at least one bin");
  double R = 0.0;
  for (double v : values) R = std::max(R, std::abs(v));
  if (R == 0.0) R = 1.0;
  Histogram h;
  h.edges.resize(bins + 1);
  for (int i = 0; i <= bins; ++i) h.edges[i] = -R + 2.0 * R * i / bins;
  h.counts.assign(bins, 0);
  for (double v : values) {
    int b = int(std::floor((v + R) / (2.0 * R) * bins));
    h.counts[std::clamp(b, 0, bins - 1)]++;
  }
  return h;
}

Histogram eigen_histogram(const Mat& D, int bins) {
  if ((D - D.adjoint()).norm() > 1e-10 * (1.0 + D.norm()))
    throw NotSelfAdjoint("NotSelfAdjoint: histogram needs a self-adjoint operator");
  Eigen::SelfAdjointEigenSolver<Mat> es(D, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return histogram_of(std::vector<double>(ev.data(), ev.data() + ev.size()), bins);
}

void require_integrable(const ActionPolynomial& f) {
  const int deg = f.degree();
  if (deg == 0 || deg % 2 != 0 || f.a(deg) <= 0.0)
    throw ConfigError("ConfigError: exp(-Tr f(D)/4) is not normalizable; the top "
                      "coefficient must be positive at even degree");
}

namespace {

const Signature& riemannian_sig() {
  static const Signature sig = build_signature(0, 4);
  return sig;
}

Mat project_su(const Mat& x) {
  Mat a = 0.5 * (x - x.adjoint());
  a -= (a.trace() / double(a.rows())) * Mat::Identity(a.rows(), a.cols());
  return a;
}

Mat project_herm_oneform(const Mat& x, const OneFormBasis& ob, int N) {
  const Mat p = project_higgs(0.5 * (x + x.adjoint()), ob, N);
  return 0.5 * (p + p.adjoint());
}

GaugeTriple triple_of(const ChainState& s, const FiniteData& fin) {
  FuzzyData fz = FuzzyData::zero(int(s.L[0].rows()), riemannian_sig());
  fz.K = s.L;
  return {std::move(fz), fin};
}

Fluctuation fluctuation_of(const ChainState& s) {
  Fluctuation fl = Fluctuation::zero(int(s.phi.rows()));
  fl.A = s.A;
  fl.phi = s.phi;
  return fl;
}

}  // namespace

double state_constraint_deviation(const ChainState& s, const OneFormBasis& ob, int N) {
  double dev = max_abs(s.phi - s.phi.adjoint());
  dev = std::max(dev, higgs_leakage(s.phi, ob, N));
  for (int mu = 0; mu < 4; ++mu) {
    dev = std::max(dev, max_abs(s.L[mu] + s.L[mu].adjoint()));
    dev = std::max(dev, std::abs(s.L[mu].trace()));
    dev = std::max(dev, max_abs(s.A[mu] + s.A[mu].adjoint()));
    dev = std::max(dev, std::abs(s.A[mu].trace()));
  }
  return dev;
}

SampleRecord evaluate_state(const ChainState& s, const FiniteData& fin,
                            const ActionPolynomial& f) {
  const GaugeTriple gt = triple_of(s, fin);
  const Fluctuation fl = fluctuation_of(s);
  const ActionBreakdown b = sectors(gt, fl, f);
  SampleRecord r;
  r.s_ym = b.s_ym;
  r.s_h = b.s_h;
  r.s_gh = b.s_gh;
  r.s_theta = b.s_theta;
  r.s_total = b.total_closed;
  if (f.degree() > 4)
    r.s_total = spectral_action_direct(assemble_fluctuated(gt, fl, build_gammas(gt.sig())), f);
  return r;
}

namespace {

enum Block { kL = 0, kA = 1, kPhi = 2 };

struct Tuner {
  std::array<long, 3> acc{};
  std::array<long, 3> prop{};
};

double& step_of(StepSizes& s, int b) { return b == kL ? s.L : (b == kA ? s.A : s.phi); }

void validate(const SamplerConfig& cfg) {
  if (cfg.N < 1 || cfg.n < 1) throw ConfigError("ConfigError: N and n must be >= 1");
  if (cfg.steps < 0 || cfg.burn_in < 0 || cfg.burn_in > cfg.steps)
    throw ConfigError("ConfigError: need steps >= burn_in >= 0");
  if (cfg.thin < 1) throw ConfigError("ConfigError: thin must be >= 1");
  if (cfg.step.L <= 0.0 || cfg.step.A <= 0.0 || cfg.step.phi <= 0.0)
    throw ConfigError("ConfigError: step sizes must be positive");
  if (cfg.tune_every < 1) throw ConfigError("ConfigError: tune_every must be >= 1");
}

void retune(StepSizes& step, Tuner& window, bool has_phi) {
  for (int b = 0; b < 3; ++b) {
    if (b == kPhi && !has_phi) continue;
    if (window.prop[b] == 0) continue;
    const double rate = double(window.acc[b]) / double(window.prop[b]);
    step_of(step, b) *= std::clamp(std::exp(2.0 * (rate - 0.4)), 0.5, 2.0);
  }
  window = Tuner{};
}

}  // namespace

ChainResult run_chain(const SamplerConfig& cfg, const GaugeTriple& gt_template) {
  validate(cfg);
  require_integrable(cfg.poly);
  require_riemannian(gt_template.sig());
  if (!gt_template.fuzzy.flat()) throw NotFlat("NotFlat: sampler runs on flat geometries");
  if (gt_template.N() != cfg.N || gt_template.n() != cfg.n)
    throw ConfigError("ConfigError: template dimensions differ from the sampler config");

  const int N = cfg.N, n = cfg.n, m = N * n;
  const FiniteData& fin = gt_template.finite;
  const OneFormBasis ob = one_form_basis(fin.D_F);
  const bool has_phi = ob.rank() > 0;

  ChainState st;
  for (int mu = 0; mu < 4; ++mu) {
    st.L[mu] = project_su(gt_template.fuzzy.K[mu]);
    st.A[mu] = Mat::Zero(m, m);
  }
  st.phi = Mat::Zero(m, m);

  Rng rng(derive_seed(cfg.seed, 500));
  StepSizes step = cfg.step;
  SampleRecord cur = evaluate_state(st, fin, cfg.poly);
  st.current_action = cur.s_total;

  ChainResult out;
  Tuner window;
  long acc_post = 0, prop_post = 0;

  for (long sweep = 0; sweep < cfg.steps; ++sweep) {
    const bool burning = sweep < cfg.burn_in;
    for (int b = 0; b < 3; ++b) {
      if (b == kPhi && !has_phi) continue;
      ChainState trial = st;
      const double h = step_of(step, b);
      if (b == kL) {
        for (int mu = 0; mu < 4; ++mu)
          trial.L[mu] = project_su(st.L[mu] + h * (I_unit * rng.hermitian(N)));
      } else if (b == kA) {
        for (int mu = 0; mu < 4; ++mu)
          trial.A[mu] = project_su(st.A[mu] + h * (I_unit * rng.hermitian(m)));
      } else {
        trial.phi = project_herm_oneform(st.phi + h * rng.hermitian(m), ob, N);
      }
      const SampleRecord rec = evaluate_state(trial, fin, cfg.poly);
      const double s_new = rec.s_total;
      if (burning && (!std::isfinite(s_new) || s_new > 1e12))
        throw UnstableAction("UnstableAction: action " + std::to_string(s_new) +
                             " during burn-in at sweep " + std::to_string(sweep));
      const double u = rng.uniform();
      const bool accept = std::isfinite(s_new) && std::log(u) < st.current_action - s_new;
      st.proposal_count++;
      window.prop[b]++;
      if (!burning) prop_post++;
      if (accept) {
        const long ac = st.accept_count + 1, pc = st.proposal_count;
        st = std::move(trial);
        st.accept_count = ac;
        st.proposal_count = pc;
        st.current_action = s_new;
        cur = rec;
        window.acc[b]++;
        if (!burning) acc_post++;
      }
    }
    if (burning && cfg.autotune && (sweep + 1) % cfg.tune_every == 0)
      retune(step, window, has_phi);
    if (!burning && (sweep - cfg.burn_in) % cfg.thin == 0) {
      SampleRecord r = cur;
      r.step = sweep;
      r.acceptance = prop_post ? double(acc_post) / double(prop_post) : 0.0;
      if (cfg.histogram_bins > 0)
        r.histogram = eigen_histogram(
            assemble_fluctuated(triple_of(st, fin), fluctuation_of(st), build_gammas(riemannian_sig())),
            cfg.histogram_bins);
      out.records.push_back(std::move(r));
    }
  }
  out.tuned = step;
  out.acceptance = prop_post ? double(acc_post) / double(prop_post) : 0.0;
  out.final_state = std::move(st);
  return out;
}

ChainResult run_gaussian_self_test(const SamplerConfig& cfg) {
  validate(cfg);
  const int N = cfg.N;
  Rng rng(derive_seed(cfg.seed, 501));
  Mat M = Mat::Zero(N, N);
  double S = 0.0;
  double h = cfg.step.L;
  Tuner window;
  long acc_post = 0, prop_post = 0;
  ChainResult out;
  for (long sweep = 0; sweep < cfg.steps; ++sweep) {
    const bool burning = sweep < cfg.burn_in;
    Mat trial = M + h * rng.hermitian(N);
    trial = (0.5 * (trial + trial.adjoint())).eval();
    const double s_new = trial.squaredNorm();  // Tr M^2 for Hermitian M
    const bool accept = std::log(rng.uniform()) < S - s_new;
    window.prop[kL]++;
    if (!burning) prop_post++;
    if (accept) {
      M = std::move(trial);
      S = s_new;
      window.acc[kL]++;
      if (!burning) acc_post++;
    }
    if (burning && cfg.autotune && (sweep + 1) % cfg.tune_every == 0) {
      StepSizes tmp{h, h, h};
      retune(tmp, window, false);
      h = tmp.L;
    }
    if (!burning && (sweep - cfg.burn_in) % cfg.thin == 0) {
      SampleRecord r;
      r.step = sweep;
      r.s_total = S;
      r.acceptance = double(acc_post) / double(prop_post);
      out.records.push_back(r);
    }
  }
  out.tuned = {h, h, h};
  out.acceptance = prop_post ? double(acc_post) / double(prop_post) : 0.0;
  return out;
}

Estimate batch_means(const std::vector<double>& x, int batches) {
  Estimate e;
  e.samples = long(x.size());
  if (x.empty()) {
    e.mean = e.stderr_ = std::numeric_limits<double>::quiet_NaN();
    return e;
  }
  const int nb = int(std::min<std::size_t>(std::size_t(batches), x.size()));
  const std::size_t len = x.size() / nb;
  std::vector<double> means(nb, 0.0);
  double total = 0.0;
  for (int b = 0; b < nb; ++b) {
    for (std::size_t i = 0; i < len; ++i) means[b] += x[b * len + i];
    means[b] /= double(len);
    total += means[b];
  }
  e.mean = total / nb;
  if (nb < 2) {
    e.stderr_ = std::numeric_limits<double>::quiet_NaN();
    return e;
  }
  double var = 0.0;
  for (double mb : means) var += (mb - e.mean) * (mb - e.mean);
  var /= double(nb - 1);
  e.stderr_ = std::sqrt(var / nb);
  return e;
}

double half_split_z(const std::vector<double>& x, int batches) {
  const std::size_t h = x.size() / 2;
  const std::vector<double> a(x.begin(), x.begin() + h), b(x.begin() + h, x.begin() + 2 * h);
  const Estimate ea = batch_means(a, batches), eb = batch_means(b, batches);
  const double se = std::sqrt(ea.stderr_ * ea.stderr_ + eb.stderr_ * eb.stderr_);
  return se > 0.0 ? std::abs(ea.mean - eb.mean) / se : 0.0;
}

}  // namespace ncg
