#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ncg/action.hpp"

namespace ncg {

struct Histogram {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<long> counts;
  long total() const;
};

/// Eigenvalues of a self-adjoint D binned over [-R, R], R = max |lambda|
/// (R = 1 when D = 0). A value on the top edge lands in the last bin.
Histogram eigen_histogram(const Mat& D, int bins);
Histogram histogram_of(const std::vector<double>& values, int bins);

struct StepSizes {
  double L = 0.05;
  double A = 0.05;
  double phi = 0.05;
};

struct SamplerConfig {
  int N = 2;
  int n = 2;
  ActionPolynomial poly{{0.0, 1.0, 0.0, 1.0}};
  long steps = 1000;    // sweeps in total, burn-in included
  long burn_in = 100;
  long thin = 1;
  StepSizes step;
  double accept_lo = 0.2;
  double accept_hi = 0.6;
  bool autotune = true;
  long tune_every = 100;
  int histogram_bins = 0;  // > 0 attaches an eigenvalue histogram to each record
  std::uint64_t seed = 1;
};

/// Fields on the (0,4) moduli space: L in su(N), A anti-Hermitian without
/// identity component, phi Hermitian in M_N (x) Omega^1_{D_F}.
struct ChainState {
  std::array<Mat, 4> L;
  std::array<Mat, 4> A;
  Mat phi;
  double current_action = 0.0;
  long accept_count = 0;
  long proposal_count = 0;
};

struct SampleRecord {
  long step = 0;
  double s_total = 0.0;
  double s_ym = 0.0;
  double s_h = 0.0;
  double s_gh = 0.0;
  double s_theta = 0.0;
  double acceptance = 0.0;
  std::optional<Histogram> histogram;
};

struct ChainResult {
  std::vector<SampleRecord> records;
  StepSizes tuned;
  double acceptance = 0.0;  // after burn-in
  ChainState final_state;
};

/// Throws ConfigError unless the top coefficient is positive at even degree.
void require_integrable(const ActionPolynomial& f);

/// Deviation of a state from the moduli-space constraints.
double state_constraint_deviation(const ChainState& s, const OneFormBasis& ob, int N);

/// Sector values of the state; for deg f > 4 the total is the direct trace.
SampleRecord evaluate_state(const ChainState& s, const FiniteData& fin,
                            const ActionPolynomial& f);

/// Metropolis over (L, A, phi), one proposal per field block per sweep.
/// N, n and D_F come from the template, as does the starting L (projected to
/// su(N)). Raises UnstableAction if the action exceeds 1e12 during burn-in.
ChainResult run_chain(const SamplerConfig& cfg, const GaugeTriple& gt_template);

/// Gaussian self-test: one Hermitian N x N matrix with weight exp(-Tr M^2).
/// Records carry Tr M^2 in s_total; the exact mean is N^2 / 2.
ChainResult run_gaussian_self_test(const SamplerConfig& cfg);

struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
};

/// Mean with batch-means standard error; trailing remainder samples are
/// dropped so all batches have equal length.
Estimate batch_means(const std::vector<double>& x, int batches = 20);

/// |mean(first half) - mean(second half)| in units of the combined error.
double half_split_z(const std::vector<double>& x, int batches = 20);

}  // namespace ncg
