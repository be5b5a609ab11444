#pragma once

#include <cstdint>
#include <string>

#include "ncg/io.hpp"
#include "ncg/sampler.hpp"

namespace ncg {

/// Parsed run configuration. Every key is optional; see README for the
/// schema. Command-line flags are applied on top by the CLI.
struct RunConfig {
  std::string mode;

  int p = 0;
  int q = 4;
  int N = 2;
  int n = 2;

  std::string df_source = "random";  // zero | random | file
  std::string df_path;
  double df_scale = 1.0;

  std::string fields_source = "random";  // zero | random | file
  std::string fields_path;
  double fuzzy_scale = 0.0;  // <= 0 means 1/sqrt(N)
  double fluct_scale = 0.5;
  bool include_X = false;
  bool include_S = false;

  ActionPolynomial poly{{0.0, 1.0, 0.0, 1.0}};

  SamplerConfig sampler;
  bool self_test = false;
  // which sampler keys the config set; the self-test has its own defaults
  bool steps_given = false;
  bool step_sizes_given = false;

  std::string out_dir = "ncg_out";
  int histogram_bins = 0;
  std::uint64_t seed = 1;
  bool all_signatures = false;
};

/// Throws ConfigError (or NonFourDimensional for p+q != 4).
RunConfig parse_config(const json& j);
RunConfig load_config(const std::string& path);
void validate_config(const RunConfig& cfg);

/// Triple and fluctuation described by the configuration, for one signature.
struct Inputs {
  CliffordModule mod;
  GaugeTriple triple;
  Fluctuation fluct;
};
Inputs build_inputs(const RunConfig& cfg, const Signature& sig);

}  // namespace ncg
