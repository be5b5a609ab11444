#include "ncg/config.hpp"

#include <filesystem>

#include "ncg/random.hpp"

namespace ncg {

namespace {

template <class T>
void take(const json& obj, const char* key, T& dst) {
  if (obj.contains(key)) dst = obj.at(key).get<T>();
}

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw ConfigError(std::string("ConfigError: '") + what + "' must be an object");
}

}  // namespace

RunConfig parse_config(const json& j) {
  RunConfig c;
  try {
    require_object(j, "config");
    take(j, "mode", c.mode);
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("signatures")) {
      const auto s = j.at("signatures").get<std::string>();
      if (s != "one" && s != "all") throw ConfigError("ConfigError: signatures must be one|all");
      c.all_signatures = s == "all";
    }
    if (j.contains("geometry")) {
      const json& g = j.at("geometry");
      require_object(g, "geometry");
      take(g, "p", c.p);
      take(g, "q", c.q);
      take(g, "N", c.N);
      take(g, "n", c.n);
      if (g.contains("D_F")) {
        const json& d = g.at("D_F");
        require_object(d, "geometry.D_F");
        take(d, "source", c.df_source);
        take(d, "path", c.df_path);
        take(d, "scale", c.df_scale);
      }
    }
    if (j.contains("fields")) {
      const json& f = j.at("fields");
      require_object(f, "fields");
      take(f, "source", c.fields_source);
      take(f, "path", c.fields_path);
      take(f, "fuzzy_scale", c.fuzzy_scale);
      take(f, "scale", c.fluct_scale);
      take(f, "include_X", c.include_X);
      take(f, "include_S", c.include_S);
    }
    if (j.contains("poly")) c.poly.coeffs = j.at("poly").get<std::vector<double>>();
    if (j.contains("sampler")) {
      const json& s = j.at("sampler");
      require_object(s, "sampler");
      c.steps_given = s.contains("steps") || s.contains("burn_in");
      take(s, "steps", c.sampler.steps);
      take(s, "burn_in", c.sampler.burn_in);
      take(s, "thin", c.sampler.thin);
      take(s, "autotune", c.sampler.autotune);
      take(s, "tune_every", c.sampler.tune_every);
      take(s, "histogram_bins", c.sampler.histogram_bins);
      take(s, "self_test", c.self_test);
      if (s.contains("step_sizes")) {
        c.step_sizes_given = true;
        const json& st = s.at("step_sizes");
        require_object(st, "sampler.step_sizes");
        take(st, "L", c.sampler.step.L);
        take(st, "A", c.sampler.step.A);
        take(st, "phi", c.sampler.step.phi);
      }
    }
    if (j.contains("output")) {
      const json& o = j.at("output");
      require_object(o, "output");
      take(o, "dir", c.out_dir);
      take(o, "histogram_bins", c.histogram_bins);
    }
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("ConfigError: ") + ex.what());
  }
  validate_config(c);
  return c;
}

RunConfig load_config(const std::string& path) { return parse_config(read_json_file(path)); }

void validate_config(const RunConfig& c) {
  if (c.p < 0 || c.q < 0) throw ConfigError("ConfigError: p and q must be non-negative");
  if (c.p + c.q != 4)
    throw NonFourDimensional("NonFourDimensional: p+q = " + std::to_string(c.p + c.q) +
                             ", only four-dimensional geometries are supported");
  if (c.N < 1 || c.n < 1) throw ConfigError("ConfigError: N and n must be >= 1");
  if (c.N * c.n > 10) throw ConfigError("ConfigError: N*n above 10 is outside desk scale");
  for (const auto& [src, path] : {std::pair{c.df_source, c.df_path},
                                  std::pair{c.fields_source, c.fields_path}}) {
    if (src != "zero" && src != "random" && src != "file")
      throw ConfigError("ConfigError: unknown source '" + src + "'");
    if (src == "file" && !std::filesystem::exists(path))
      throw ConfigError("ConfigError: file not found: '" + path + "'");
  }
  if (c.df_scale < 0.0 || c.fluct_scale < 0.0) throw ConfigError("ConfigError: negative scale");
  if (c.histogram_bins < 0 || c.sampler.histogram_bins < 0)
    throw ConfigError("ConfigError: negative histogram_bins");
  if (c.poly.coeffs.empty()) throw ConfigError("ConfigError: poly needs at least one coefficient");
}

namespace {

std::array<Mat, 4> read_four(const json& j, const char* key, int size) {
  std::array<Mat, 4> out;
  for (auto& m : out) m = Mat::Zero(size, size);
  if (!j.contains(key)) return out;
  const json& arr = j.at(key);
  if (!arr.is_array() || arr.size() != 4)
    throw ConfigError(std::string("ConfigError: '") + key + "' must hold four matrices");
  for (int mu = 0; mu < 4; ++mu) {
    out[mu] = matrix_from_json(arr[mu]);
    if (out[mu].rows() != size || out[mu].cols() != size)
      throw ConfigError(std::string("ConfigError: '") + key + "' matrix has the wrong size");
  }
  return out;
}

}  // namespace

Inputs build_inputs(const RunConfig& cfg, const Signature& sig) {
  const int N = cfg.N, n = cfg.n, m = N * n;
  json file;
  if (cfg.fields_source == "file") file = read_json_file(cfg.fields_path);

  FiniteData fin = FiniteData::zero(n);
  if (cfg.df_source == "random") {
    fin = random_finite(n, cfg.df_scale, derive_seed(cfg.seed, 2));
  } else if (cfg.df_source == "file") {
    fin.D_F = read_matrix_file(cfg.df_path);
  } else if (file.contains("D_F")) {
    fin.D_F = matrix_from_json(file.at("D_F"));
  }

  FuzzyData fz = FuzzyData::zero(N, sig);
  Fluctuation fl = Fluctuation::zero(m);
  if (cfg.fields_source == "random") {
    const double s = cfg.fuzzy_scale > 0.0 ? cfg.fuzzy_scale : default_scale(N);
    fz = random_fuzzy(N, sig, s, derive_seed(cfg.seed, 1), cfg.include_X);
  } else if (cfg.fields_source == "file") {
    fz.K = read_four(file, "K", N);
    fz.X = read_four(file, "X", N);
    fl.A = read_four(file, "A", m);
    fl.S = read_four(file, "S", m);
    if (file.contains("phi")) fl.phi = matrix_from_json(file.at("phi"));
    if (fl.phi.rows() != m || fl.phi.cols() != m)
      throw ConfigError("ConfigError: 'phi' has the wrong size");
  }
  GaugeTriple gt = make_triple(std::move(fz), std::move(fin));
  if (cfg.fields_source == "random")
    fl = random_fluctuation(gt, cfg.fluct_scale, derive_seed(cfg.seed, 3), cfg.include_S);
  if (adjointness_deviation(fl, sig) > 1e-10)
    throw ConfigError("ConfigError: field adjointness does not match signature " + sig.label());
  return {build_gammas(sig), std::move(gt), std::move(fl)};
}

}  // namespace ncg
