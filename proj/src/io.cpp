#include "ncg/io.hpp"

#include <fstream>
#include <sstream>

namespace ncg {

json matrix_to_json(const Mat& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Mat matrix_from_json(const json& j) {
  try {
    const long r = j.at("rows").get<long>();
    const long c = j.at("cols").get<long>();
    const json& data = j.at("data");
    if (r < 0 || c < 0 || long(data.size()) != r * c)
      throw ConfigError("ConfigError: matrix data length does not match rows*cols");
    Mat m(r, c);
    for (long i = 0; i < r; ++i)
      for (long k = 0; k < c; ++k) {
        const json& e = data.at(std::size_t(i * c + k));
        if (!e.is_array() || e.size() != 2)
          throw ConfigError("ConfigError: matrix entries must be [re, im] pairs");
        m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
      }
    return m;
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("ConfigError: bad matrix JSON: ") + ex.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("ConfigError: cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw ConfigError("ConfigError: " + path + " is not valid JSON: " + ex.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("ConfigError: cannot write " + path);
  out << text;
}

void write_matrix_file(const std::string& path, const Mat& m) {
  write_text_file(path, matrix_to_json(m).dump(1) + "\n");
}

Mat read_matrix_file(const std::string& path) { return matrix_from_json(read_json_file(path)); }

json fields_to_json(const FuzzyData& fz, const FiniteData& fin, const Fluctuation& fl) {
  json j;
  auto four = [](const std::array<Mat, 4>& a) {
    json arr = json::array();
    for (const auto& m : a) arr.push_back(matrix_to_json(m));
    return arr;
  };
  j["K"] = four(fz.K);
  j["X"] = four(fz.X);
  j["A"] = four(fl.A);
  j["S"] = four(fl.S);
  j["phi"] = matrix_to_json(fl.phi);
  j["D_F"] = matrix_to_json(fin.D_F);
  return j;
}

std::string format_double(double x) {
  // json's serializer emits the shortest round-trip representation
  return json(x).dump();
}

}  // namespace ncg
