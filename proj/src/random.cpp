#include "ncg/random.hpp"

#include <cmath>

namespace ncg {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t counter) {
  return splitmix64(root + counter * 0x9E3779B97F4A7C15ULL);
}

Mat Rng::ginibre(int rows, int cols, double sd) {
  const double s = sd / std::sqrt(2.0);
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(s);
      const double im = normal(s);
      m(i, j) = cplx(re, im);
    }
  return m;
}

Mat Rng::hermitian(int n, double sd) {
  const Mat g = ginibre(n, n, sd);
  return 0.5 * (g + g.adjoint());
}

}  // namespace ncg
