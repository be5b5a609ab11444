#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ncg {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr cplx I_unit{0.0, 1.0};

// Error hierarchy. Every computational failure derives from Error so the
// CLI can map it onto exit code 1; configuration problems use ConfigError.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define NCG_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(what) {}         \
    const char* kind() const noexcept override { return #Name; }    \
  };

NCG_DEFINE_ERROR(NonFourDimensional)
NCG_DEFINE_ERROR(ConjugationNotFound)
NCG_DEFINE_ERROR(DimensionMismatch)
NCG_DEFINE_ERROR(NotSelfAdjoint)
NCG_DEFINE_ERROR(NotFlat)
NCG_DEFINE_ERROR(NotRiemannian)
NCG_DEFINE_ERROR(UnstableAction)
NCG_DEFINE_ERROR(ConfigError)

#undef NCG_DEFINE_ERROR

/// Max entrywise modulus; the deviation measure used by every report.
inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double rel_frobenius(const Mat& got, const Mat& want) {
  const double denom = want.norm();
  const double diff = (got - want).norm();
  return denom > 0.0 ? diff / denom : diff;
}

/// Kronecker product, row index of `a` outermost.
Mat kron(const Mat& a, const Mat& b);

}  // namespace ncg
