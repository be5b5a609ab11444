#include "ncg/superop.hpp"

#include <string>

namespace ncg {

namespace {

void require_square(const Mat& k, const char* who) {
  if (k.rows() != k.cols())
    throw DimensionMismatch(std::string("DimensionMismatch: ") + who +
                            " needs a square matrix, got " + std::to_string(k.rows()) +
                            "x" + std::to_string(k.cols()));
}

}  // namespace

SuperOp::SuperOp(int side_dim, Mat rep) : m_(side_dim), rep_(std::move(rep)) {
  const Eigen::Index n = Eigen::Index(side_dim) * side_dim;
  if (rep_.rows() != n || rep_.cols() != n)
    throw DimensionMismatch("DimensionMismatch: SuperOp representation must be m^2 x m^2");
}

SuperOp SuperOp::identity(int m) { return {m, Mat::Identity(m * m, m * m)}; }

SuperOp SuperOp::zero(int m) { return {m, Mat::Zero(m * m, m * m)}; }

SuperOp SuperOp::left(const Mat& k) {
  require_square(k, "left_mult");
  const int m = int(k.rows());
  return {m, kron(Mat::Identity(m, m), k)};
}

SuperOp SuperOp::right(const Mat& k) {
  require_square(k, "right_mult");
  const int m = int(k.rows());
  return {m, kron(k.transpose(), Mat::Identity(m, m))};
}

SuperOp SuperOp::gen_comm(const Mat& k, int e) {
  require_square(k, "gen_comm");
  SuperOp out = left(k);
  out.rep_ += double(e) * right(k).rep_;
  return out;
}

SuperOp SuperOp::adjoint() const { return {m_, rep_.adjoint()}; }

SuperOp SuperOp::power(int k) const {
  SuperOp out = identity(m_);
  for (int i = 0; i < k; ++i) out.rep_ = out.rep_ * rep_;
  return out;
}

Mat SuperOp::apply(const Mat& x) const {
  if (x.rows() != m_ || x.cols() != m_)
    throw DimensionMismatch("DimensionMismatch: SuperOp::apply argument size");
  return unvec(rep_ * vec(x), m_);
}

void SuperOp::require_same(const SuperOp& o, const char* op) const {
  if (o.m_ != m_)
    throw DimensionMismatch(std::string("DimensionMismatch: SuperOp ") + op +
                            " with side dims " + std::to_string(m_) + " and " +
                            std::to_string(o.m_));
}

SuperOp SuperOp::operator*(const SuperOp& o) const {
  require_same(o, "compose");
  return {m_, rep_ * o.rep_};
}

SuperOp SuperOp::operator+(const SuperOp& o) const {
  require_same(o, "add");
  return {m_, rep_ + o.rep_};
}

SuperOp SuperOp::operator-(const SuperOp& o) const {
  require_same(o, "subtract");
  return {m_, rep_ - o.rep_};
}

SuperOp& SuperOp::operator+=(const SuperOp& o) {
  require_same(o, "add");
  rep_ += o.rep_;
  return *this;
}

SuperOp& SuperOp::operator-=(const SuperOp& o) {
  require_same(o, "subtract");
  rep_ -= o.rep_;
  return *this;
}

SuperOp commutator(const SuperOp& f, const SuperOp& g) { return f * g - g * f; }

SuperOp anticommutator(const SuperOp& f, const SuperOp& g) { return f * g + g * f; }

Vec vec(const Mat& x) { return Eigen::Map<const Vec>(x.data(), x.size()); }

Mat unvec(const Vec& v, int m) { return Eigen::Map<const Mat>(v.data(), m, m); }

Mat transpose_permutation(int m) {
  Mat p = Mat::Zero(m * m, m * m);
  // vec index of (i,j) is i + j*m; transpose sends it to j + i*m.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) p(j + i * m, i + j * m) = 1.0;
  return p;
}

}  // namespace ncg
