#pragma once

#include "ncg/types.hpp"

namespace ncg {

/// Linear operator on m x m complex matrices, stored as its m^2 x m^2 matrix
/// acting on column-stacked vectors: vec(A X B) = (B^T (x) A) vec(X).
class SuperOp {
 public:
  SuperOp() = default;
  SuperOp(int side_dim, Mat rep);

  static SuperOp identity(int m);
  static SuperOp zero(int m);
  /// X -> K X
  static SuperOp left(const Mat& k);
  /// X -> X K
  static SuperOp right(const Mat& k);
  /// X -> K X + e X K, the generalized (anti)commutator {K, .}_e.
  static SuperOp gen_comm(const Mat& k, int e);

  int side_dim() const { return m_; }
  const Mat& rep() const { return rep_; }

  SuperOp adjoint() const;
  cplx trace() const { return rep_.trace(); }
  SuperOp power(int k) const;
  Mat apply(const Mat& x) const;

  SuperOp operator*(const SuperOp& o) const;  // composition
  SuperOp operator+(const SuperOp& o) const;
  SuperOp operator-(const SuperOp& o) const;
  SuperOp operator-() const { return {m_, -rep_}; }
  SuperOp& operator+=(const SuperOp& o);
  SuperOp& operator-=(const SuperOp& o);
  friend SuperOp operator*(cplx c, const SuperOp& s) { return {s.m_, c * s.rep_}; }
  friend SuperOp operator*(double c, const SuperOp& s) { return {s.m_, c * s.rep_}; }

 private:
  void require_same(const SuperOp& o, const char* op) const;

  int m_ = 0;
  Mat rep_;
};

/// [f, g] under composition.
SuperOp commutator(const SuperOp& f, const SuperOp& g);
/// {f, g} under composition.
SuperOp anticommutator(const SuperOp& f, const SuperOp& g);

/// Column-major vec and its inverse.
Vec vec(const Mat& x);
Mat unvec(const Vec& v, int m);

/// Permutation P with P vec(X) = vec(X^T).
Mat transpose_permutation(int m);

}  // namespace ncg
