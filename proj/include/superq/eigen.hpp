#pragma once

#include <superq/field.hpp>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace Eigen {

template <>
struct NumTraits<superq::Scalar> {
  using Real = superq::Scalar;
  using NonInteger = superq::Scalar;
  using Literal = superq::Scalar;
  using Nested = superq::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return superq::Scalar(0); }
  static inline Real dummy_precision() { return superq::Scalar(0); }
  static inline int digits10() { return 0; }
};

};  // namespace Eigen

namespace superq {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using SpMat = Eigen::SparseMatrix<Scalar>;
using Index = Eigen::Index;

inline Mat zero_mat(Index r, Index c) { return Mat::Constant(r, c, Scalar(0)); }
inline Vec zero_vec(Index n) { return Vec::Constant(n, Scalar(0)); }

inline Mat identity_mat(Index n) {
  Mat m = zero_mat(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

inline bool is_zero_vec(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

inline bool is_zero_mat(const Mat& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace superq
