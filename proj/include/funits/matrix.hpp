#pragma once

#include <Eigen/Dense>
#include <utility>

#include "funits/errors.hpp"

namespace funits {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Throws DomainError naming `what` if any entry is NaN/Inf.
void require_finite(const Mat& m, const char* what);

// Dense matrix whose entries are checked non-negative (and finite) at
// construction. The wrapped matrix is immutable afterwards.
class NonNegMat {
 public:
  explicit NonNegMat(Mat m);

  const Mat& mat() const { return m_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }

 private:
  Mat m_;
};

// Divides by the maximum entry; returns the scaled matrix and the scale.
// Throws DegenerateError when the matrix has no positive entry.
std::pair<NonNegMat, double> scale_to_unit(const NonNegMat& u);

}  // namespace funits
