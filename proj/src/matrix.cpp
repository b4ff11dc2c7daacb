#include "funits/matrix.hpp"

#include <cmath>
#include <string>

namespace funits {

void require_finite(const Mat& m, const char* what) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j))) {
        throw DomainError(std::string(what) + ": non-finite entry at row " +
                          std::to_string(i) + ", col " + std::to_string(j));
      }
    }
  }
}

NonNegMat::NonNegMat(Mat m) : m_(std::move(m)) {
  for (Eigen::Index j = 0; j < m_.cols(); ++j) {
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
      const double v = m_(i, j);
      if (!std::isfinite(v)) {
        throw DomainError("non-negative matrix: non-finite entry at row " +
                          std::to_string(i) + ", col " + std::to_string(j));
      }
      if (v < 0.0) {
        throw DomainError("non-negative matrix: negative entry " + std::to_string(v) +
                          " at row " + std::to_string(i) + ", col " + std::to_string(j));
      }
    }
  }
}

std::pair<NonNegMat, double> scale_to_unit(const NonNegMat& u) {
  const double scale = u.mat().maxCoeff();
  if (scale <= 0.0) {
    throw DegenerateError("scale_to_unit: matrix has no positive entry");
  }
  return {NonNegMat(u.mat() / scale), scale};
}

}  // namespace funits
