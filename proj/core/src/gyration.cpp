#include "gyro/gyration.hpp"

namespace gyro {

GyrationMap::GyrationMap(Matrix coeffs, BallPoint u, BallPoint v)
    : coeffs_(std::move(coeffs)), u_(std::move(u)), v_(std::move(v)) {
  require_same_context(u_, v_);
  if (coeffs_.rows() != u_.dim() || coeffs_.cols() != u_.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "gyration matrix must be n x n");
  }
}

GyrationMap GyrationMap::identity(const BallParams& params) {
  return GyrationMap(Matrix::Identity(params.dim(), params.dim()), BallPoint::zero(params),
                     BallPoint::zero(params));
}

Vector GyrationMap::apply(const Vector& w) const {
  if (w.size() != coeffs_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match gyration dimension");
  }
  return coeffs_ * w;
}

BallPoint GyrationMap::apply(const BallPoint& w) const {
  require_same_context(u_, w);
  return BallPoint::from_result(w.params(), coeffs_ * w.coords());
}

double GyrationMap::orthogonality_defect() const {
  const Matrix gram = coeffs_.transpose() * coeffs_;
  return max_entry_diff(gram, Matrix::Identity(gram.rows(), gram.cols()));
}

double max_entry_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace gyro
