#pragma once

#include "gyro/ball.hpp"

namespace gyro {

/// gyr[u,v] materialized as an n x n matrix, together with its generators.
///
/// Gyrations extend to linear maps of the whole ambient space, so apply()
/// accepts any vector; the BallPoint overload keeps the result in the ball.
class GyrationMap {
 public:
  GyrationMap(Matrix coeffs, BallPoint u, BallPoint v);

  static GyrationMap identity(const BallParams& params);

  const Matrix& coeffs() const noexcept { return coeffs_; }
  const BallPoint& first() const noexcept { return u_; }
  const BallPoint& second() const noexcept { return v_; }
  int dim() const noexcept { return static_cast<int>(coeffs_.rows()); }

  Vector apply(const Vector& w) const;
  BallPoint apply(const BallPoint& w) const;

  /// (this o other): apply other first.
  Matrix compose(const GyrationMap& other) const { return coeffs_ * other.coeffs_; }

  /// max |G^T G - I| entry.
  double orthogonality_defect() const;
  double determinant() const { return coeffs_.determinant(); }

 private:
  Matrix coeffs_;
  BallPoint u_;
  BallPoint v_;
};

/// Largest absolute entry of a - b.
double max_entry_diff(const Matrix& a, const Matrix& b);

}  // namespace gyro
