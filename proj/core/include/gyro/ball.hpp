#pragma once

#include <cstdint>
#include <random>
#include <span>

#include <Eigen/Dense>

#include "gyro/error.hpp"

namespace gyro {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Dimension n and radius c of the open ball {v in R^n : |v| < c}.
class BallParams {
 public:
  BallParams(int dim, double radius);

  int dim() const noexcept { return dim_; }
  double radius() const noexcept { return radius_; }
  double radius_sq() const noexcept { return radius_ * radius_; }

  friend bool operator==(const BallParams&, const BallParams&) = default;

 private:
  int dim_;
  double radius_;
};

/// Thresholds for every approximate comparison in the library.
struct TolerancePolicy {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  /// Fraction of c beyond which a point counts as numerically on the boundary.
  double boundary_margin = 0.999;

  void validate() const;
};

/// A point of the open ball. Construction fails unless |coords| < c.
class BallPoint {
 public:
  BallPoint(const BallParams& params, Vector coords);
  BallPoint(const BallParams& params, std::initializer_list<double> coords);

  /// Wraps the output of a ball operation. A result that rounded onto or past
  /// the boundary is reported as NumericallyAtBoundary, not BoundaryOrOutside.
  static BallPoint from_result(const BallParams& params, Vector coords);

  static BallPoint zero(const BallParams& params);

  const BallParams& params() const noexcept { return params_; }
  const Vector& coords() const noexcept { return coords_; }
  int dim() const noexcept { return params_.dim(); }
  double radius() const noexcept { return params_.radius(); }
  double operator[](int i) const { return coords_[i]; }

  double norm() const { return coords_.norm(); }
  double squared_norm() const { return coords_.squaredNorm(); }
  bool is_zero() const { return coords_.isZero(0.0); }

  /// Additive inverse. In both ball models the gyrogroup inverse is -v.
  BallPoint operator-() const;

 private:
  struct Unchecked {};
  BallPoint(Unchecked, const BallParams& params, Vector coords)
      : params_(params), coords_(std::move(coords)) {}

  BallParams params_;
  Vector coords_;
};

/// Throws ContextMismatch unless both points live in the same ball.
void require_same_context(const BallPoint& a, const BallPoint& b);

bool is_in_ball(const Vector& v, const BallParams& params);

/// Lorentz factor 1/sqrt(1 - |v|^2/c^2).
double gamma_factor(const Vector& v, double radius);
double gamma_factor(const BallPoint& v);

/// Deterministic sampler: uniform direction, radius uniform in [0, cap*c].
BallPoint sample_ball(const BallParams& params, std::uint64_t seed, double radius_cap);

/// Stream form of sample_ball for drawing many points from one seed.
class BallSampler {
 public:
  BallSampler(const BallParams& params, std::uint64_t seed, double radius_cap);

  BallPoint next();
  double uniform(double lo, double hi);
  /// Random orthogonal n x n matrix with determinant +1.
  Matrix rotation();

 private:
  BallParams params_;
  double cap_;
  std::mt19937_64 engine_;
};

/// atanh(x) evaluated as log1p(2x/(1-x))/2; requires |x| < 1.
double stable_atanh(double x);

}  // namespace gyro
