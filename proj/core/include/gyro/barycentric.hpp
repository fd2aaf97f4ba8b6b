#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gyro/ball.hpp"

namespace gyro {

// ---- Euclidean barycentric coordinates ----

/// Anchors are pointwise independent when A_k - A_1 (k >= 2) are linearly
/// independent.
bool euclid_pointwise_independent(std::span<const Vector> anchors, double rel_tol = 1e-9);

/// sum m_k A_k / sum m_k. Throws ZeroWeightSum when |sum m_k| <= abs_tol * sum |m_k|.
Vector euclid_barycentric_eval(std::span<const Vector> anchors, std::span<const double> weights,
                               const TolerancePolicy& policy = {});

/// Special (sum = 1) barycentric coordinates of p. Throws DependentAnchors or
/// NotInAffineSpan.
std::vector<double> euclid_barycentric_solve(std::span<const Vector> anchors, const Vector& p,
                                             const TolerancePolicy& policy = {});

// ---- Gyrobarycentric coordinates (Einstein model) ----

enum class PointClass { InsideSimplex, InsideBall, OnBoundary, OutsideBall };

std::string_view to_string(PointClass pc) noexcept;

/// True when the gyrovectors (-A_1) (+) A_k are linearly independent.
bool gyro_pointwise_independent(std::span<const BallPoint> anchors, double rel_tol = 1e-9);

struct GyroConstant {
  double m0_squared;
  /// +sqrt(m0^2) when m0^2 >= 0.
  std::optional<double> m0;
};

/// m0^2 = (sum m)^2 + 2 sum_{j<k} m_j m_k (g_{(-A_j)(+)A_k} - 1).
GyroConstant gyro_constant_m0(std::span<const BallPoint> anchors, std::span<const double> weights);

struct GyroEvaluation {
  /// sum m_k g_k A_k / sum m_k g_k; may lie on or beyond the boundary.
  Vector point;
  PointClass point_class;
  GyroConstant constant;
  /// sum m_k g_k / m0 when m0^2 > 0.
  std::optional<double> gamma;
};

/// Throws NonpositiveGammaSum unless sum m_k g_{A_k} > 0.
GyroEvaluation gyro_eval(std::span<const BallPoint> anchors, std::span<const double> weights,
                         const TolerancePolicy& policy = {});

struct CovarianceReport {
  /// Left gyrotranslation by X: point, gamma, gamma-weighted point, m0.
  std::array<double, 4> translation;
  /// Rotation by R: same four quantities.
  std::array<double, 4> rotation;
  double max() const;
};

/// Two-sided residuals of the gyrocovariance identities under X (+) (.) and
/// under the orthogonal map R. The representation must describe an interior
/// point (m0^2 > 0); otherwise DegenerateInput.
CovarianceReport gyro_covariance_check(std::span<const BallPoint> anchors,
                                       std::span<const double> weights, const BallPoint& x,
                                       const Matrix& r, const TolerancePolicy& policy = {});

struct BoundaryWeights {
  double m_plus;
  double m_minus;
};

/// g12 +- sqrt(g12^2 - 1), the weights m of (m : -1) that put the point on
/// the boundary. Throws DegenerateInput for coincident anchors.
BoundaryWeights boundary_weight_solve(const BallPoint& a1, const BallPoint& a2,
                                      const TolerancePolicy& policy = {});

/// Experimental inverse problem: special gyrobarycentric coordinates of p
/// with respect to N <= n + 1 anchors, by least squares in m_k g_k / m0.
/// Throws DependentAnchors or NotInAffineSpan.
std::vector<double> gyro_barycentric_solve(std::span<const BallPoint> anchors, const BallPoint& p,
                                           const TolerancePolicy& policy = {});

}  // namespace gyro
