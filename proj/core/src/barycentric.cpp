#include "gyro/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gyro/einstein.hpp"
#include "gyro/linear.hpp"

namespace gyro {

namespace {

void require_weights(std::size_t anchors, std::size_t weights) {
  if (anchors == 0) throw Error(ErrorCode::EmptyList, "no anchors given");
  if (anchors != weights) {
    throw Error(ErrorCode::DimensionMismatch, "need exactly one weight per anchor");
  }
}

double abs_sum(std::span<const double> w) {
  return std::accumulate(w.begin(), w.end(), 0.0,
                         [](double acc, double x) { return acc + std::abs(x); });
}

bool independent_differences(const std::vector<Vector>& diffs, int dim, double rel_tol) {
  if (diffs.empty()) return true;
  if (static_cast<int>(diffs.size()) > dim) return false;
  const Matrix m = stack_columns(diffs);
  if (m.isZero(0.0)) return false;
  return numerical_rank(m, rel_tol) == static_cast<int>(diffs.size());
}

}  // namespace

bool euclid_pointwise_independent(std::span<const Vector> anchors, double rel_tol) {
  if (anchors.empty()) return false;
  std::vector<Vector> diffs;
  for (std::size_t k = 1; k < anchors.size(); ++k) diffs.push_back(anchors[k] - anchors[0]);
  return independent_differences(diffs, static_cast<int>(anchors[0].size()), rel_tol);
}

Vector euclid_barycentric_eval(std::span<const Vector> anchors, std::span<const double> weights,
                               const TolerancePolicy& policy) {
  require_weights(anchors.size(), weights.size());
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(sum) <= policy.abs_tol * abs_sum(weights)) {
    throw Error(ErrorCode::ZeroWeightSum, "weights sum to zero");
  }
  Vector p = Vector::Zero(anchors[0].size());
  for (std::size_t k = 0; k < anchors.size(); ++k) p += weights[k] * anchors[k];
  return p / sum;
}

std::vector<double> euclid_barycentric_solve(std::span<const Vector> anchors, const Vector& p,
                                             const TolerancePolicy& policy) {
  if (anchors.empty()) throw Error(ErrorCode::EmptyList, "no anchors given");
  if (!euclid_pointwise_independent(anchors)) {
    throw Error(ErrorCode::DependentAnchors, "anchors are not pointwise independent");
  }
  double scale = 1.0;
  for (const Vector& a : anchors) scale = std::max(scale, a.norm());
  const Vector offset = p - anchors[0];
  std::vector<double> weights(anchors.size(), 0.0);
  if (anchors.size() == 1) {
    if (offset.norm() > policy.abs_tol * scale) {
      throw Error(ErrorCode::NotInAffineSpan, "point differs from the single anchor");
    }
    weights[0] = 1.0;
    return weights;
  }
  std::vector<Vector> diffs;
  for (std::size_t k = 1; k < anchors.size(); ++k) diffs.push_back(anchors[k] - anchors[0]);
  const Matrix m = stack_columns(diffs);
  const Vector lambda = m.colPivHouseholderQr().solve(offset);
  if ((m * lambda - offset).norm() > policy.abs_tol * scale) {
    throw Error(ErrorCode::NotInAffineSpan, "point is outside the affine span of the anchors");
  }
  weights[0] = 1.0 - lambda.sum();
  for (std::size_t k = 1; k < anchors.size(); ++k) weights[k] = lambda[static_cast<Eigen::Index>(k - 1)];
  return weights;
}

std::string_view to_string(PointClass pc) noexcept {
  switch (pc) {
    case PointClass::InsideSimplex: return "inside-simplex";
    case PointClass::InsideBall: return "inside-ball";
    case PointClass::OnBoundary: return "on-boundary";
    case PointClass::OutsideBall: return "outside-ball";
  }
  return "unknown";
}

bool gyro_pointwise_independent(std::span<const BallPoint> anchors, double rel_tol) {
  if (anchors.empty()) return false;
  std::vector<Vector> diffs;
  for (std::size_t k = 1; k < anchors.size(); ++k) {
    diffs.push_back(einstein::add(-anchors[0], anchors[k]).coords());
  }
  return independent_differences(diffs, anchors[0].dim(), rel_tol);
}

GyroConstant gyro_constant_m0(std::span<const BallPoint> anchors, std::span<const double> weights) {
  require_weights(anchors.size(), weights.size());
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  double m0_sq = sum * sum;
  const double c_sq = anchors[0].params().radius_sq();
  for (std::size_t j = 0; j < anchors.size(); ++j) {
    for (std::size_t k = j + 1; k < anchors.size(); ++k) {
      const BallPoint ajk = einstein::add(-anchors[j], anchors[k]);
      const double g = gamma_factor(ajk);
      // g - 1 = g^2 |a|^2 / (c^2 (g + 1)), exact for coincident anchors.
      m0_sq += 2.0 * weights[j] * weights[k] * g * g * ajk.squared_norm() / (c_sq * (g + 1.0));
    }
  }
  GyroConstant gc{m0_sq, std::nullopt};
  if (m0_sq >= 0.0) gc.m0 = std::sqrt(m0_sq);
  return gc;
}

GyroEvaluation gyro_eval(std::span<const BallPoint> anchors, std::span<const double> weights,
                         const TolerancePolicy& policy) {
  require_weights(anchors.size(), weights.size());
  double gamma_sum = 0.0;
  Vector weighted = Vector::Zero(anchors[0].dim());
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    require_same_context(anchors[0], anchors[k]);
    const double g = gamma_factor(anchors[k]);
    gamma_sum += weights[k] * g;
    weighted += weights[k] * g * anchors[k].coords();
  }
  if (!(gamma_sum > 0.0)) {
    throw Error(ErrorCode::NonpositiveGammaSum, "sum of m_k gamma_k must be positive");
  }
  GyroEvaluation ev{weighted / gamma_sum, PointClass::InsideBall,
                    gyro_constant_m0(anchors, weights), std::nullopt};

  const double scale = abs_sum(weights);
  const double m0_sq = ev.constant.m0_squared;
  const bool all_pos = std::all_of(weights.begin(), weights.end(), [](double m) { return m > 0; });
  const bool all_neg = std::all_of(weights.begin(), weights.end(), [](double m) { return m < 0; });
  if (std::abs(m0_sq) <= policy.abs_tol * scale * scale) {
    ev.point_class = PointClass::OnBoundary;
  } else if (m0_sq < 0.0) {
    ev.point_class = PointClass::OutsideBall;
  } else {
    ev.point_class = (all_pos || all_neg) ? PointClass::InsideSimplex : PointClass::InsideBall;
    ev.gamma = gamma_sum / *ev.constant.m0;
  }
  return ev;
}

double CovarianceReport::max() const {
  double m = 0.0;
  for (double r : translation) m = std::max(m, r);
  for (double r : rotation) m = std::max(m, r);
  return m;
}

namespace {

// Residuals of P' = eval(A'), gamma_P' = sum m g'/m0, gamma_P' P' = sum m g' A'/m0
// and m0(A') = m0 for the transformed point P' and anchors A'.
std::array<double, 4> covariance_residuals(const BallPoint& moved_p,
                                           std::span<const BallPoint> moved,
                                           std::span<const double> weights, double m0) {
  const double c = moved_p.radius();
  double gsum = 0.0;
  Vector gvec = Vector::Zero(moved_p.dim());
  for (std::size_t k = 0; k < moved.size(); ++k) {
    const double g = gamma_factor(moved[k]);
    gsum += weights[k] * g;
    gvec += weights[k] * g * moved[k].coords();
  }
  const double gp = gamma_factor(moved_p);
  std::array<double, 4> r{};
  r[0] = (moved_p.coords() - gvec / gsum).norm() / c;
  r[1] = std::abs(gp - gsum / m0) / gp;
  r[2] = (gp * moved_p.coords() - gvec / m0).norm() / (gp * c);
  const GyroConstant moved_m0 = gyro_constant_m0(moved, weights);
  r[3] = moved_m0.m0 ? std::abs(*moved_m0.m0 - m0) / m0 : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace

CovarianceReport gyro_covariance_check(std::span<const BallPoint> anchors,
                                       std::span<const double> weights, const BallPoint& x,
                                       const Matrix& r, const TolerancePolicy& policy) {
  const GyroEvaluation ev = gyro_eval(anchors, weights, policy);
  if (!ev.gamma) {
    throw Error(ErrorCode::DegenerateInput, "covariance check needs an interior point");
  }
  const BallParams& params = anchors[0].params();
  if (r.rows() != params.dim() || r.cols() != params.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "rotation has the wrong shape");
  }
  const double m0 = *ev.constant.m0;
  const BallPoint p = BallPoint::from_result(params, ev.point);

  std::vector<BallPoint> translated;
  std::vector<BallPoint> rotated;
  for (const BallPoint& a : anchors) {
    translated.push_back(einstein::add(x, a));
    rotated.push_back(BallPoint::from_result(params, r * a.coords()));
  }
  CovarianceReport report{};
  report.translation = covariance_residuals(einstein::add(x, p), translated, weights, m0);
  report.rotation = covariance_residuals(BallPoint::from_result(params, r * p.coords()), rotated,
                                         weights, m0);
  return report;
}

BoundaryWeights boundary_weight_solve(const BallPoint& a1, const BallPoint& a2,
                                      const TolerancePolicy& policy) {
  const BallPoint a12 = einstein::add(-a1, a2);
  if (a12.norm() <= policy.abs_tol * a1.radius()) {
    throw Error(ErrorCode::DegenerateInput, "boundary weights need two distinct anchors");
  }
  const double g = gamma_factor(a12);
  const double root = g * a12.norm() / a1.radius();
  // The smaller root as 1/(larger) keeps m+ m- = 1 without cancellation.
  return {g + root, 1.0 / (g + root)};
}

std::vector<double> gyro_barycentric_solve(std::span<const BallPoint> anchors, const BallPoint& p,
                                           const TolerancePolicy& policy) {
  if (anchors.empty()) throw Error(ErrorCode::EmptyList, "no anchors given");
  const int n = anchors[0].dim();
  if (static_cast<int>(anchors.size()) > n + 1 || !gyro_pointwise_independent(anchors)) {
    throw Error(ErrorCode::DependentAnchors, "anchors are not pointwise independent");
  }
  const auto cols = static_cast<Eigen::Index>(anchors.size());
  Matrix system(n + 1, cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    system.col(k).head(n) = anchors[static_cast<std::size_t>(k)].coords();
    system(n, k) = 1.0;
  }
  const double gp = gamma_factor(p);
  Vector rhs(n + 1);
  rhs.head(n) = gp * p.coords();
  rhs[n] = gp;
  const Vector mu = system.colPivHouseholderQr().solve(rhs);
  if ((system * mu - rhs).norm() > std::max(policy.abs_tol, policy.rel_tol) * gp * p.radius()) {
    throw Error(ErrorCode::NotInAffineSpan, "point is outside the gyro span of the anchors");
  }
  std::vector<double> m(anchors.size());
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    m[k] = mu[static_cast<Eigen::Index>(k)] / gamma_factor(anchors[k]);
  }
  const double sum = std::accumulate(m.begin(), m.end(), 0.0);
  if (std::abs(sum) > policy.abs_tol * abs_sum(m)) {
    for (double& w : m) w /= sum;
  }
  return m;
}

}  // namespace gyro
