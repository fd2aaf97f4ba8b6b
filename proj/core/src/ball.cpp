#include "gyro/ball.hpp"

#include <cmath>
#include <sstream>

namespace gyro {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BoundaryOrOutside: return "BoundaryOrOutside";
    case ErrorCode::NumericallyAtBoundary: return "NumericallyAtBoundary";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::WrongModel: return "WrongModel";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NegativeParameter: return "NegativeParameter";
    case ErrorCode::ZeroWeightSum: return "ZeroWeightSum";
    case ErrorCode::NotInAffineSpan: return "NotInAffineSpan";
    case ErrorCode::DependentAnchors: return "DependentAnchors";
    case ErrorCode::NonpositiveGammaSum: return "NonpositiveGammaSum";
    case ErrorCode::SideMismatch: return "SideMismatch";
  }
  return "Unknown";
}

BallParams::BallParams(int dim, double radius) : dim_(dim), radius_(radius) {
  if (dim < 1) {
    throw Error(ErrorCode::InvalidArgument, "ball dimension must be >= 1");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidArgument, "ball radius must be a positive finite number");
  }
}

void TolerancePolicy::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "rel_tol must lie in (0, 1)");
  }
  if (!(abs_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "abs_tol must be positive");
  }
  if (!(boundary_margin > 0.0 && boundary_margin < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "boundary_margin must lie in (0, 1)");
  }
}

namespace {

void require_dim(const BallParams& params, const Vector& coords) {
  if (coords.size() != params.dim()) {
    std::ostringstream msg;
    msg << "expected " << params.dim() << " coordinates, got " << coords.size();
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

std::string norm_message(double norm, double radius) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "point norm " << norm << " is not below the ball radius " << radius;
  return msg.str();
}

}  // namespace

BallPoint::BallPoint(const BallParams& params, Vector coords)
    : params_(params), coords_(std::move(coords)) {
  require_dim(params_, coords_);
  if (!coords_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "point coordinates must be finite");
  }
  if (!is_in_ball(coords_, params_)) {
    throw Error(ErrorCode::BoundaryOrOutside, norm_message(coords_.norm(), params_.radius()));
  }
}

BallPoint::BallPoint(const BallParams& params, std::initializer_list<double> coords)
    : BallPoint(params, Eigen::Map<const Vector>(coords.begin(), static_cast<Eigen::Index>(coords.size()))) {}

BallPoint BallPoint::from_result(const BallParams& params, Vector coords) {
  require_dim(params, coords);
  if (!coords.allFinite() || !is_in_ball(coords, params)) {
    throw Error(ErrorCode::NumericallyAtBoundary,
                "result left the open ball in floating point: " +
                    norm_message(coords.norm(), params.radius()));
  }
  return BallPoint(Unchecked{}, params, std::move(coords));
}

BallPoint BallPoint::zero(const BallParams& params) {
  return BallPoint(Unchecked{}, params, Vector::Zero(params.dim()));
}

BallPoint BallPoint::operator-() const { return BallPoint(Unchecked{}, params_, -coords_); }

void require_same_context(const BallPoint& a, const BallPoint& b) {
  if (a.params() != b.params()) {
    throw Error(ErrorCode::ContextMismatch, "points belong to different balls");
  }
}

bool is_in_ball(const Vector& v, const BallParams& params) {
  require_dim(params, v);
  return v.norm() < params.radius();
}

double gamma_factor(const Vector& v, double radius) {
  const double ratio_sq = v.squaredNorm() / (radius * radius);
  if (!(ratio_sq < 1.0)) {
    throw Error(ErrorCode::BoundaryOrOutside, norm_message(v.norm(), radius));
  }
  return 1.0 / std::sqrt(1.0 - ratio_sq);
}

double gamma_factor(const BallPoint& v) { return gamma_factor(v.coords(), v.radius()); }

double stable_atanh(double x) {
  if (!(std::abs(x) < 1.0)) {
    throw Error(ErrorCode::BoundaryOrOutside, "atanh argument must lie in (-1, 1)");
  }
  return 0.5 * std::log1p(2.0 * x / (1.0 - x));
}

BallSampler::BallSampler(const BallParams& params, std::uint64_t seed, double radius_cap)
    : params_(params), cap_(radius_cap), engine_(seed) {
  if (!(radius_cap > 0.0 && radius_cap < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "radius_cap must lie in (0, 1)");
  }
}

BallPoint BallSampler::next() {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector direction(params_.dim());
  double len = 0.0;
  do {
    for (int i = 0; i < params_.dim(); ++i) direction[i] = normal(engine_);
    len = direction.norm();
  } while (len == 0.0);
  const double r = uniform(0.0, cap_ * params_.radius());
  return BallPoint(params_, direction * (r / len));
}

double BallSampler::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(engine_);
}

Matrix BallSampler::rotation() {
  const int n = params_.dim();
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = normal(engine_);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix column signs so the distribution is Haar, then force det = +1.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

BallPoint sample_ball(const BallParams& params, std::uint64_t seed, double radius_cap) {
  return BallSampler(params, seed, radius_cap).next();
}

}  // namespace gyro
