#include "gyro/einstein.hpp"

#include <cmath>

namespace gyro::einstein {

namespace {

// gamma - 1 without cancellation for small |v|.
double gamma_minus_one(double gamma, double norm_sq, double c_sq) {
  return gamma * gamma * (norm_sq / c_sq) / (gamma + 1.0);
}

}  // namespace

Vector add(const Vector& u, const Vector& v, double c) {
  const double c_sq = c * c;
  const double gu = gamma_factor(u, c);
  const double uv = u.dot(v);
  return (u + v / gu + (gu / (1.0 + gu)) * (uv / c_sq) * u) / (1.0 + uv / c_sq);
}

BallPoint add(const BallPoint& u, const BallPoint& v) {
  require_same_context(u, v);
  return BallPoint::from_result(u.params(), add(u.coords(), v.coords(), u.radius()));
}

BallPoint subtract(const BallPoint& u, const BallPoint& v) { return add(u, -v); }

BallPoint parallel_add(const BallPoint& u, const BallPoint& v, double rel_tol) {
  require_same_context(u, v);
  const double nu = u.norm();
  const double nv = v.norm();
  const double uv = u.coords().dot(v.coords());
  if (std::abs(std::abs(uv) - nu * nv) > rel_tol * nu * nv) {
    throw Error(ErrorCode::NotParallel, "parallel addition needs u = lambda v");
  }
  // u.v carries the relative sign of the two signed magnitudes.
  const double c_sq = u.params().radius_sq();
  return BallPoint::from_result(u.params(), (u.coords() + v.coords()) / (1.0 + uv / c_sq));
}

Vector gyrate(const BallPoint& u, const BallPoint& v, const Vector& w) {
  require_same_context(u, v);
  if (w.size() != u.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "gyrated vector has the wrong length");
  }
  const double c_sq = u.params().radius_sq();
  const double gu = gamma_factor(u);
  const double gv = gamma_factor(v);
  const double gu_m1 = gamma_minus_one(gu, u.squared_norm(), c_sq);
  const double gv_m1 = gamma_minus_one(gv, v.squared_norm(), c_sq);
  const double uv = u.coords().dot(v.coords());
  const double uw = u.coords().dot(w);
  const double vw = v.coords().dot(w);

  const double a = -(gu * gu / (gu + 1.0)) * gv_m1 * uw / c_sq + gu * gv * vw / c_sq +
                   2.0 * (gu * gu * gv * gv / ((gu + 1.0) * (gv + 1.0))) * uv * vw / (c_sq * c_sq);
  const double b = -(gv / (gv + 1.0)) * (gu * (gv + 1.0) * uw + gu_m1 * gv * vw) / c_sq;
  const double d = gu * gv * (1.0 + uv / c_sq) + 1.0;
  return w + (a * u.coords() + b * v.coords()) / d;
}

GyrationMap gyration(const BallPoint& u, const BallPoint& v) {
  require_same_context(u, v);
  const int n = u.dim();
  Matrix coeffs(n, n);
  for (int j = 0; j < n; ++j) {
    coeffs.col(j) = gyrate(u, v, Vector::Unit(n, j));
  }
  return GyrationMap(std::move(coeffs), u, v);
}

BallPoint scalar_mul(double r, const BallPoint& v) {
  const double norm = v.norm();
  if (r == 0.0 || norm == 0.0) return BallPoint::zero(v.params());
  const double c = v.radius();
  const double scaled = c * std::tanh(r * stable_atanh(norm / c));
  return BallPoint::from_result(v.params(), v.coords() * (scaled / norm));
}

BallPoint integer_mul_closed_form(int k, const BallPoint& v) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be a positive integer");
  const double norm = v.norm();
  if (norm == 0.0) return BallPoint::zero(v.params());
  const double c = v.radius();
  const double x = norm / c;
  // ((1+x)^k - (1-x)^k)/((1+x)^k + (1-x)^k), divided through by (1+x)^k.
  const double q = std::pow((1.0 - x) / (1.0 + x), k);
  const double scaled = c * (1.0 - q) / (1.0 + q);
  return BallPoint::from_result(v.params(), v.coords() * (scaled / norm));
}

BallPoint coadd(const BallPoint& u, const BallPoint& v) {
  require_same_context(u, v);
  const double gu = gamma_factor(u);
  const double gv = gamma_factor(v);
  const Vector mid = (gu * u.coords() + gv * v.coords()) / (gu + gv);
  return scalar_mul(2.0, BallPoint::from_result(u.params(), mid));
}

BallPoint coadd3(const BallPoint& u, const BallPoint& v, const BallPoint& w) {
  const BallPoint args[] = {u, v, w};
  return coadd_k(args);
}

BallPoint coadd_k(std::span<const BallPoint> vs) {
  if (vs.empty()) throw Error(ErrorCode::EmptyList, "coaddition needs at least one summand");
  const BallParams& params = vs.front().params();
  const double c_sq = params.radius_sq();
  Vector numerator = Vector::Zero(params.dim());
  double denominator = 2.0;
  for (const BallPoint& p : vs) {
    require_same_context(vs.front(), p);
    const double g = gamma_factor(p);
    numerator += g * p.coords();
    denominator += gamma_minus_one(g, p.squared_norm(), c_sq);
  }
  const Vector inner = numerator / denominator;
  // For k >= 3 the quotient is no longer a convex combination and can leave
  // the ball; the operation is then undefined.
  if (!is_in_ball(inner, params)) {
    throw Error(ErrorCode::BoundaryOrOutside, "order-k coaddition of these summands is outside the ball");
  }
  return scalar_mul(2.0, BallPoint::from_result(params, inner));
}

}  // namespace gyro::einstein
