#include "gyro/mobius.hpp"

#include <cmath>

namespace gyro::mobius {

double Complex::modulus() const { return std::hypot(re, im); }
double Complex::arg() const { return std::atan2(im, re); }

Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
Complex operator*(Complex a, Complex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(Complex a, Complex b) {
  const double den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
Complex conj(Complex a) { return {a.re, -a.im}; }

DiscComplex::DiscComplex(double re, double im) : z_{re, im} {
  if (!(re * re + im * im < 1.0) || !(z_.modulus() < 1.0)) {
    throw Error(ErrorCode::BoundaryOrOutside, "disc element must have modulus < 1");
  }
}

BallPoint DiscComplex::to_point() const { return BallPoint(BallParams(2, 1.0), {z_.re, z_.im}); }

DiscComplex DiscComplex::from_point(const BallPoint& p) {
  if (p.params() != BallParams(2, 1.0)) {
    throw Error(ErrorCode::ContextMismatch, "only points of the unit disc map to complex numbers");
  }
  return DiscComplex(p[0], p[1]);
}

DiscComplex disc_add(DiscComplex a, DiscComplex z) {
  const Complex one{1.0, 0.0};
  return DiscComplex((a.value() + z.value()) / (one + conj(a.value()) * z.value()));
}

Complex disc_gyration(DiscComplex a, DiscComplex b) {
  const Complex one{1.0, 0.0};
  return (one + a.value() * conj(b.value())) / (one + conj(a.value()) * b.value());
}

Vector add(const Vector& u, const Vector& v, double s) {
  const double s_sq = s * s;
  const double uu = u.squaredNorm() / s_sq;
  const double vv = v.squaredNorm() / s_sq;
  if (!(uu < 1.0)) {
    throw Error(ErrorCode::BoundaryOrOutside, "left summand must lie in the open ball");
  }
  // Same as ((1 + 2u.v + |v|^2) u + (1 - |u|^2) v)/(1 + 2u.v + |u|^2|v|^2) after
  // regrouping around u + v; the textbook coefficients cancel badly when both
  // points are near the boundary and nearly opposite.
  const Vector sum = u + v;
  const double ss = sum.squaredNorm() / s_sq;
  const double bu = 1.0 - uu;
  return (ss * u + bu * sum) / (ss + bu * (1.0 - vv));
}

BallPoint add(const BallPoint& u, const BallPoint& v) {
  require_same_context(u, v);
  return BallPoint::from_result(u.params(), add(u.coords(), v.coords(), u.radius()));
}

BallPoint subtract(const BallPoint& u, const BallPoint& v) { return add(u, -v); }

Vector gyrate(const BallPoint& u, const BallPoint& v, const Vector& w) {
  require_same_context(u, v);
  if (w.size() != u.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "gyrated vector has the wrong length");
  }
  const double s_sq = u.params().radius_sq();
  const double uv = u.coords().dot(v.coords()) / s_sq;
  const double uw = u.coords().dot(w) / s_sq;
  const double vw = v.coords().dot(w) / s_sq;
  const double uu = u.squared_norm() / s_sq;
  const double vv = v.squared_norm() / s_sq;

  const double a = -uw * vv + vw + 2.0 * uv * vw;
  const double b = -vw * uu - uw;
  const double d = (u.coords() + v.coords()).squaredNorm() / s_sq + (1.0 - uu) * (1.0 - vv);
  return w + 2.0 * (a * u.coords() + b * v.coords()) / d;
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

BallPoint coadd(const BallPoint& u, const BallPoint& v) {
  const BallPoint args[] = {u, v};
  return coadd_k(args);
}

BallPoint coadd_k(std::span<const BallPoint> vs) {
  if (vs.empty()) throw Error(ErrorCode::EmptyList, "coaddition needs at least one summand");
  const BallParams& params = vs.front().params();
  Vector numerator = Vector::Zero(params.dim());
  double denominator = 1.0;
  for (const BallPoint& p : vs) {
    require_same_context(vs.front(), p);
    const double g = gamma_factor(p);
    numerator += g * g * p.coords();
    // g^2 - 1 = g^2 |v|^2 / s^2
    denominator += g * g * p.squared_norm() / params.radius_sq();
  }
  const Vector result = numerator / denominator;
  if (!is_in_ball(result, params)) {
    throw Error(ErrorCode::BoundaryOrOutside, "order-k coaddition of these summands is outside the ball");
  }
  return BallPoint(params, result);
}

}  // namespace gyro::mobius
