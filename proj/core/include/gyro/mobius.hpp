#pragma once

#include <span>

#include "gyro/ball.hpp"
#include "gyro/einstein.hpp"
#include "gyro/gyration.hpp"

// Mobius addition in the complex unit disc and in the s-ball (Poincare model).
namespace gyro::mobius {

/// Complex number as a pair of doubles.
struct Complex {
  double re = 0.0;
  double im = 0.0;

  double modulus() const;
  double arg() const;
  friend bool operator==(const Complex&, const Complex&) = default;
};

Complex operator+(Complex a, Complex b);
Complex operator*(Complex a, Complex b);
Complex operator/(Complex a, Complex b);
Complex conj(Complex a);

/// Element of the open unit disc.
class DiscComplex {
 public:
  DiscComplex(double re, double im);
  explicit DiscComplex(Complex z) : DiscComplex(z.re, z.im) {}

  double re() const noexcept { return z_.re; }
  double im() const noexcept { return z_.im; }
  Complex value() const noexcept { return z_; }

  /// The identification C -> R^2 as a point of the unit disc.
  BallPoint to_point() const;
  static DiscComplex from_point(const BallPoint& p);

 private:
  Complex z_;
};

/// (a + z)/(1 + conj(a) z).
DiscComplex disc_add(DiscComplex a, DiscComplex z);

/// (1 + a conj(b))/(1 + conj(a) b); unit modulus. Rotates b (+) a onto a (+) b.
Complex disc_gyration(DiscComplex a, DiscComplex b);

/// u (+) v on raw coordinates; u in the ball, v any ambient vector.
Vector add(const Vector& u, const Vector& v, double s);

BallPoint add(const BallPoint& u, const BallPoint& v);
BallPoint subtract(const BallPoint& u, const BallPoint& v);

/// Closed-form Mobius gyration w + 2(Au + Bv)/D applied to an ambient vector.
Vector gyrate(const BallPoint& u, const BallPoint& v, const Vector& w);

GyrationMap gyration(const BallPoint& u, const BallPoint& v);

/// Both models share one scalar multiplication.
inline BallPoint scalar_mul(double r, const BallPoint& v) { return einstein::scalar_mul(r, v); }

/// u [+] v = (g_u^2 u + g_v^2 v)/(g_u^2 + g_v^2 - 1).
BallPoint coadd(const BallPoint& u, const BallPoint& v);

/// (sum g_i^2 v_i)/(1 + sum (g_i^2 - 1)); k = 1 returns v.
/// For k >= 3 the result can fall outside the ball; that throws BoundaryOrOutside.
BallPoint coadd_k(std::span<const BallPoint> vs);

}  // namespace gyro::mobius
