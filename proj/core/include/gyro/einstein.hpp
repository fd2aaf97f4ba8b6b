#pragma once

#include <span>

#include "gyro/ball.hpp"
#include "gyro/gyration.hpp"

// Einstein velocity addition in the c-ball (Beltrami-Klein model).
namespace gyro::einstein {

/// u (+) v on raw coordinates. u must lie in the open ball; v may be any
/// ambient vector (boundary endpoints are obtained this way).
Vector add(const Vector& u, const Vector& v, double c);

BallPoint add(const BallPoint& u, const BallPoint& v);

/// u (-) v = u (+) (-v).
BallPoint subtract(const BallPoint& u, const BallPoint& v);

/// Parallel-velocity special case (u + v)/(1 + u.v/c^2). Throws NotParallel
/// unless u and v are collinear with the origin.
BallPoint parallel_add(const BallPoint& u, const BallPoint& v, double rel_tol = 1e-10);

/// gyr[u,v]w from the closed-form coefficients; w is any ambient vector.
Vector gyrate(const BallPoint& u, const BallPoint& v, const Vector& w);

/// Closed-form gyration assembled column by column on the standard basis.
GyrationMap gyration(const BallPoint& u, const BallPoint& v);

/// r (x) v = c tanh(r atanh(|v|/c)) v/|v|, with r (x) 0 = 0. Shared by both models.
BallPoint scalar_mul(double r, const BallPoint& v);

/// k-fold sum v (+) ... (+) v through the ((1+|v|/c)^k - (1-|v|/c)^k) ratio form.
BallPoint integer_mul_closed_form(int k, const BallPoint& v);

/// u [+] v = 2 (x) (g_u u + g_v v)/(g_u + g_v).
BallPoint coadd(const BallPoint& u, const BallPoint& v);

/// Order-three coaddition; symmetric in its arguments.
BallPoint coadd3(const BallPoint& u, const BallPoint& v, const BallPoint& w);

/// Order-k coaddition 2 (x) (sum g_i v_i)/(2 + sum (g_i - 1)); k = 1 returns v.
/// For k >= 3 the result can fall outside the ball; that throws BoundaryOrOutside.
BallPoint coadd_k(std::span<const BallPoint> vs);

}  // namespace gyro::einstein
