#pragma once

#include <array>
#include <span>
#include <vector>

#include "gyro/ball.hpp"
#include "gyro/model.hpp"

namespace gyro {

/// The gyroline t -> A (+) ((-A) (+) B) (x) t through two distinct points.
class Gyroline {
 public:
  /// Throws DegenerateInput when |(-A) (+) B| <= abs_tol * c.
  Gyroline(const GyroModel& model, BallPoint a, BallPoint b, const TolerancePolicy& policy = {});

  const GyroModel& model() const noexcept { return model_; }
  const BallPoint& a() const noexcept { return a_; }
  const BallPoint& b() const noexcept { return b_; }
  /// (-A) (+) B.
  const BallPoint& direction() const noexcept { return dir_; }

  BallPoint point(double t) const;

 private:
  GyroModel model_;
  BallPoint a_;
  BallPoint b_;
  BallPoint dir_;
};

/// A (+) ((-A) (+) B) (x) t, with no distinctness requirement.
BallPoint gyroline_point(const GyroModel& model, const BallPoint& a, const BallPoint& b, double t);

/// |(-A) (+) B|.
double gyrodistance(const GyroModel& model, const BallPoint& a, const BallPoint& b);

struct TriangleReport {
  /// d(A, B)
  double lhs;
  /// d(A, P) (+) d(P, B) in the one-dimensional model addition.
  double rhs;
  bool inequality_holds;
  /// P lies on the gyrosegment AB.
  bool is_equality;
};

TriangleReport check_gyrotriangle(const GyroModel& model, const BallPoint& a, const BallPoint& b,
                                  const BallPoint& p, const TolerancePolicy& policy = {});

struct MidpointReport {
  /// A (+) ((-A) (+) B) (x) 1/2
  BallPoint point;
  /// Largest pairwise distance between the available forms.
  double form_disagreement;
  /// |d(M, A) - d(M, B)|
  double equidistance;
};

/// Computes the gyromidpoint in every available form: the gyroline form,
/// 1/2 (x) (A [+] B), and, for the Einstein model, the gamma-weighted average.
MidpointReport gyromidpoint(const GyroModel& model, const BallPoint& a, const BallPoint& b);

/// Gamma-weighted average (g_A A + g_B B)/(g_A + g_B); an Einstein midpoint.
BallPoint einstein_midpoint_gamma_form(const BallPoint& a, const BallPoint& b);

struct Gyroparallelogram {
  BallPoint a, b, c, d;
  /// |1/2 (x) (A [+] D) (-) 1/2 (x) (B [+] C)|
  double diagonal_residual;
  /// |((-A) (+) B) [+] ((-A) (+) C) (-) ((-A) (+) D)|
  double addition_law_residual;
};

/// D = (B [+] C) (-) A. Throws CollinearInput when C lies on the gyroline AB
/// (or two of the points coincide).
Gyroparallelogram gyroparallelogram_fourth(const GyroModel& model, const BallPoint& a,
                                           const BallPoint& b, const BallPoint& c,
                                           const TolerancePolicy& policy = {});

struct DoubleGyrolinePoint {
  /// 2 (x) L(t)
  BallPoint point;
  /// |2 (x) L(t) (-) (A [+] L(2t))|
  double theorem_residual;
};

/// Mobius only; throws WrongModel otherwise.
DoubleGyrolinePoint double_gyroline(const Gyroline& line, double t);

/// The Euclidean line through A and B written with Mobius operations:
/// 1/2A [+] {1/2A (+) [(-1/2A) (+) (B (-) 1/2A)] (x) t}. Throws WrongModel for
/// Einstein and DegenerateInput when A = B.
BallPoint mobius_straight_line(const GyroModel& model, const BallPoint& a, const BallPoint& b,
                               double t, const TolerancePolicy& policy = {});

struct SupportingChord {
  BallPoint p1;  // 2 (x) C
  BallPoint p2;  // 2 (x) D
  BallPoint p3;  // C [+] D
  double collinearity;
};

SupportingChord supporting_chord_points(const GyroModel& model, const BallPoint& c,
                                        const BallPoint& d, const TolerancePolicy& policy = {});

struct Endpoints {
  /// Endpoint on the A1 side: A1 (-) g a/sqrt(g^2 - 1).
  Vector e1;
  /// A1 (+) g a/sqrt(g^2 - 1).
  Vector e2;
};

/// Boundary endpoints of the gyroline through A1 and A2. Throws
/// DegenerateInput for coincident points and NumericallyAtBoundary when
/// either point is beyond boundary_margin * c.
Endpoints gyroline_endpoints(const GyroModel& model, const BallPoint& a1, const BallPoint& a2,
                             const TolerancePolicy& policy = {});

/// The same endpoints from the gyrobarycentric quotient with weights
/// (g12 +- sqrt(g12^2 - 1) : -1). Mobius input is evaluated on the doubled
/// Einstein points, which share the endpoints.
Endpoints gyroline_endpoints_quotient(const GyroModel& model, const BallPoint& a1,
                                      const BallPoint& a2, const TolerancePolicy& policy = {});

struct LineElement {
  double ds2_formula;
  double ds2_numeric;
  double relative_difference() const;
};

/// Einstein line element at x in direction dx (unit) with step h. Throws
/// StepTooLarge when h > 1e-4 c.
LineElement riemannian_line_element(const BallPoint& x, const Vector& dx, double h);

struct RayReport {
  std::vector<double> ts;
  /// max entry of gyr[(-A) (+) B, P(t)] - gyr[-A, B] per t.
  std::vector<double> residuals;
  /// The two proven cases P(0) = A and P(1) = A (+) Q.
  double proven_p0;
  double proven_p1;
  double max_residual() const;
};

/// Numerical evidence for gyr[(-A) (+) B, P(t)] = gyr[-A, B] along the
/// Mobius straight ray P. Throws NegativeParameter for t < 0.
RayReport ray_gyration_residual(const GyroModel& model, const BallPoint& a, const BallPoint& b,
                                std::span<const double> ts, const TolerancePolicy& policy = {});

/// |P(t) (-) 1/2 (x) (P(0) [+] P(2t))| on a Mobius gyroline.
double midpoint_doubling_check(const Gyroline& line, double t);

struct Circle {
  Vector center;
  double radius;
  /// |center|^2 - r^2, the power of the origin, as fitted.
  double power;
};

/// Algebraic least-squares circle through planar points (n = 2, at least 3).
Circle fit_circle(std::span<const Vector> points);

/// |r^2 + c^2 - |center|^2| / c^2: zero when the circle meets the boundary
/// of the c-disc at right angles.
double orthogonality_residual(const Circle& circle, double c);

}  // namespace gyro
