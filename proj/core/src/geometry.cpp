#include "gyro/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "gyro/einstein.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/linear.hpp"

namespace gyro {

namespace {

// Threshold on sigma_2/sigma_1 below which difference vectors count as parallel.
constexpr double kCollinearRatio = 1e-9;

void require_mobius(const GyroModel& model, const char* what) {
  if (model.tag() != ModelTag::Mobius) {
    throw Error(ErrorCode::WrongModel, std::string(what) + " is defined for the Mobius model");
  }
}

void require_distinct(const GyroModel& model, const BallPoint& a, const BallPoint& b,
                      const TolerancePolicy& policy) {
  if (model.add(-a, b).norm() <= policy.abs_tol * a.radius()) {
    throw Error(ErrorCode::DegenerateInput, "the two points coincide");
  }
}

void require_inside_margin(const BallPoint& p, const TolerancePolicy& policy) {
  if (p.norm() > policy.boundary_margin * p.radius()) {
    throw Error(ErrorCode::NumericallyAtBoundary,
                "point is within the boundary margin; endpoint formula is ill-conditioned");
  }
}

}  // namespace

Gyroline::Gyroline(const GyroModel& model, BallPoint a, BallPoint b, const TolerancePolicy& policy)
    : model_(model), a_(std::move(a)), b_(std::move(b)), dir_(model_.add(-a_, b_)) {
  if (dir_.norm() <= policy.abs_tol * a_.radius()) {
    throw Error(ErrorCode::DegenerateInput, "a gyroline needs two distinct points");
  }
}

BallPoint Gyroline::point(double t) const {
  return model_.add(a_, model_.scalar_mul(t, dir_));
}

BallPoint gyroline_point(const GyroModel& model, const BallPoint& a, const BallPoint& b, double t) {
  if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "line parameter must be finite");
  return model.add(a, model.scalar_mul(t, model.add(-a, b)));
}

double gyrodistance(const GyroModel& model, const BallPoint& a, const BallPoint& b) {
  return model.add(-a, b).norm();
}

TriangleReport check_gyrotriangle(const GyroModel& model, const BallPoint& a, const BallPoint& b,
                                  const BallPoint& p, const TolerancePolicy& policy) {
  const double c = a.radius();
  TriangleReport r{};
  r.lhs = gyrodistance(model, a, b);
  r.rhs = model.add_1d(gyrodistance(model, a, p), gyrodistance(model, p, b));
  r.inequality_holds = r.lhs <= r.rhs + policy.abs_tol * c;

  // Betweenness is read off the Einstein chord; Mobius points are moved there first.
  const bool mob = model.tag() == ModelTag::Mobius;
  const Vector ae = (mob ? m_to_e(a) : a).coords();
  const Vector be = (mob ? m_to_e(b) : b).coords();
  const Vector pe = (mob ? m_to_e(p) : p).coords();
  const Vector ab = be - ae;
  const double len_sq = ab.squaredNorm();
  if (len_sq <= policy.abs_tol * policy.abs_tol * c * c) {
    r.is_equality = (pe - ae).norm() <= policy.rel_tol * c;
    return r;
  }
  const double t = (pe - ae).dot(ab) / len_sq;
  const double off_line = (pe - ae - t * ab).norm();
  const double slack = policy.rel_tol;
  r.is_equality = off_line <= policy.rel_tol * c && t >= -slack && t <= 1.0 + slack;
  return r;
}

BallPoint einstein_midpoint_gamma_form(const BallPoint& a, const BallPoint& b) {
  require_same_context(a, b);
  const double ga = gamma_factor(a);
  const double gb = gamma_factor(b);
  return BallPoint::from_result(a.params(), (ga * a.coords() + gb * b.coords()) / (ga + gb));
}

MidpointReport gyromidpoint(const GyroModel& model, const BallPoint& a, const BallPoint& b) {
  std::vector<BallPoint> forms;
  forms.push_back(gyroline_point(model, a, b, 0.5));
  forms.push_back(model.scalar_mul(0.5, model.coadd_closed(a, b)));
  if (model.tag() == ModelTag::Einstein) forms.push_back(einstein_midpoint_gamma_form(a, b));

  double disagreement = 0.0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      disagreement = std::max(disagreement, model.subtract(forms[i], forms[j]).norm());
    }
  }
  const BallPoint& m = forms.front();
  const double equi = std::abs(gyrodistance(model, m, a) - gyrodistance(model, m, b));
  return {m, disagreement, equi};
}

Gyroparallelogram gyroparallelogram_fourth(const GyroModel& model, const BallPoint& a,
                                           const BallPoint& b, const BallPoint& c,
                                           const TolerancePolicy& policy) {
  const BallPoint ab = model.add(-a, b);
  const BallPoint ac = model.add(-a, c);
  const double floor = policy.abs_tol * a.radius();
  const std::vector<Vector> dirs{ab.coords(), ac.coords()};
  if (ab.norm() <= floor || ac.norm() <= floor ||
      singular_value_ratio(stack_columns(dirs)) < kCollinearRatio) {
    throw Error(ErrorCode::CollinearInput, "C lies on the gyroline through A and B");
  }
  const BallPoint bc = model.coadd_closed(b, c);
  BallPoint d = model.subtract(bc, a);

  const double diag = model
                          .subtract(model.scalar_mul(0.5, model.coadd_closed(a, d)),
                                    model.scalar_mul(0.5, bc))
                          .norm();
  const double law = model.subtract(model.coadd_closed(ab, ac), model.add(-a, d)).norm();
  return {a, b, c, std::move(d), diag, law};
}

DoubleGyrolinePoint double_gyroline(const Gyroline& line, double t) {
  const GyroModel& model = line.model();
  require_mobius(model, "the double-gyroline theorem");
  BallPoint doubled = model.scalar_mul(2.0, line.point(t));
  const BallPoint rhs = model.coadd_closed(line.a(), line.point(2.0 * t));
  const double residual = model.subtract(doubled, rhs).norm();
  return {std::move(doubled), residual};
}

BallPoint mobius_straight_line(const GyroModel& model, const BallPoint& a, const BallPoint& b,
                               double t, const TolerancePolicy& policy) {
  require_mobius(model, "the straight-line formula");
  require_distinct(model, a, b, policy);
  const BallPoint half = model.scalar_mul(0.5, a);
  const BallPoint inner = gyroline_point(model, half, model.subtract(b, half), t);
  return model.coadd_closed(half, inner);
}

SupportingChord supporting_chord_points(const GyroModel& model, const BallPoint& c,
                                        const BallPoint& d, const TolerancePolicy& policy) {
  require_mobius(model, "the supporting chord");
  require_distinct(model, c, d, policy);
  SupportingChord s{model.scalar_mul(2.0, c), model.scalar_mul(2.0, d), model.coadd_closed(c, d),
                    0.0};
  const std::vector<Vector> pts{s.p1.coords(), s.p2.coords(), s.p3.coords()};
  s.collinearity = collinearity_residual(pts);
  return s;
}

Endpoints gyroline_endpoints(const GyroModel& model, const BallPoint& a1, const BallPoint& a2,
                             const TolerancePolicy& policy) {
  require_inside_margin(a1, policy);
  require_inside_margin(a2, policy);
  const BallPoint a12 = model.add(-a1, a2);
  const double norm = a12.norm();
  if (norm <= policy.abs_tol * a1.radius()) {
    throw Error(ErrorCode::DegenerateInput, "endpoints need two distinct points");
  }
  // g a / sqrt(g^2 - 1) = c a / |a|, since sqrt(g^2 - 1) = g |a| / c.
  const Vector w = a1.radius() * a12.coords() / norm;
  return {model.add_ambient(a1, -w), model.add_ambient(a1, w)};
}

Endpoints gyroline_endpoints_quotient(const GyroModel& model, const BallPoint& a1,
                                      const BallPoint& a2, const TolerancePolicy& policy) {
  require_inside_margin(a1, policy);
  require_inside_margin(a2, policy);
  const bool mob = model.tag() == ModelTag::Mobius;
  const BallPoint p1 = mob ? m_to_e(a1) : a1;
  const BallPoint p2 = mob ? m_to_e(a2) : a2;
  const BallPoint a12 = einstein::add(-p1, p2);
  if (a12.norm() <= policy.abs_tol * a1.radius()) {
    throw Error(ErrorCode::DegenerateInput, "endpoints need two distinct points");
  }
  const double g12 = gamma_factor(a12);
  const double root = g12 * a12.norm() / a1.radius();
  const double m_plus = g12 + root;
  const double m_minus = 1.0 / m_plus;
  const double g1 = gamma_factor(p1);
  const double g2 = gamma_factor(p2);
  const auto quotient = [&](double m) -> Vector {
    return (m * g1 * p1.coords() - g2 * p2.coords()) / (m * g1 - g2);
  };
  return {quotient(m_plus), quotient(m_minus)};
}

double LineElement::relative_difference() const {
  return std::abs(ds2_numeric - ds2_formula) / ds2_formula;
}

LineElement riemannian_line_element(const BallPoint& x, const Vector& dx, double h) {
  const double c = x.radius();
  if (dx.size() != x.dim()) throw Error(ErrorCode::DimensionMismatch, "direction has wrong length");
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  if (h > 1e-4 * c) throw Error(ErrorCode::StepTooLarge, "step must not exceed 1e-4 c");
  const double c_sq = c * c;
  const double denom = c_sq - x.squared_norm();
  const double xdx = x.coords().dot(h * dx);
  LineElement le{};
  le.ds2_formula = c_sq / denom * h * h * dx.squaredNorm() + c_sq / (denom * denom) * xdx * xdx;
  const Vector moved = x.coords() + h * dx;
  le.ds2_numeric = einstein::add(moved, -x.coords(), c).squaredNorm();
  return le;
}

double RayReport::max_residual() const {
  double m = std::max(proven_p0, proven_p1);
  for (double r : residuals) m = std::max(m, r);
  return m;
}

RayReport ray_gyration_residual(const GyroModel& model, const BallPoint& a, const BallPoint& b,
                                std::span<const double> ts, const TolerancePolicy& policy) {
  require_mobius(model, "the ray-gyration check");
  require_distinct(model, a, b, policy);
  for (double t : ts) {
    if (!(t >= 0.0)) throw Error(ErrorCode::NegativeParameter, "ray parameters must be >= 0");
  }
  const BallPoint q = model.add(-a, b);
  const Matrix reference = model.gyration(-a, b).coeffs();

  RayReport r;
  r.ts.assign(ts.begin(), ts.end());
  for (double t : ts) {
    const BallPoint p = mobius_straight_line(model, a, b, t, policy);
    r.residuals.push_back(max_entry_diff(model.gyration(q, p).coeffs(), reference));
  }
  r.proven_p0 = max_entry_diff(model.gyration(q, a).coeffs(), reference);
  r.proven_p1 = max_entry_diff(model.gyration(q, model.add(a, q)).coeffs(), reference);
  return r;
}

double midpoint_doubling_check(const Gyroline& line, double t) {
  const GyroModel& model = line.model();
  const BallPoint mid =
      model.scalar_mul(0.5, model.coadd_closed(line.point(0.0), line.point(2.0 * t)));
  return model.subtract(line.point(t), mid).norm();
}

Circle fit_circle(std::span<const Vector> points) {
  if (points.size() < 3) throw Error(ErrorCode::InvalidArgument, "circle fit needs 3 points");
  const auto m = static_cast<Eigen::Index>(points.size());
  Matrix design(m, 3);
  Vector rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vector& p = points[static_cast<std::size_t>(i)];
    if (p.size() != 2) throw Error(ErrorCode::DimensionMismatch, "circle fit is planar");
    design(i, 0) = p[0];
    design(i, 1) = p[1];
    design(i, 2) = 1.0;
    rhs[i] = -p.squaredNorm();
  }
  // x^2 + y^2 + D x + E y + F = 0
  const Vector sol = design.colPivHouseholderQr().solve(rhs);
  Circle circle;
  circle.center = Vector(2);
  circle.center << -0.5 * sol[0], -0.5 * sol[1];
  circle.power = sol[2];
  circle.radius = std::sqrt(std::max(0.0, circle.center.squaredNorm() - sol[2]));
  return circle;
}

double orthogonality_residual(const Circle& circle, double c) {
  // r^2 + c^2 - |center|^2 = c^2 - F, with F taken straight from the fit.
  return std::abs(c * c - circle.power) / (c * c);
}

}  // namespace gyro
