#include "gyro/checks.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "gyro/barycentric.hpp"
#include "gyro/einstein.hpp"
#include "gyro/geometry.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/linear.hpp"
#include "gyro/testing/broken_model.hpp"

namespace gyro {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Thrown from a residual lambda when the sample lies outside the domain of
// the operation under test.
struct OutOfDomain {};

// Runs one property over all samples; exceptions count as failures.
class Check {
 public:
  Check(std::string name, double tolerance) {
    report_.name = std::move(name);
    report_.tolerance = tolerance;
    report_.max_residual = 0.0;
  }

  void record(const std::function<double()>& residual, std::vector<BallPoint> inputs) {
    ++report_.samples;
    double r;
    try {
      r = residual();
      if (std::isnan(r)) r = kInf;
    } catch (const Error&) {
      ++report_.errors;
      r = kInf;
    } catch (const OutOfDomain&) {
      ++report_.skipped;
      return;
    }
    if (r > report_.max_residual || report_.worst_inputs.empty()) {
      report_.max_residual = std::max(report_.max_residual, r);
      report_.worst_inputs = std::move(inputs);
    }
  }

  IdentityReport finish() {
    report_.passed = report_.errors == 0 && report_.max_residual < report_.tolerance;
    return std::move(report_);
  }

 private:
  IdentityReport report_;
};

std::vector<double> t_grid(double lo, double hi, int count) {
  std::vector<double> ts;
  for (int i = 0; i < count; ++i) ts.push_back(lo + (hi - lo) * i / (count - 1));
  return ts;
}

// A coordinate rounding step near the boundary is already about gamma^2 eps in
// the gyronorm, so gaps between two computed points are compared after
// dividing that factor back out.
double resolved(double gap, const BallPoint& p, const BallPoint& q) {
  const double g = std::max(gamma_factor(p), gamma_factor(q));
  return gap / (g * g);
}

}  // namespace

std::vector<IdentityReport> geometry_checks(const GyroModel& model, const SuiteOptions& options) {
  const BallParams& params = model.params();
  const double c = params.radius();
  const double tol = 100.0 * options.policy.rel_tol;
  const TolerancePolicy& policy = options.policy;
  const bool mobius = model.tag() == ModelTag::Mobius;
  const GyroModel einstein_model(ModelTag::Einstein, params);

  Check mid_forms("midpoint-forms", tol * c);
  Check mid_equi("midpoint-equidistance", tol * c);
  Check para_diag("parallelogram-diagonals", tol * c);
  Check para_law("parallelogram-addition-law", tol * c);
  Check tri_eq("gyrotriangle-equality", tol * c);
  Check tri_ineq("gyrotriangle-inequality", tol * c);
  Check dist_sym("distance-symmetry", tol * c);
  Check end_norm("endpoint-norm", tol * c);
  Check end_forms("endpoint-forms", tol * c);
  Check end_col("endpoint-collinearity", tol);
  Check dbl("double-gyroline", tol * c);
  Check dbl_chord("double-gyroline-chord", tol);
  Check chord("supporting-chord", tol);
  Check straight_ends("straight-line-through", tol * c);
  Check straight_col("straight-line-collinearity", tol);
  Check end_coinc("endpoint-coincidence", tol * c);
  Check doubling("midpoint-doubling", tol * c);
  Check circle("boundary-orthogonality", 1e-6);
  Check line_elem("line-element", 1e-3);

  BallSampler sampler(params, options.seed, options.radius_cap);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const BallPoint a = sampler.next();
    const BallPoint b = sampler.next();
    const BallPoint p = sampler.next();
    const double t = sampler.uniform(0.0, 1.0);
    const double s = sampler.uniform(-1.0, 2.0);

    mid_forms.record([&] { return gyromidpoint(model, a, b).form_disagreement; }, {a, b});
    mid_equi.record([&] { return gyromidpoint(model, a, b).equidistance; }, {a, b});
    para_diag.record(
        [&] { return gyroparallelogram_fourth(model, a, b, p, policy).diagonal_residual; },
        {a, b, p});
    para_law.record(
        [&] { return gyroparallelogram_fourth(model, a, b, p, policy).addition_law_residual; },
        {a, b, p});
    tri_eq.record(
        [&] {
          const TriangleReport r =
              check_gyrotriangle(model, a, b, gyroline_point(model, a, b, t), policy);
          return r.is_equality ? std::abs(r.lhs - r.rhs) : kInf;
        },
        {a, b});
    tri_ineq.record(
        [&] {
          const TriangleReport r = check_gyrotriangle(model, a, b, p, policy);
          return r.inequality_holds ? 0.0 : r.lhs - r.rhs;
        },
        {a, b, p});
    dist_sym.record(
        [&] { return std::abs(gyrodistance(model, a, b) - gyrodistance(model, b, a)); }, {a, b});
    end_norm.record(
        [&] {
          const Endpoints e = gyroline_endpoints(model, a, b, policy);
          return std::max(std::abs(e.e1.norm() - c), std::abs(e.e2.norm() - c));
        },
        {a, b});
    end_forms.record(
        [&] {
          const Endpoints e = gyroline_endpoints(model, a, b, policy);
          const Endpoints q = gyroline_endpoints_quotient(model, a, b, policy);
          return std::max((e.e1 - q.e1).norm(), (e.e2 - q.e2).norm());
        },
        {a, b});

    if (!mobius) {
      end_col.record(
          [&] {
            const Endpoints e = gyroline_endpoints(model, a, b, policy);
            const std::vector<Vector> pts{e.e1, e.e2, a.coords(), b.coords()};
            return collinearity_residual(pts);
          },
          {a, b});
      line_elem.record(
          [&] {
            Vector dx = sampler.next().coords();
            if (dx.norm() == 0.0) dx = Vector::Unit(params.dim(), 0);
            return riemannian_line_element(a, dx.normalized(), 1e-5 * c).relative_difference();
          },
          {a});
      continue;
    }

    const Gyroline line(model, a, b, policy);
    dbl.record(
        [&] {
          const DoubleGyrolinePoint d = double_gyroline(line, s);
          return resolved(d.theorem_residual, d.point, d.point);
        },
        {a, b});
    dbl_chord.record(
        [&] {
          const Endpoints e = gyroline_endpoints(model, a, b, policy);
          std::vector<Vector> pts{e.e1, e.e2};
          for (double u : {-0.5, 0.0, 0.4, 1.0, 1.7}) pts.push_back(double_gyroline(line, u).point.coords());
          return collinearity_residual(pts);
        },
        {a, b});
    chord.record([&] { return supporting_chord_points(model, a, b, policy).collinearity; }, {a, b});
    straight_ends.record(
        [&] {
          const double r0 = model.subtract(mobius_straight_line(model, a, b, 0.0, policy), a).norm();
          const double r1 = model.subtract(mobius_straight_line(model, a, b, 1.0, policy), b).norm();
          return std::max(r0, r1);
        },
        {a, b});
    straight_col.record(
        [&] {
          std::vector<Vector> pts{a.coords(), b.coords()};
          for (double u : {-0.3, 0.25, 0.6, 1.4, 2.0}) {
            pts.push_back(mobius_straight_line(model, a, b, u, policy).coords());
          }
          return collinearity_residual(pts);
        },
        {a, b});
    end_coinc.record(
        [&] {
          const Endpoints m = gyroline_endpoints(model, a, b, policy);
          const Endpoints e = gyroline_endpoints(einstein_model, m_to_e(a), m_to_e(b), policy);
          return std::max((m.e1 - e.e1).norm(), (m.e2 - e.e2).norm());
        },
        {a, b});
    doubling.record([&] { return midpoint_doubling_check(line, s); }, {a, b});
    if (params.dim() == 2) {
      circle.record(
          [&] {
            std::vector<Vector> pts;
            for (double u : t_grid(-1.0, 2.0, 9)) pts.push_back(line.point(u).coords());
            // Gyrolines through the origin are diameters; no circle to fit.
            if (collinearity_residual(pts) < 1e-6) return 0.0;
            return orthogonality_residual(fit_circle(pts), c);
          },
          {a, b});
    }
  }

  std::vector<IdentityReport> out;
  for (Check* ch : {&mid_forms, &mid_equi, &para_diag, &para_law, &tri_eq, &tri_ineq, &dist_sym,
                    &end_norm, &end_forms}) {
    out.push_back(ch->finish());
  }
  if (!mobius) {
    out.push_back(end_col.finish());
    out.push_back(line_elem.finish());
  } else {
    for (Check* ch : {&dbl, &dbl_chord, &chord, &straight_ends, &straight_col, &end_coinc,
                      &doubling}) {
      out.push_back(ch->finish());
    }
    if (params.dim() == 2) out.push_back(circle.finish());
  }
  return out;
}

std::vector<IdentityReport> barycentric_checks(const BallParams& params,
                                               const SuiteOptions& options) {
  const double c = params.radius();
  const double tol = 10.0 * options.policy.rel_tol;
  const TolerancePolicy& policy = options.policy;
  const GyroModel model(ModelTag::Einstein, params);

  Check cov_t("covariance-translation", tol);
  Check cov_r("covariance-rotation", tol);
  Check m0_zero("boundary-m0", tol);
  Check vieta("boundary-vieta", tol);
  Check pipeline("endpoint-pipeline", tol * c);
  Check homog("homogeneity", tol);
  Check gamma_p("gamma-consistency", tol);

  BallSampler sampler(params, options.seed, options.radius_cap);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const std::size_t count = 2 + i % 3;
    std::vector<BallPoint> anchors;
    std::vector<double> weights;
    for (std::size_t k = 0; k < count; ++k) {
      anchors.push_back(sampler.next());
      weights.push_back(sampler.uniform(0.1, 1.0));
    }
    const BallPoint x = sampler.next();
    const Matrix r = sampler.rotation();
    const double lambda = sampler.uniform(0.2, 5.0);

    cov_t.record(
        [&] {
          const CovarianceReport rep = gyro_covariance_check(anchors, weights, x, r, policy);
          return *std::max_element(rep.translation.begin(), rep.translation.end());
        },
        anchors);
    cov_r.record(
        [&] {
          const CovarianceReport rep = gyro_covariance_check(anchors, weights, x, r, policy);
          return *std::max_element(rep.rotation.begin(), rep.rotation.end());
        },
        anchors);

    const BallPoint& a1 = anchors[0];
    const BallPoint& a2 = anchors[1];
    const std::vector<BallPoint> pair{a1, a2};
    m0_zero.record(
        [&] {
          const BoundaryWeights bw = boundary_weight_solve(a1, a2, policy);
          double worst = 0.0;
          for (double m : {bw.m_plus, bw.m_minus}) {
            const std::vector<double> w{m, -1.0};
            const double scale = (std::abs(m) + 1.0) * (std::abs(m) + 1.0);
            worst = std::max(worst, std::abs(gyro_constant_m0(pair, w).m0_squared) / scale);
          }
          return worst;
        },
        pair);
    vieta.record(
        [&] {
          const BoundaryWeights bw = boundary_weight_solve(a1, a2, policy);
          const double g = gamma_factor(einstein::add(-a1, a2));
          return std::max(std::abs(bw.m_plus * bw.m_minus - 1.0),
                          std::abs(bw.m_plus + bw.m_minus - 2.0 * g) / (2.0 * g));
        },
        pair);
    pipeline.record(
        [&] {
          const BoundaryWeights bw = boundary_weight_solve(a1, a2, policy);
          const Endpoints e = gyroline_endpoints(model, a1, a2, policy);
          double worst = 0.0;
          for (auto [m, target] : {std::pair{bw.m_plus, e.e1}, std::pair{bw.m_minus, e.e2}}) {
            std::vector<double> w{m, -1.0};
            // Homogeneity lets the sign be flipped to make sum m g positive.
            if (m * gamma_factor(a1) - gamma_factor(a2) < 0.0) w = {-m, 1.0};
            const GyroEvaluation ev = gyro_eval(pair, w, policy);
            if (ev.point_class != PointClass::OnBoundary) return kInf;
            worst = std::max(worst, (ev.point - target).norm());
          }
          return worst;
        },
        pair);
    homog.record(
        [&] {
          std::vector<double> scaled = weights;
          for (double& w : scaled) w *= lambda;
          const GyroEvaluation e1 = gyro_eval(anchors, weights, policy);
          const GyroEvaluation e2 = gyro_eval(anchors, scaled, policy);
          return std::max((e1.point - e2.point).norm() / c,
                          std::abs(*e2.constant.m0 - lambda * *e1.constant.m0) /
                              (lambda * *e1.constant.m0));
        },
        anchors);
    gamma_p.record(
        [&] {
          const GyroEvaluation ev = gyro_eval(anchors, weights, policy);
          const double g = gamma_factor(ev.point, c);
          return std::abs(*ev.gamma - g) / g;
        },
        anchors);
  }

  std::vector<IdentityReport> out;
  for (Check* ch : {&cov_t, &cov_r, &m0_zero, &vieta, &pipeline, &homog, &gamma_p}) {
    out.push_back(ch->finish());
  }
  return out;
}

std::vector<IdentityReport> isomorphism_checks(const BallParams& params,
                                               const SuiteOptions& options) {
  const double c = params.radius();
  const double tol = 10.0 * options.policy.rel_tol;
  const TolerancePolicy& policy = options.policy;
  const GyroModel ein(ModelTag::Einstein, params);
  const GyroModel mob(ModelTag::Mobius, params);

  Check round("round-trip", tol * c);
  Check add_e("transport-add-einstein", tol * c);
  Check add_m("transport-add-mobius", tol * c);
  Check coadd("transport-coadd", tol * c);
  Check coadd_k("transport-coadd-k", tol * c);
  Check gammas("gamma-relations", tol);
  Check invariant("invariant-expression", tol * c);
  Check gyr("gyration-transport", tol * c);
  Check line("gyroline-transport", tol * c);

  BallSampler sampler(params, options.seed, options.radius_cap);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const BallPoint a = sampler.next();
    const BallPoint b = sampler.next();
    const BallPoint w = sampler.next();
    const double t = sampler.uniform(-1.0, 2.0);
    const std::size_t k = 2 + i % 6;
    std::vector<SidedPoint> many;
    for (std::size_t j = 0; j < k; ++j) many.push_back({Side::Mobius, sampler.next()});

    round.record(
        [&] {
          return std::max((e_to_m(m_to_e(a)).coords() - a.coords()).norm(),
                          (m_to_e(e_to_m(a)).coords() - a.coords()).norm());
        },
        {a});
    add_e.record(
        [&] {
          const std::vector<SidedPoint> args{{Side::Einstein, a}, {Side::Einstein, b}};
          return transport_op(TransportOp::Add, args).residual;
        },
        {a, b});
    add_m.record(
        [&] {
          const std::vector<SidedPoint> args{{Side::Mobius, a}, {Side::Mobius, b}};
          return transport_op(TransportOp::Add, args).residual;
        },
        {a, b});
    coadd.record(
        [&] {
          const std::vector<SidedPoint> me{{Side::Mobius, a}, {Side::Mobius, b}};
          const std::vector<SidedPoint> ee{{Side::Einstein, a}, {Side::Einstein, b}};
          return std::max(transport_op(TransportOp::Coadd, me).residual,
                          transport_op(TransportOp::Coadd, ee).residual);
        },
        {a, b});
    coadd_k.record(
        [&] {
          std::vector<BallPoint> pts;
          for (const SidedPoint& sp : many) pts.push_back(sp.point);
          try {
            (void)mob.coadd_k(pts);
          } catch (const Error& e) {
            if (e.code() == ErrorCode::BoundaryOrOutside) throw OutOfDomain{};
            throw;
          }
          const TransportResult r = transport_op(TransportOp::CoaddK, many);
          return resolved(r.residual, r.direct.point, r.transported.point);
        },
        {a});
    gammas.record([&] { return gamma_relations(a, b).max(); }, {a, b});
    invariant.record(
        [&] {
          const Vector vm = invariant_expression(Side::Mobius, a, b, policy);
          const Vector ve = invariant_expression(Side::Einstein, m_to_e(a), m_to_e(b), policy);
          return (vm - ve).norm();
        },
        {a, b});
    gyr.record(
        [&] {
          const BallPoint lhs = ein.gyration(m_to_e(a), m_to_e(b)).apply(m_to_e(w));
          const BallPoint rhs = m_to_e(mob.gyration(a, b).apply(w));
          return ein.subtract(lhs, rhs).norm();
        },
        {a, b, w});
    line.record(
        [&] {
          const BallPoint pm = gyroline_point(mob, a, b, t);
          const BallPoint pe = gyroline_point(ein, m_to_e(a), m_to_e(b), t);
          return resolved(ein.subtract(m_to_e(pm), pe).norm(), m_to_e(pm), pe);
        },
        {a, b});
  }

  std::vector<IdentityReport> out;
  for (Check* ch : {&round, &add_e, &add_m, &coadd, &coadd_k, &gammas, &invariant, &gyr, &line}) {
    out.push_back(ch->finish());
  }
  return out;
}

std::vector<IdentityReport> run_check_suite(const GyroModel& model, std::string_view selector,
                                            const SuiteOptions& options) {
  if (selector == "geometry") return geometry_checks(model, options);
  if (selector == "barycentric") return barycentric_checks(model.params(), options);
  if (selector == "isomorphism") return isomorphism_checks(model.params(), options);
  if (selector == "broken-model") {
    const testing::BrokenModel broken(model.params());
    return verify_identity_suite(broken, "gyrogroup", options);
  }
  std::vector<IdentityReport> out = verify_identity_suite(model, selector, options);
  if (selector == "all") {
    for (auto&& part : {geometry_checks(model, options), barycentric_checks(model.params(), options),
                        isomorphism_checks(model.params(), options)}) {
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

}  // namespace gyro
