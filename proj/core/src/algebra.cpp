#include "gyro/algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <thread>

namespace gyro {

BallPoint gyr_definitional(const OperationTable& ops, const BallPoint& u, const BallPoint& v,
                           const BallPoint& w) {
  require_same_context(u, v);
  require_same_context(u, w);
  return ops.add(ops.negate(ops.add(u, v)), ops.add(u, ops.add(v, w)));
}

GyrationMap gyration_definitional(const OperationTable& ops, const BallPoint& u,
                                  const BallPoint& v) {
  require_same_context(u, v);
  const BallParams& params = u.params();
  const int n = params.dim();
  const double scale = 0.5 * params.radius();
  Matrix coeffs(n, n);
  for (int j = 0; j < n; ++j) {
    const BallPoint basis(params, Vector::Unit(n, j) * scale);
    coeffs.col(j) = gyr_definitional(ops, u, v, basis).coords() / scale;
  }
  return GyrationMap(std::move(coeffs), u, v);
}

BallPoint coadd_definitional(const OperationTable& ops, const BallPoint& a, const BallPoint& b) {
  return ops.add(a, gyr_definitional(ops, a, ops.negate(b), b));
}

BallPoint cosub(const OperationTable& ops, const BallPoint& a, const BallPoint& b) {
  return ops.subtract(a, ops.gyration(a, b).apply(b));
}

BallPoint solve_left(const OperationTable& ops, const BallPoint& a, const BallPoint& b) {
  require_same_context(a, b);
  return ops.add(ops.negate(a), b);
}

BallPoint solve_right(const OperationTable& ops, const BallPoint& a, const BallPoint& b) {
  return cosub(ops, b, a);
}

namespace {

struct IdentityInfo {
  Identity id;
  std::string_view name;
  bool map_valued;
};

constexpr std::array<IdentityInfo, 23> kCatalog{{
    {Identity::LeftIdentity, "left-identity", false},
    {Identity::RightIdentity, "right-identity", false},
    {Identity::LeftInverse, "left-inverse", false},
    {Identity::LeftGyroassociativity, "left-gyroassociativity", false},
    {Identity::RightGyroassociativity, "right-gyroassociativity", false},
    {Identity::GyrationAutomorphism, "gyration-automorphism", false},
    {Identity::LeftLoop, "left-loop", true},
    {Identity::RightLoop, "right-loop", true},
    {Identity::Gyrocommutativity, "gyrocommutativity", false},
    {Identity::GyrationIsometry, "gyration-isometry", false},
    {Identity::GyrationInverse, "gyration-inverse", true},
    {Identity::TrivialGyration, "trivial-gyration", true},
    {Identity::AutomorphicInverse, "automorphic-inverse", false},
    {Identity::LeftCancellation, "left-cancellation", false},
    {Identity::RightCancellation, "right-cancellation", false},
    {Identity::DualRightCancellation, "dual-right-cancellation", false},
    {Identity::CoadditionDifference, "coaddition-difference", false},
    {Identity::CooperationIdentity, "cooperation-identity", false},
    {Identity::TwoSum, "two-sum", false},
    {Identity::CooperationCommutativity, "cooperation-commutativity", false},
    {Identity::ScalarDistributive, "scalar-distributive", false},
    {Identity::ScalarAssociative, "scalar-associative", false},
    {Identity::Monodistributive, "monodistributive", false},
}};

constexpr std::array<Identity, 23> kAll = [] {
  std::array<Identity, 23> ids{};
  for (std::size_t i = 0; i < kCatalog.size(); ++i) ids[i] = kCatalog[i].id;
  return ids;
}();

const IdentityInfo& info(Identity id) {
  return *std::find_if(kCatalog.begin(), kCatalog.end(),
                       [id](const IdentityInfo& e) { return e.id == id; });
}

struct Sample {
  std::array<BallPoint, 4> points;
  std::array<double, 3> scalars;
};

double point_residual(const OperationTable& ops, const BallPoint& lhs, const BallPoint& rhs) {
  return ops.subtract(lhs, rhs).norm();
}

double evaluate(const OperationTable& ops, Identity id, const Sample& s) {
  const BallPoint& a = s.points[0];
  const BallPoint& b = s.points[1];
  const BallPoint& c = s.points[2];
  const BallPoint& d = s.points[3];
  const double r1 = s.scalars[0];
  const double r2 = s.scalars[1];
  const double r3 = s.scalars[2];
  const BallPoint zero = BallPoint::zero(ops.params());
  const auto gyr = [&](const BallPoint& u, const BallPoint& v) { return ops.gyration(u, v); };
  const auto identity_matrix = Matrix::Identity(a.dim(), a.dim());

  switch (id) {
    case Identity::LeftIdentity:
      return point_residual(ops, ops.add(zero, a), a);
    case Identity::RightIdentity:
      return point_residual(ops, ops.add(a, zero), a);
    case Identity::LeftInverse:
      return ops.add(ops.negate(a), a).norm();
    case Identity::LeftGyroassociativity:
      return point_residual(ops, ops.add(a, ops.add(b, c)),
                            ops.add(ops.add(a, b), gyr(a, b).apply(c)));
    case Identity::RightGyroassociativity:
      return point_residual(ops, ops.add(ops.add(a, b), c),
                            ops.add(a, ops.add(b, gyr(b, a).apply(c))));
    case Identity::GyrationAutomorphism: {
      const GyrationMap g = gyr(a, b);
      return point_residual(ops, g.apply(ops.add(c, d)), ops.add(g.apply(c), g.apply(d)));
    }
    case Identity::LeftLoop:
      return max_entry_diff(gyr(ops.add(a, b), b).coeffs(), gyr(a, b).coeffs());
    case Identity::RightLoop:
      return max_entry_diff(gyr(a, ops.add(b, a)).coeffs(), gyr(a, b).coeffs());
    case Identity::Gyrocommutativity:
      return point_residual(ops, ops.add(a, b), gyr(a, b).apply(ops.add(b, a)));
    case Identity::GyrationIsometry: {
      const GyrationMap g = gyr(a, b);
      const Vector gc = g.apply(c.coords());
      const Vector gd = g.apply(d.coords());
      const double norm_defect = std::abs(gc.norm() - c.norm());
      const double dot_defect =
          std::abs(gc.dot(gd) - c.coords().dot(d.coords())) / ops.params().radius();
      return std::max(norm_defect, dot_defect);
    }
    case Identity::GyrationInverse:
      return max_entry_diff(gyr(b, a).compose(gyr(a, b)), identity_matrix);
    case Identity::TrivialGyration:
      return max_entry_diff(gyr(a, ops.negate(a)).coeffs(), identity_matrix);
    case Identity::AutomorphicInverse:
      return point_residual(ops, ops.negate(ops.add(a, b)),
                            ops.add(ops.negate(a), ops.negate(b)));
    case Identity::LeftCancellation:
      return point_residual(ops, ops.add(ops.negate(a), ops.add(a, b)), b);
    case Identity::RightCancellation: {
      // b [-] a = b (-) gyr[b, a] a
      const BallPoint diff = ops.subtract(b, gyr(b, a).apply(a));
      return point_residual(ops, ops.add(diff, a), b);
    }
    case Identity::DualRightCancellation:
      return point_residual(ops, ops.coadd(ops.subtract(b, a), a), b);
    case Identity::CoadditionDifference: {
      const BallPoint bc = ops.coadd(b, c);
      const BallPoint dd = ops.subtract(bc, a);
      return point_residual(ops, bc, ops.coadd(dd, a));
    }
    case Identity::CooperationIdentity:
      return point_residual(ops, ops.add(a, ops.add(b, a)), ops.coadd(a, ops.add(a, b)));
    case Identity::TwoSum:
      return point_residual(ops, ops.scalar_mul(2.0, ops.add(a, b)),
                            ops.add(a, ops.add(ops.scalar_mul(2.0, b), a)));
    case Identity::CooperationCommutativity:
      return point_residual(ops, ops.coadd(a, b), ops.coadd(b, a));
    case Identity::ScalarDistributive:
      return point_residual(ops, ops.scalar_mul(r1 + r2, a),
                            ops.add(ops.scalar_mul(r1, a), ops.scalar_mul(r2, a)));
    case Identity::ScalarAssociative:
      return point_residual(ops, ops.scalar_mul(r1 * r2, a),
                            ops.scalar_mul(r1, ops.scalar_mul(r2, a)));
    case Identity::Monodistributive:
      return point_residual(
          ops, ops.scalar_mul(r3, ops.add(ops.scalar_mul(r1, a), ops.scalar_mul(r2, a))),
          ops.add(ops.scalar_mul(r3, ops.scalar_mul(r1, a)),
                  ops.scalar_mul(r3, ops.scalar_mul(r2, a))));
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

std::string_view to_string(Identity id) noexcept { return info(id).name; }

std::span<const Identity> all_identities() { return kAll; }

std::vector<Identity> select_identities(std::string_view selector) {
  using enum Identity;
  if (selector == "all") return {kAll.begin(), kAll.end()};
  if (selector == "gyrogroup") {
    return {LeftIdentity,       RightIdentity, LeftInverse, LeftGyroassociativity,
            RightGyroassociativity, GyrationAutomorphism, LeftLoop, RightLoop,
            Gyrocommutativity,  GyrationInverse};
  }
  if (selector == "cancellation") {
    return {AutomorphicInverse, LeftCancellation, RightCancellation, DualRightCancellation};
  }
  if (selector == "cooperation") {
    return {CoadditionDifference, CooperationIdentity, CooperationCommutativity, TwoSum};
  }
  if (selector == "scalar") return {ScalarDistributive, ScalarAssociative, Monodistributive};
  for (const IdentityInfo& e : kCatalog) {
    if (e.name == selector) return {e.id};
  }
  throw Error(ErrorCode::UnknownIdentity, "no identity or group named '" + std::string(selector) + "'");
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

std::vector<IdentityReport> verify_identity_suite(const OperationTable& ops,
                                                  std::span<const Identity> identities,
                                                  const SuiteOptions& options) {
  if (options.samples < 1) {
    throw Error(ErrorCode::InvalidArgument, "identity suite needs at least one sample");
  }
  options.policy.validate();
  const BallParams& params = ops.params();

  BallSampler sampler(params, options.seed, options.radius_cap);
  std::vector<Sample> samples;
  samples.reserve(options.samples);
  for (std::size_t i = 0; i < options.samples; ++i) {
    Sample s{{sampler.next(), sampler.next(), sampler.next(), sampler.next()},
             {sampler.uniform(-1.5, 1.5), sampler.uniform(-1.5, 1.5), sampler.uniform(-1.5, 1.5)}};
    samples.push_back(std::move(s));
  }

  std::vector<Identity> selected;
  for (Identity id : identities) {
    if (id == Identity::CooperationCommutativity && !ops.gyrocommutative()) continue;
    selected.push_back(id);
  }

  const std::size_t n_ids = selected.size();
  std::vector<double> residuals(n_ids * samples.size());
  parallel_for(samples.size(), options.threads, [&](std::size_t i) {
    for (std::size_t k = 0; k < n_ids; ++k) {
      double r;
      try {
        r = evaluate(ops, selected[k], samples[i]);
      } catch (const Error&) {
        r = std::numeric_limits<double>::quiet_NaN();
      }
      residuals[k * samples.size() + i] = r;
    }
  });

  std::vector<IdentityReport> reports;
  reports.reserve(n_ids);
  for (std::size_t k = 0; k < n_ids; ++k) {
    const IdentityInfo& meta = info(selected[k]);
    IdentityReport report;
    report.name = std::string(meta.name);
    report.samples = samples.size();
    report.tolerance = meta.map_valued ? options.policy.rel_tol
                                       : options.policy.rel_tol * params.radius();
    std::size_t worst = 0;
    double worst_value = -1.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      double r = residuals[k * samples.size() + i];
      if (std::isnan(r)) {
        ++report.errors;
        r = std::numeric_limits<double>::infinity();
      }
      if (r > worst_value) {
        worst_value = r;
        worst = i;
      }
    }
    report.max_residual = worst_value;
    report.passed = report.errors == 0 && report.max_residual < report.tolerance;
    const auto& pts = samples[worst].points;
    report.worst_inputs.assign(pts.begin(), pts.end());
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<IdentityReport> verify_identity_suite(const OperationTable& ops,
                                                  std::string_view selector,
                                                  const SuiteOptions& options) {
  const std::vector<Identity> ids = select_identities(selector);
  return verify_identity_suite(ops, ids, options);
}

}  // namespace gyro
