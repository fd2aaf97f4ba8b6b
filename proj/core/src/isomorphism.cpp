#include "gyro/isomorphism.hpp"

#include <algorithm>
#include <cmath>

#include "gyro/einstein.hpp"

namespace gyro {

BallPoint m_to_e(const BallPoint& am) { return einstein::scalar_mul(2.0, am); }

BallPoint e_to_m(const BallPoint& ae) { return einstein::scalar_mul(0.5, ae); }

namespace {

BallPoint map_to(Side target, const BallPoint& p) {
  return target == Side::Einstein ? m_to_e(p) : e_to_m(p);
}

BallPoint evaluate(TransportOp op, const GyroModel& model, std::span<const BallPoint> pts) {
  switch (op) {
    case TransportOp::Add:
      return model.add(pts[0], pts[1]);
    case TransportOp::Coadd:
      return model.coadd_closed(pts[0], pts[1]);
    case TransportOp::CoaddK:
      return model.coadd_k(pts);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown transport operation");
}

}  // namespace

TransportResult transport_op(TransportOp op, std::span<const SidedPoint> args) {
  if (args.empty()) throw Error(ErrorCode::EmptyList, "transport needs arguments");
  if ((op == TransportOp::Add || op == TransportOp::Coadd) && args.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "binary operation needs exactly two arguments");
  }
  const Side side = args.front().side;
  std::vector<BallPoint> here;
  std::vector<BallPoint> there;
  for (const SidedPoint& a : args) {
    if (a.side != side) throw Error(ErrorCode::SideMismatch, "arguments come from different models");
    here.push_back(a.point);
    there.push_back(map_to(other(side), a.point));
  }
  const BallParams& params = here.front().params();
  const GyroModel home(model_of(side), params);
  const GyroModel away(model_of(other(side)), params);

  BallPoint direct = evaluate(op, home, here);
  BallPoint transported = map_to(side, evaluate(op, away, there));
  const double residual = home.subtract(direct, transported).norm();
  return {{side, std::move(direct)}, {side, std::move(transported)}, residual};
}

double GammaRelations::max() const {
  return std::max({gamma_residual, vector_residual, pair_gamma_residual, pair_sqrt_residual});
}

GammaRelations gamma_relations(const BallPoint& am) {
  const BallPoint ae = m_to_e(am);
  const double gm = gamma_factor(am);
  const double ge = gamma_factor(ae);
  GammaRelations r;
  r.gamma_residual = std::abs(ge - (2.0 * gm * gm - 1.0)) / ge;
  r.vector_residual =
      (ge * ae.coords() - 2.0 * gm * gm * am.coords()).norm() / (ge * am.radius());
  return r;
}

GammaRelations gamma_relations(const BallPoint& am, const BallPoint& bm) {
  GammaRelations r = gamma_relations(am);
  const GammaRelations rb = gamma_relations(bm);
  r.gamma_residual = std::max(r.gamma_residual, rb.gamma_residual);
  r.vector_residual = std::max(r.vector_residual, rb.vector_residual);

  const GyroModel mob(ModelTag::Mobius, am.params());
  const GyroModel ein(ModelTag::Einstein, am.params());
  const BallPoint abm = mob.add(-am, bm);
  const BallPoint abe = ein.add(-m_to_e(am), m_to_e(bm));
  const double gm = gamma_factor(abm);
  const double ge = gamma_factor(abe);
  r.pair_gamma_residual = std::abs(ge - (2.0 * gm * gm - 1.0)) / ge;

  // sqrt(g^2 - 1) = g |a| / c avoids cancellation near a = 0.
  const double c = am.radius();
  const double lhs = ge * abe.norm() / c;
  const double rhs = 2.0 * gm * (gm * abm.norm() / c);
  r.pair_sqrt_residual = lhs == 0.0 ? std::abs(rhs) : std::abs(lhs - rhs) / lhs;
  return r;
}

Vector invariant_expression(Side side, const BallPoint& ai, const BallPoint& aj,
                            const TolerancePolicy& policy) {
  const GyroModel model(model_of(side), ai.params());
  const BallPoint aij = model.add(-ai, aj);
  const double norm = aij.norm();
  if (norm <= policy.abs_tol * ai.radius()) {
    throw Error(ErrorCode::DegenerateInput, "the two points coincide");
  }
  return ai.radius() * aij.coords() / norm;
}

}  // namespace gyro
