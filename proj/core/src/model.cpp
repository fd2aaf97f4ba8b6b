#include "gyro/model.hpp"

#include "gyro/algebra.hpp"
#include "gyro/einstein.hpp"
#include "gyro/mobius.hpp"

namespace gyro {

std::string_view to_string(ModelTag tag) noexcept {
  return tag == ModelTag::Einstein ? "einstein" : "mobius";
}

ModelTag parse_model(std::string_view name) {
  if (name == "einstein") return ModelTag::Einstein;
  if (name == "mobius") return ModelTag::Mobius;
  throw Error(ErrorCode::InvalidArgument, "unknown model '" + std::string(name) + "'");
}

BallPoint OperationTable::scalar_mul(double r, const BallPoint& v) const {
  return einstein::scalar_mul(r, v);
}

GyrationMap OperationTable::gyration(const BallPoint& a, const BallPoint& b) const {
  return gyration_definitional(*this, a, b);
}

BallPoint OperationTable::coadd(const BallPoint& a, const BallPoint& b) const {
  return add(a, gyration(a, negate(b)).apply(b));
}

void GyroModel::require_point(const BallPoint& p) const {
  if (p.params() != params_) {
    throw Error(ErrorCode::ContextMismatch, "point does not belong to this model's ball");
  }
}

BallPoint GyroModel::add(const BallPoint& a, const BallPoint& b) const {
  require_point(a);
  return tag_ == ModelTag::Einstein ? einstein::add(a, b) : mobius::add(a, b);
}

GyrationMap GyroModel::gyration(const BallPoint& a, const BallPoint& b) const {
  require_point(a);
  return tag_ == ModelTag::Einstein ? einstein::gyration(a, b) : mobius::gyration(a, b);
}

Vector GyroModel::add_ambient(const BallPoint& a, const Vector& w) const {
  require_point(a);
  if (w.size() != params_.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "ambient vector has the wrong length");
  }
  return tag_ == ModelTag::Einstein ? einstein::add(a.coords(), w, params_.radius())
                                    : mobius::add(a.coords(), w, params_.radius());
}

Vector GyroModel::gyrate(const BallPoint& a, const BallPoint& b, const Vector& w) const {
  require_point(a);
  return tag_ == ModelTag::Einstein ? einstein::gyrate(a, b, w) : mobius::gyrate(a, b, w);
}

BallPoint GyroModel::coadd_closed(const BallPoint& a, const BallPoint& b) const {
  require_point(a);
  return tag_ == ModelTag::Einstein ? einstein::coadd(a, b) : mobius::coadd(a, b);
}

BallPoint GyroModel::coadd_k(std::span<const BallPoint> vs) const {
  if (!vs.empty()) require_point(vs.front());
  return tag_ == ModelTag::Einstein ? einstein::coadd_k(vs) : mobius::coadd_k(vs);
}

double GyroModel::add_1d(double a, double b) const {
  return (a + b) / (1.0 + a * b / params_.radius_sq());
}

}  // namespace gyro
