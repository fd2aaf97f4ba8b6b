#pragma once

#include <span>
#include <string>
#include <string_view>

#include "gyro/ball.hpp"
#include "gyro/gyration.hpp"

namespace gyro {

enum class ModelTag { Einstein, Mobius };

std::string_view to_string(ModelTag tag) noexcept;
/// Accepts "einstein" or "mobius" (case-sensitive); throws InvalidArgument otherwise.
ModelTag parse_model(std::string_view name);

/// The operation table a gyrogroup identity check runs against.
///
/// The two ball models implement it through GyroModel. Tests may supply their
/// own table (for instance a deliberately broken one) to make sure the
/// identity suite can fail.
class OperationTable {
 public:
  virtual ~OperationTable() = default;

  virtual std::string name() const = 0;
  virtual const BallParams& params() const = 0;
  virtual BallPoint add(const BallPoint& a, const BallPoint& b) const = 0;
  virtual BallPoint negate(const BallPoint& a) const { return -a; }
  virtual BallPoint scalar_mul(double r, const BallPoint& v) const;
  /// Defaults to materializing the definitional composition on scaled basis vectors.
  virtual GyrationMap gyration(const BallPoint& a, const BallPoint& b) const;
  virtual bool gyrocommutative() const { return true; }

  BallPoint subtract(const BallPoint& a, const BallPoint& b) const { return add(a, negate(b)); }
  /// a [+] b = a (+) gyr[a, -b] b using this table's gyration.
  BallPoint coadd(const BallPoint& a, const BallPoint& b) const;
};

/// Einstein or Mobius operations on one ball, behind a single interface.
class GyroModel final : public OperationTable {
 public:
  GyroModel(ModelTag tag, BallParams params) : tag_(tag), params_(params) {}

  ModelTag tag() const noexcept { return tag_; }

  std::string name() const override { return std::string(to_string(tag_)); }
  const BallParams& params() const override { return params_; }
  BallPoint add(const BallPoint& a, const BallPoint& b) const override;
  GyrationMap gyration(const BallPoint& a, const BallPoint& b) const override;

  /// a (+) w where w may be any ambient vector (used for boundary points).
  Vector add_ambient(const BallPoint& a, const Vector& w) const;
  Vector gyrate(const BallPoint& a, const BallPoint& b, const Vector& w) const;

  /// Closed-form coaddition of the model.
  BallPoint coadd_closed(const BallPoint& a, const BallPoint& b) const;
  BallPoint coadd_k(std::span<const BallPoint> vs) const;

  /// Model addition restricted to nonnegative reals on a line; identical for both models.
  double add_1d(double a, double b) const;

 private:
  void require_point(const BallPoint& p) const;

  ModelTag tag_;
  BallParams params_;
};

}  // namespace gyro
