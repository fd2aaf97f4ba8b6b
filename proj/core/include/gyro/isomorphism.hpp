#pragma once

#include <span>
#include <vector>

#include "gyro/ball.hpp"
#include "gyro/model.hpp"

namespace gyro {

/// Which model a point belongs to. Both models share the raw representation.
enum class Side { Einstein, Mobius };

constexpr Side other(Side s) noexcept { return s == Side::Einstein ? Side::Mobius : Side::Einstein; }
constexpr ModelTag model_of(Side s) noexcept {
  return s == Side::Einstein ? ModelTag::Einstein : ModelTag::Mobius;
}

/// A_e = 2 (x) A_m.
BallPoint m_to_e(const BallPoint& am);
/// A_m = 1/2 (x) A_e.
BallPoint e_to_m(const BallPoint& ae);

/// A point tagged with its model at compile time. Mixing sides needs an
/// explicit transport().
template <Side S>
class OnSide {
 public:
  explicit OnSide(BallPoint p) : point_(std::move(p)) {}
  const BallPoint& point() const noexcept { return point_; }
  static constexpr Side side = S;

 private:
  BallPoint point_;
};

using EinsteinPoint = OnSide<Side::Einstein>;
using MobiusPoint = OnSide<Side::Mobius>;

inline EinsteinPoint transport(const MobiusPoint& p) { return EinsteinPoint(m_to_e(p.point())); }
inline MobiusPoint transport(const EinsteinPoint& p) { return MobiusPoint(e_to_m(p.point())); }

template <Side S>
OnSide<S> add(const OnSide<S>& a, const OnSide<S>& b) {
  return OnSide<S>(GyroModel(model_of(S), a.point().params()).add(a.point(), b.point()));
}

/// Runtime-tagged point for code paths (CLI, scenes) where the side is data.
struct SidedPoint {
  Side side;
  BallPoint point;
};

enum class TransportOp { Add, Coadd, CoaddK };

struct TransportResult {
  /// The operation evaluated directly on the arguments' side.
  SidedPoint direct;
  /// The same operation evaluated on the other side and mapped back.
  SidedPoint transported;
  /// |direct (-) transported| under the arguments' model.
  double residual;
};

/// Evaluates op on args both directly and through the isomorphism, e.g.
/// A (+)e B against 2 (x) (1/2 (x) A (+)m 1/2 (x) B). Add and Coadd take two
/// arguments, CoaddK one or more. Throws SideMismatch for mixed sides.
TransportResult transport_op(TransportOp op, std::span<const SidedPoint> args);

struct GammaRelations {
  /// |g_e - (2 g_m^2 - 1)| / g_e
  double gamma_residual = 0.0;
  /// |g_e A_e - 2 g_m^2 A_m| / (g_e c)
  double vector_residual = 0.0;
  /// Pairwise versions for a_ij; zero when no pair was given.
  double pair_gamma_residual = 0.0;
  /// |sqrt(g_ij,e^2 - 1) - 2 g_ij,m sqrt(g_ij,m^2 - 1)| relative to the left side.
  double pair_sqrt_residual = 0.0;

  double max() const;
};

GammaRelations gamma_relations(const BallPoint& am);
GammaRelations gamma_relations(const BallPoint& am, const BallPoint& bm);

/// g_ij a_ij / sqrt(g_ij^2 - 1) with a_ij = (-Ai) (+) Aj under the given
/// side's addition. Equal to c a_ij/|a_ij|, which is how it is evaluated.
/// Throws DegenerateInput when Ai and Aj coincide within abs_tol * c.
Vector invariant_expression(Side side, const BallPoint& ai, const BallPoint& aj,
                            const TolerancePolicy& policy = {});

}  // namespace gyro
