#include <doctest.h>

#include <cmath>
#include <type_traits>
#include <vector>

#include "gyro/einstein.hpp"
#include "gyro/geometry.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/mobius.hpp"

using gyro::BallParams;
using gyro::BallPoint;
using gyro::Side;
using gyro::SidedPoint;
using gyro::TransportOp;
using gyro::Vector;

namespace {

double dist(const Vector& a, const Vector& b) { return (a - b).norm(); }

const BallParams kUnit2(2, 1.0);

template <class A, class B>
concept Addable = requires(const A& a, const B& b) { gyro::add(a, b); };

}  // namespace

static_assert(Addable<gyro::EinsteinPoint, gyro::EinsteinPoint>);
static_assert(!Addable<gyro::EinsteinPoint, gyro::MobiusPoint>);

TEST_CASE("doubling and halving") {
  CHECK(gyro::m_to_e(BallPoint::zero(kUnit2)).is_zero());
  CHECK(dist(gyro::m_to_e(BallPoint(kUnit2, {0.5, 0.0})).coords(), Vector{{0.8, 0.0}}) < 1e-15);
  CHECK(dist(gyro::e_to_m(BallPoint(kUnit2, {0.8, 0.0})).coords(), Vector{{0.5, 0.0}}) < 1e-15);
  CHECK(gyro::e_to_m(BallPoint::zero(kUnit2)).is_zero());

  gyro::BallSampler s(BallParams(3, 2.0), 1, 0.95);
  for (int i = 0; i < 1000; ++i) {
    const BallPoint p = s.next();
    CHECK(dist(gyro::e_to_m(gyro::m_to_e(p)).coords(), p.coords()) < 1e-13);
    CHECK(dist(gyro::m_to_e(gyro::e_to_m(p)).coords(), p.coords()) < 1e-13);
  }
}

TEST_CASE("addition transports both ways") {
  gyro::BallSampler s(BallParams(3, 1.0), 2, 0.9);
  const BallPoint zero = BallPoint::zero(BallParams(3, 1.0));
  for (int i = 0; i < 1000; ++i) {
    const BallPoint a = s.next(), b = s.next();
    // A_e (+)e B_e = 2 (x) (1/2 A_e (+)m 1/2 B_e)
    CHECK(dist(gyro::einstein::add(a, b).coords(),
               gyro::m_to_e(gyro::mobius::add(gyro::e_to_m(a), gyro::e_to_m(b))).coords()) < 1e-12);
    CHECK(dist(gyro::mobius::add(a, b).coords(),
               gyro::e_to_m(gyro::einstein::add(gyro::m_to_e(a), gyro::m_to_e(b))).coords()) < 1e-12);
    CHECK(dist(gyro::e_to_m(gyro::m_to_e(gyro::mobius::add(a, zero))).coords(), a.coords()) < 1e-13);

    const gyro::EinsteinPoint ea(a), eb(b);
    const gyro::MobiusPoint ma = gyro::transport(ea);
    CHECK(dist(gyro::transport(gyro::add(ma, gyro::transport(eb))).point().coords(),
               gyro::add(ea, eb).point().coords()) < 1e-12);
  }
}

TEST_CASE("transport_op") {
  gyro::BallSampler s(BallParams(2, 1.0), 3, 0.9);
  for (Side side : {Side::Einstein, Side::Mobius}) {
    for (int i = 0; i < 200; ++i) {
      const std::vector<SidedPoint> pair{{side, s.next()}, {side, s.next()}};
      for (TransportOp op : {TransportOp::Add, TransportOp::Coadd}) {
        const gyro::TransportResult r = gyro::transport_op(op, pair);
        CHECK(r.direct.side == side);
        CHECK(r.residual < 1e-12);
      }
    }
  }
  const std::vector<SidedPoint> mixed{{Side::Einstein, BallPoint::zero(kUnit2)}, {Side::Mobius, BallPoint::zero(kUnit2)}};
  try {
    gyro::transport_op(TransportOp::Add, mixed);
    FAIL("expected SideMismatch");
  } catch (const gyro::Error& e) {
    CHECK(e.code() == gyro::ErrorCode::SideMismatch);
  }
  CHECK_THROWS_AS(gyro::transport_op(TransportOp::CoaddK, std::span<const SidedPoint>{}), gyro::Error);
  const std::vector<SidedPoint> three(3, SidedPoint{Side::Mobius, BallPoint::zero(kUnit2)});
  CHECK_THROWS_AS(gyro::transport_op(TransportOp::Add, three), gyro::Error);
}

TEST_CASE("order k coaddition transports") {
  gyro::BallSampler s(BallParams(3, 1.0), 4, 0.4);
  for (Side side : {Side::Einstein, Side::Mobius}) {
    for (int k : {2, 3, 4, 7}) {
      for (int i = 0; i < 50; ++i) {
        std::vector<SidedPoint> args;
        for (int j = 0; j < k; ++j) args.push_back({side, s.next()});
        try {
          CHECK(gyro::transport_op(TransportOp::CoaddK, args).residual < 1e-12);
        } catch (const gyro::Error& e) {
          // Several summands can coadd past the boundary; nothing to compare then.
          CHECK(e.code() == gyro::ErrorCode::BoundaryOrOutside);
        }
      }
    }
  }
}

TEST_CASE("gamma relations") {
  const gyro::GammaRelations half = gyro::gamma_relations(BallPoint(kUnit2, {0.5, 0.0}));
  CHECK(half.gamma_residual < 1e-15);
  CHECK(2.0 * std::pow(gyro::gamma_factor(BallPoint(kUnit2, {0.5, 0.0})), 2) - 1.0 ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(gyro::gamma_relations(BallPoint::zero(kUnit2)).max() == 0.0);

  gyro::BallSampler s(BallParams(3, 2.0), 5, 0.9);
  for (int i = 0; i < 1000; ++i) {
    CHECK(gyro::gamma_relations(s.next(), s.next()).max() < 1e-12);
  }
}

TEST_CASE("invariant expression") {
  const Vector e = gyro::invariant_expression(Side::Einstein, BallPoint::zero(kUnit2), BallPoint(kUnit2, {0.5, 0.0}));
  CHECK(dist(e, Vector{{1.0, 0.0}}) < 1e-15);
  CHECK_THROWS_AS(gyro::invariant_expression(Side::Mobius, BallPoint(kUnit2, {0.1, 0.1}), BallPoint(kUnit2, {0.1, 0.1})),
                  gyro::Error);

  gyro::BallSampler s(BallParams(3, 1.0), 6, 0.9);
  for (int i = 0; i < 1000; ++i) {
    const BallPoint am = s.next(), bm = s.next();
    const Vector on_m = gyro::invariant_expression(Side::Mobius, am, bm);
    const Vector on_e = gyro::invariant_expression(Side::Einstein, gyro::m_to_e(am), gyro::m_to_e(bm));
    CHECK(dist(on_m, on_e) < 1e-12);
    // Swapping the points negates the direction up to gyr[-Ai, Aj], since
    // -((-Ai) (+) Aj) = gyr[-Ai, Aj]((-Aj) (+) Ai).
    const Vector swapped = gyro::invariant_expression(Side::Einstein, gyro::m_to_e(bm), gyro::m_to_e(am));
    const gyro::GyroModel e3(gyro::ModelTag::Einstein, am.params());
    const Vector rotated = e3.gyrate(-gyro::m_to_e(am), gyro::m_to_e(bm), swapped);
    CHECK(dist(rotated, -on_e) < 1e-12);
  }
}

TEST_CASE("gyrations and gyrolines transport") {
  gyro::BallSampler s(BallParams(3, 1.0), 7, 0.9);
  const gyro::GyroModel e3(gyro::ModelTag::Einstein, BallParams(3, 1.0));
  const gyro::GyroModel m3(gyro::ModelTag::Mobius, BallParams(3, 1.0));
  for (int i = 0; i < 300; ++i) {
    const BallPoint u = s.next(), v = s.next(), w = s.next();
    const Vector lhs = e3.gyration(gyro::m_to_e(u), gyro::m_to_e(v)).apply(gyro::m_to_e(w)).coords();
    const Vector rhs = gyro::m_to_e(m3.gyration(u, v).apply(w)).coords();
    CHECK(dist(lhs, rhs) < 1e-12);

    for (double t : {-0.5, 0.0, 0.3, 1.0, 1.8}) {
      const BallPoint pm = gyro::gyroline_point(m3, u, v, t);
      const BallPoint pe = gyro::gyroline_point(e3, gyro::m_to_e(u), gyro::m_to_e(v), t);
      CHECK(dist(gyro::m_to_e(pm).coords(), pe.coords()) < 1e-10);
    }
  }
}
