#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "gyro/algebra.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/mobius.hpp"
#include "oracle.hpp"

using gyro::BallParams;
using gyro::BallPoint;
using gyro::Vector;
namespace mob = gyro::mobius;

namespace {

const BallParams kUnit2(2, 1.0);

double dist(const Vector& a, const Vector& b) { return (a - b).norm(); }

}  // namespace

TEST_CASE("disc addition") {
  const mob::DiscComplex a(0.5, 0.0), z(0.0, 0.5);
  CHECK(mob::disc_add(mob::DiscComplex(0.0, 0.0), z).value() == z.value());
  const mob::Complex got = mob::disc_add(a, z).value();
  CHECK(got.re == doctest::Approx(0.625 / 1.0625).epsilon(1e-15));
  CHECK(got.im == doctest::Approx(0.375 / 1.0625).epsilon(1e-15));
  CHECK(mob::disc_add(a, mob::DiscComplex(-0.5, 0.0)).value().modulus() < 1e-16);
  CHECK_THROWS_AS(mob::DiscComplex(1.0, 0.0), gyro::Error);
}

TEST_CASE("disc gyration") {
  CHECK(mob::disc_gyration(mob::DiscComplex(0.3, 0.0), mob::DiscComplex(-0.6, 0.0)) == mob::Complex{1.0, 0.0});
  const mob::Complex g0 = mob::disc_gyration(mob::DiscComplex(0.0, 0.0), mob::DiscComplex(0.2, 0.7));
  CHECK(g0.re == doctest::Approx(1.0));
  CHECK(std::abs(g0.im) < 1e-16);

  const mob::DiscComplex a(0.5, 0.0), b(0.0, 0.5);
  const mob::Complex g = mob::disc_gyration(a, b);
  const std::complex<double> want = std::complex<double>(1.0, -0.25) / std::complex<double>(1.0, 0.25);
  CHECK(g.re == doctest::Approx(want.real()).epsilon(1e-15));
  CHECK(g.im == doctest::Approx(want.imag()).epsilon(1e-15));
  CHECK(g.modulus() == doctest::Approx(1.0).epsilon(1e-15));
  const mob::Complex rotated = g * mob::disc_add(b, a).value();
  const mob::Complex ab = mob::disc_add(a, b).value();
  CHECK(std::hypot(rotated.re - ab.re, rotated.im - ab.im) < 1e-15);
}

TEST_CASE("mobius add hand values") {
  const BallPoint half(kUnit2, {0.5, 0.0});
  CHECK(dist(mob::add(BallPoint::zero(kUnit2), half).coords(), half.coords()) == 0.0);
  CHECK(dist(mob::add(half, half).coords(), Vector::Unit(2, 0) * 0.8) < 1e-15);
  const std::complex<long double> w = oracle::disc_add({0.5L, 0.0L}, {0.0L, 0.5L});
  const Vector want{{static_cast<double>(w.real()), static_cast<double>(w.imag())}};
  CHECK(dist(mob::add(half, BallPoint(kUnit2, {0.0, 0.5})).coords(), want) < 1e-15);
}

TEST_CASE("mobius add agrees with the disc and with the textbook formula") {
  gyro::BallSampler disc(kUnit2, 5, 0.95);
  for (int i = 0; i < 2000; ++i) {
    const BallPoint u = disc.next(), v = disc.next();
    const std::complex<long double> w =
        oracle::disc_add({u[0], u[1]}, {v[0], v[1]});
    CHECK(dist(mob::add(u, v).coords(), Vector{{static_cast<double>(w.real()), static_cast<double>(w.imag())}}) < 1e-14);
  }
  for (double s : {1.0, 2.0}) {
    gyro::BallSampler sampler(BallParams(4, s), 6, 0.95);
    for (int i = 0; i < 2000; ++i) {
      const BallPoint u = sampler.next(), v = sampler.next();
      const Vector want = oracle::narrow(oracle::mobius_add(oracle::widen(u.coords()), oracle::widen(v.coords()), s));
      CHECK(dist(mob::add(u, v).coords(), want) < 1e-13 * s);
    }
  }
}

TEST_CASE("stable mobius addition near the boundary") {
  // Nearly opposite points just inside the boundary: the textbook coefficients
  // lose about eight digits here in double precision.
  const BallParams unit3(3, 1.0);
  const BallPoint u(unit3, {0.8999, 0.0001, 0.0});
  const BallPoint v(unit3, {-0.8998, 0.0, 0.0002});
  const Vector want = oracle::narrow(oracle::mobius_add(oracle::widen(u.coords()), oracle::widen(v.coords()), 1.0L));
  CHECK(dist(mob::add(u, v).coords(), want) < 1e-15);
}

TEST_CASE("mobius gamma identity") {
  gyro::BallSampler s(BallParams(3, 2.0), 61, 0.95);
  for (int i = 0; i < 10000; ++i) {
    const BallPoint u = s.next(), v = s.next();
    const double gu = gyro::gamma_factor(u), gv = gyro::gamma_factor(v);
    const double uv = u.coords().dot(v.coords()) / 4.0;
    const double rhs = gu * gv * std::sqrt(1.0 + 2.0 * uv + u.squared_norm() * v.squared_norm() / 16.0);
    CHECK(std::abs(gyro::gamma_factor(mob::add(u, v)) - rhs) / rhs < 1e-10);
  }
}

TEST_CASE("euclidean limit of mobius addition") {
  const BallParams huge(2, 1e6);
  gyro::BallSampler s(kUnit2, 2, 0.999);
  for (int i = 0; i < 200; ++i) {
    const BallPoint u(huge, s.next().coords()), v(huge, s.next().coords());
    CHECK(dist(mob::add(u, v).coords(), u.coords() + v.coords()) <= 1e-6 * (u.norm() + v.norm()));
  }
}

TEST_CASE("mobius gyration") {
  const gyro::Matrix id = gyro::Matrix::Identity(2, 2);
  CHECK(gyro::max_entry_diff(mob::gyration(BallPoint(kUnit2, {0.3, 0.0}), BallPoint(kUnit2, {0.5, 0.0})).coeffs(), id) < 1e-15);
  CHECK(gyro::max_entry_diff(mob::gyration(BallPoint(kUnit2, {0.3, 0.2}), BallPoint::zero(kUnit2)).coeffs(), id) < 1e-15);

  gyro::BallSampler s(kUnit2, 8, 0.95);
  for (int i = 0; i < 500; ++i) {
    const BallPoint a = s.next(), b = s.next();
    const gyro::Matrix m = mob::gyration(a, b).coeffs();
    const mob::Complex g = mob::disc_gyration(mob::DiscComplex::from_point(a), mob::DiscComplex::from_point(b));
    gyro::Matrix rot(2, 2);
    rot << g.re, -g.im, g.im, g.re;
    CHECK(gyro::max_entry_diff(m, rot) < 1e-12);
  }

  gyro::BallSampler s3(BallParams(3, 2.0), 9, 0.95);
  for (int i = 0; i < 1000; ++i) {
    const BallPoint a = s3.next(), b = s3.next(), w = s3.next();
    const Vector want = oracle::narrow(
        oracle::mobius_gyr(oracle::widen(a.coords()), oracle::widen(b.coords()), oracle::widen(w.coords()), 2.0L));
    CHECK(dist(mob::gyrate(a, b, w.coords()), want) < 1e-12);
  }
}

TEST_CASE("mobius coaddition") {
  const BallPoint u(kUnit2, {0.6, 0.1});
  CHECK(dist(mob::coadd(u, u).coords(), mob::scalar_mul(2.0, u).coords()) < 1e-15);
  CHECK(mob::coadd(u, -u).norm() < 1e-16);

  gyro::BallSampler s(BallParams(3, 1.0), 23, 0.9);
  for (int i = 0; i < 1000; ++i) {
    const BallPoint a = s.next(), b = s.next();
    const Vector def = oracle::narrow(oracle::mobius_coadd(oracle::widen(a.coords()), oracle::widen(b.coords()), 1.0L));
    CHECK(dist(mob::coadd(a, b).coords(), def) < 1e-12);
    const Vector transported =
        gyro::e_to_m(gyro::einstein::coadd(gyro::m_to_e(a), gyro::m_to_e(b))).coords();
    CHECK(dist(mob::coadd(a, b).coords(), transported) < 1e-12);
  }
}

TEST_CASE("the printed coaddition numerator is not commutative") {
  gyro::BallSampler s(BallParams(3, 1.0), 29, 0.9);
  double worst_literal = 0.0;
  double worst_fixed = 0.0;
  for (int i = 0; i < 200; ++i) {
    const oracle::LVec a = oracle::widen(s.next().coords()), b = oracle::widen(s.next().coords());
    worst_literal = std::max<double>(worst_literal, (oracle::mobius_coadd_literal(a, b, 1.0L) -
                                                     oracle::mobius_coadd_literal(b, a, 1.0L)).norm());
    worst_fixed = std::max<double>(
        worst_fixed, (oracle::mobius_coadd(a, b, 1.0L) - oracle::mobius_coadd(b, a, 1.0L)).norm());
  }
  CHECK(worst_literal > 1e-2);
  CHECK(worst_fixed < 1e-12);
}

TEST_CASE("mobius order k coaddition") {
  const BallPoint v(kUnit2, {0.4, -0.2});
  const BallPoint one[] = {v};
  CHECK(dist(mob::coadd_k(one).coords(), v.coords()) < 1e-15);
  const BallPoint two[] = {v, v};
  CHECK(dist(mob::coadd_k(two).coords(), mob::scalar_mul(2.0, v).coords()) < 1e-15);
  const std::vector<BallPoint> zeros(3, BallPoint::zero(kUnit2));
  CHECK(mob::coadd_k(zeros).is_zero());

  gyro::BallSampler s(BallParams(3, 1.0), 33, 0.5);
  for (int i = 0; i < 300; ++i) {
    const BallPoint a = s.next(), b = s.next(), c = s.next();
    const BallPoint three[] = {a, b, c};
    const Vector transported =
        gyro::e_to_m(gyro::einstein::coadd3(gyro::m_to_e(a), gyro::m_to_e(b), gyro::m_to_e(c))).coords();
    CHECK(dist(mob::coadd_k(three).coords(), transported) < 1e-12);
  }
}
