#include <doctest.h>

#include <algorithm>
#include <string>

#include "gyro/algebra.hpp"
#include "gyro/einstein.hpp"
#include "gyro/testing/broken_model.hpp"
#include "oracle.hpp"

using gyro::BallParams;
using gyro::BallPoint;
using gyro::GyroModel;
using gyro::ModelTag;
using gyro::Vector;

namespace {

double dist(const Vector& a, const Vector& b) { return (a - b).norm(); }

const GyroModel kEinstein(ModelTag::Einstein, BallParams(3, 1.0));
const GyroModel kMobius(ModelTag::Mobius, BallParams(3, 1.0));

}  // namespace

TEST_CASE("model names round trip") {
  CHECK(gyro::parse_model("einstein") == ModelTag::Einstein);
  CHECK(gyro::parse_model("mobius") == ModelTag::Mobius);
  CHECK(gyro::to_string(ModelTag::Mobius) == "mobius");
  CHECK_THROWS_AS(gyro::parse_model("Einstein"), gyro::Error);
}

TEST_CASE("definitional gyration fixes zero and matches the closed forms") {
  for (const GyroModel* m : {&kEinstein, &kMobius}) {
    gyro::BallSampler s(m->params(), 3, 0.9);
    const BallPoint zero = BallPoint::zero(m->params());
    for (int i = 0; i < 300; ++i) {
      const BallPoint u = s.next(), v = s.next(), w = s.next();
      CHECK(dist(gyro::gyr_definitional(*m, zero, v, w).coords(), w.coords()) < 1e-14);
      CHECK(gyro::gyr_definitional(*m, u, v, zero).norm() < 1e-14);
      CHECK(dist(gyro::gyr_definitional(*m, u, v, w).coords(), m->gyrate(u, v, w.coords())) < 1e-12);
      CHECK(gyro::max_entry_diff(gyro::gyration_definitional(*m, u, v).coeffs(),
                                 m->gyration(u, v).coeffs()) < 1e-11);
    }
  }
}

TEST_CASE("coaddition definitional and closed forms") {
  for (const GyroModel* m : {&kEinstein, &kMobius}) {
    gyro::BallSampler s(m->params(), 4, 0.9);
    const BallPoint zero = BallPoint::zero(m->params());
    for (int i = 0; i < 300; ++i) {
      const BallPoint a = s.next(), b = s.next();
      CHECK(dist(gyro::coadd_definitional(*m, a, zero).coords(), a.coords()) < 1e-15);
      CHECK(dist(gyro::coadd_definitional(*m, a, b).coords(), m->coadd_closed(a, b).coords()) < 1e-12);
    }
  }
}

TEST_CASE("cosubtraction and right cancellation") {
  for (const GyroModel* m : {&kEinstein, &kMobius}) {
    gyro::BallSampler s(m->params(), 5, 0.9);
    const BallPoint zero = BallPoint::zero(m->params());
    for (int i = 0; i < 300; ++i) {
      const BallPoint a = s.next(), b = s.next();
      CHECK(dist(gyro::cosub(*m, a, zero).coords(), a.coords()) < 1e-15);
      CHECK(gyro::cosub(*m, a, a).norm() < 1e-13);
      CHECK(m->subtract(m->add(gyro::cosub(*m, b, a), a), b).norm() < 1e-12);
    }
  }
}

TEST_CASE("equation solving") {
  for (const GyroModel* m : {&kEinstein, &kMobius}) {
    gyro::BallSampler s(m->params(), 6, 0.9);
    const BallPoint zero = BallPoint::zero(m->params());
    for (int i = 0; i < 300; ++i) {
      const BallPoint a = s.next(), b = s.next();
      CHECK(gyro::solve_left(*m, a, a).norm() < 1e-15);
      CHECK(dist(gyro::solve_left(*m, a, zero).coords(), (-a).coords()) < 1e-15);
      CHECK(m->subtract(m->add(a, gyro::solve_left(*m, a, b)), b).norm() < 1e-12);

      CHECK(gyro::solve_right(*m, a, a).norm() < 1e-13);
      CHECK(dist(gyro::solve_right(*m, zero, b).coords(), b.coords()) < 1e-15);
      CHECK(m->subtract(m->add(gyro::solve_right(*m, a, b), a), b).norm() < 1e-12);
    }
  }
}

TEST_CASE("selectors") {
  CHECK(gyro::select_identities("all").size() == gyro::all_identities().size());
  CHECK(gyro::select_identities("gyrogroup").size() == 10);
  CHECK(gyro::select_identities("two-sum") == std::vector{gyro::Identity::TwoSum});
  for (gyro::Identity id : gyro::all_identities()) {
    CHECK(gyro::select_identities(gyro::to_string(id)) == std::vector{id});
  }
  CHECK_THROWS_AS(gyro::select_identities("gyrogroups"), gyro::Error);
}

TEST_CASE("both models pass every identity at cap 0.9") {
  for (ModelTag tag : {ModelTag::Einstein, ModelTag::Mobius}) {
    for (double c : {1.0, 2.0}) {
      const GyroModel m(tag, BallParams(3, c));
      gyro::SuiteOptions opt;
      opt.samples = 1000;
      opt.policy.rel_tol = 1e-9;
      for (const gyro::IdentityReport& r : gyro::verify_identity_suite(m, "all", opt)) {
        INFO(m.name(), " c=", c, " ", r.name, " ", r.max_residual);
        CHECK(r.passed);
        CHECK(r.errors == 0);
        CHECK(r.samples == 1000);
        CHECK(r.max_residual >= 0.0);
      }
    }
  }
}

TEST_CASE("residuals stay small as samples approach the boundary") {
  for (const GyroModel* m : {&kEinstein, &kMobius}) {
    double previous = 0.0;
    for (double cap : {0.5, 0.9, 0.99}) {
      gyro::SuiteOptions opt;
      opt.samples = 500;
      opt.radius_cap = cap;
      opt.policy.rel_tol = 1e-6;
      double worst = 0.0;
      for (const auto& r : gyro::verify_identity_suite(*m, "all", opt)) worst = std::max(worst, r.max_residual);
      if (cap == 0.9) CHECK(worst < 1e-8);
      MESSAGE(m->name(), " cap ", cap, " worst residual ", worst);
      CHECK(worst >= 0.0);
      previous = worst;
    }
    CHECK(previous < 1e-6);
  }
}

TEST_CASE("suite output does not depend on the thread count") {
  gyro::SuiteOptions one;
  one.samples = 400;
  one.threads = 1;
  gyro::SuiteOptions many = one;
  many.threads = 7;
  const auto a = gyro::verify_identity_suite(kMobius, "all", one);
  const auto b = gyro::verify_identity_suite(kMobius, "all", many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].max_residual == b[i].max_residual);
    REQUIRE(a[i].worst_inputs.size() == b[i].worst_inputs.size());
    for (std::size_t k = 0; k < a[i].worst_inputs.size(); ++k) {
      CHECK(a[i].worst_inputs[k].coords() == b[i].worst_inputs[k].coords());
    }
  }
}

TEST_CASE("the broken model fails gyroassociativity") {
  const gyro::testing::BrokenModel broken(BallParams(3, 1.0));
  gyro::SuiteOptions opt;
  opt.samples = 300;
  opt.radius_cap = 0.5;
  const auto reports = gyro::verify_identity_suite(broken, "left-gyroassociativity", opt);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].passed);
  CHECK(reports[0].max_residual > 1e-3);
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(1001, 0);
  gyro::parallel_for(hits.size(), 5, [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST_CASE("context mismatch is rejected by the model") {
  const BallPoint other(BallParams(3, 2.0), {0.1, 0.0, 0.0});
  CHECK_THROWS_AS(kEinstein.add(other, other), gyro::Error);
}
