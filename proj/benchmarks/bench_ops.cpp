#include <benchmark/benchmark.h>

#include <vector>

#include "gyro/gyro.hpp"

namespace {

std::vector<gyro::BallPoint> draw(int dim, std::size_t count) {
  gyro::BallSampler sampler(gyro::BallParams(dim, 1.0), 7, 0.9);
  std::vector<gyro::BallPoint> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(sampler.next());
  return pts;
}

void BM_Add(benchmark::State& state, gyro::ModelTag tag) {
  const int dim = static_cast<int>(state.range(0));
  const gyro::GyroModel model(tag, gyro::BallParams(dim, 1.0));
  const auto pts = draw(dim, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.add(pts[i & 255], pts[(i + 1) & 255]));
    ++i;
  }
}
BENCHMARK_CAPTURE(BM_Add, einstein, gyro::ModelTag::Einstein)->Arg(2)->Arg(3)->Arg(16);
BENCHMARK_CAPTURE(BM_Add, mobius, gyro::ModelTag::Mobius)->Arg(2)->Arg(3)->Arg(16);

void BM_GyrateClosed(benchmark::State& state, gyro::ModelTag tag) {
  const gyro::GyroModel model(tag, gyro::BallParams(3, 1.0));
  const auto pts = draw(3, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.gyrate(pts[i & 255], pts[(i + 1) & 255], pts[(i + 2) & 255].coords()));
    ++i;
  }
}
BENCHMARK_CAPTURE(BM_GyrateClosed, einstein, gyro::ModelTag::Einstein);
BENCHMARK_CAPTURE(BM_GyrateClosed, mobius, gyro::ModelTag::Mobius);

// Three additions per application, for comparison with the closed form.
void BM_GyrDefinitional(benchmark::State& state) {
  const gyro::GyroModel model(gyro::ModelTag::Einstein, gyro::BallParams(3, 1.0));
  const auto pts = draw(3, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gyro::gyr_definitional(model, pts[i & 255], pts[(i + 1) & 255], pts[(i + 2) & 255]));
    ++i;
  }
}
BENCHMARK(BM_GyrDefinitional);

void BM_CoaddK(benchmark::State& state) {
  const gyro::GyroModel model(gyro::ModelTag::Einstein, gyro::BallParams(3, 1.0));
  gyro::BallSampler sampler(model.params(), 3, 0.3);
  std::vector<gyro::BallPoint> pts;
  for (int k = 0; k < state.range(0); ++k) pts.push_back(sampler.next());
  for (auto _ : state) benchmark::DoNotOptimize(model.coadd_k(pts));
}
BENCHMARK(BM_CoaddK)->Arg(2)->Arg(4)->Arg(7);

void BM_GyrogroupSuite(benchmark::State& state) {
  const gyro::GyroModel model(gyro::ModelTag::Mobius, gyro::BallParams(3, 1.0));
  gyro::SuiteOptions options;
  options.samples = 1000;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::verify_identity_suite(model, "gyrogroup", options));
}
BENCHMARK(BM_GyrogroupSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
