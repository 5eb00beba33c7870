#include <benchmark/benchmark.h>

#include <random>

#include "lroc/flexible_bayes.hpp"
#include "lroc/gaussian_model.hpp"
#include "lroc/piecewise_model.hpp"
#include "lroc/point_process.hpp"
#include "lroc/roc_core.hpp"

using namespace lroc;

namespace {

GaussianPair bivariate() {
  Eigen::VectorXd mp(2);
  mp << 1, 2;
  Eigen::MatrixXd cp = Eigen::MatrixXd::Zero(2, 2);
  cp(0, 0) = 4;
  cp(1, 1) = 16;
  return GaussianPair(Eigen::VectorXd::Zero(2), Eigen::MatrixXd::Identity(2, 2), mp, cp);
}

void BM_ExactProperRoc(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> w(1, 1000);
  std::vector<AtomCell> cells;
  Rational total_minus = 0, total_plus = 0;
  std::vector<std::pair<int, int>> raw;
  for (int i = 0; i < state.range(0); ++i) {
    raw.emplace_back(w(rng), w(rng));
    total_minus += raw.back().first;
    total_plus += raw.back().second;
  }
  for (const auto& [m, p] : raw) cells.push_back({m / total_minus, p / total_plus});
  for (auto _ : state) benchmark::DoNotOptimize(proper_roc(LrDistribution::from_cells(cells)));
}
BENCHMARK(BM_ExactProperRoc)->Arg(10)->Arg(100)->Arg(1000);

void BM_SampledProperRoc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::exponential_distribution<double> e;
  std::vector<double> minus(n), plus(n);
  for (auto& v : minus) v = e(rng);
  for (auto& v : plus) v = 2.0 * e(rng);
  for (auto _ : state) benchmark::DoNotOptimize(proper_roc(LrDistribution::from_samples(minus, plus)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n));
}
BENCHMARK(BM_SampledProperRoc)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void BM_GaussianLrSample(benchmark::State& state) {
  const GaussianPair m = bivariate();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_lr_sample(m, n, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n));
}
BENCHMARK(BM_GaussianLrSample)->Arg(1 << 14)->Arg(1 << 18);

void BM_PointProcessSimulation(benchmark::State& state) {
  const PointProcessPair m(1.0, 5);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_processes(m, n, 1));
}
BENCHMARK(BM_PointProcessSimulation)->Arg(1 << 14)->Arg(1 << 17);

void BM_Algorithm1(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> z;
  const std::size_t n = 500;
  Eigen::MatrixXd x(2 * n, 2);
  std::vector<ClassLabel> labels;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const bool pos = i >= n;
    x(static_cast<Eigen::Index>(i), 0) = z(rng) + (pos ? 1.0 : 0.0);
    x(static_cast<Eigen::Index>(i), 1) = z(rng) * (pos ? 2.0 : 1.0);
    labels.push_back(pos ? ClassLabel::positive : ClassLabel::negative);
  }
  const KernelDensityEstimate kde = fit_kde(LabeledSample(x, labels));
  RocGrid grid;
  grid.replications = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(algorithm1_roc(kde, grid));
}
BENCHMARK(BM_Algorithm1)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
