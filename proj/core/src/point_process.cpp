#include "lroc/point_process.hpp"

#include <cmath>
#include <stdexcept>

namespace lroc {

PointProcessPair::PointProcessPair(double rate, int failures) : rate_(rate), failures_(failures) {
  if (!(rate > 0) || !std::isfinite(rate)) throw std::invalid_argument("point process rate must be positive");
  if (failures < 1) throw std::invalid_argument("number of failures must be at least 1");
}

double point_process_log_lr(const PointProcessPair& m, double last_time) {
  if (!(last_time > 0)) throw std::invalid_argument("last failure time must be positive");
  const double lt = m.rate() * last_time;
  return lt - (m.failures() + 1) * std::log1p(lt);
}

double point_process_lr(const PointProcessPair& m, double last_time) {
  return std::exp(point_process_log_lr(m, last_time));
}

namespace {

// Next event time after `now`, given `k` events so far.
double next_event(ProcessKind kind, double rate, double now, std::size_t k, Engine& rng) {
  // 1 - canonical lies in (0, 1], so the logs and powers below are finite.
  const double u = 1.0 - std::generate_canonical<double, 64>(rng);
  if (kind == ProcessKind::poisson) return now - std::log(u) / rate;
  return ((1.0 + rate * now) * std::pow(u, -1.0 / (static_cast<double>(k) + 1.0)) - 1.0) / rate;
}

std::uint64_t stream_of(ProcessKind kind) { return kind == ProcessKind::poisson ? 0 : 1; }

template <class F>
void for_each_rep(ProcessKind kind, std::size_t n_rep, std::uint64_t seed, F&& body) {
  for (std::size_t start = 0, block = 0; start < n_rep; start += kBlockSize, ++block) {
    Engine rng = block_engine(seed, 2 * block + stream_of(kind));
    const std::size_t end = std::min(n_rep, start + kBlockSize);
    for (std::size_t r = start; r < end; ++r) body(rng);
  }
}

}  // namespace

std::vector<double> arrival_times(ProcessKind kind, double rate, int n, Engine& rng) {
  if (!(rate > 0)) throw std::invalid_argument("rate must be positive");
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(std::max(n, 0)));
  double now = 0.0;
  for (int k = 0; k < n; ++k) {
    now = next_event(kind, rate, now, static_cast<std::size_t>(k), rng);
    times.push_back(now);
  }
  return times;
}

std::size_t count_events(ProcessKind kind, double rate, double horizon, Engine& rng) {
  if (!(rate > 0)) throw std::invalid_argument("rate must be positive");
  std::size_t k = 0;
  double now = 0.0;
  while (true) {
    now = next_event(kind, rate, now, k, rng);
    if (now > horizon) return k;
    ++k;
  }
}

std::vector<double> simulate_last_times(ProcessKind kind, const PointProcessPair& m, std::size_t n_rep,
                                        std::uint64_t seed) {
  std::vector<double> out;
  out.reserve(n_rep);
  for_each_rep(kind, n_rep, seed,
               [&](Engine& rng) { out.push_back(arrival_times(kind, m.rate(), m.failures(), rng).back()); });
  return out;
}

std::vector<std::size_t> simulate_counts(ProcessKind kind, double rate, double horizon, std::size_t n_rep,
                                         std::uint64_t seed) {
  std::vector<std::size_t> out;
  out.reserve(n_rep);
  for_each_rep(kind, n_rep, seed, [&](Engine& rng) { out.push_back(count_events(kind, rate, horizon, rng)); });
  return out;
}

LrDistribution simulate_processes(const PointProcessPair& m, std::size_t n_rep, std::uint64_t seed) {
  if (n_rep == 0) throw std::invalid_argument("need at least one replication");
  auto to_lr = [&](std::vector<double> times) {
    for (double& t : times) t = point_process_lr(m, t);
    return times;
  };
  return LrDistribution::from_samples(to_lr(simulate_last_times(ProcessKind::poisson, m, n_rep, seed)),
                                      to_lr(simulate_last_times(ProcessKind::polya, m, n_rep, seed)));
}

}  // namespace lroc
