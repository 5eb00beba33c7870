#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lroc/lr_distribution.hpp"
#include "lroc/random.hpp"

namespace lroc {

// Poisson (P-) versus Polya (P+) failure processes with common rate and the
// first `failures` event times observed.
class PointProcessPair {
 public:
  PointProcessPair(double rate, int failures);

  double rate() const { return rate_; }
  int failures() const { return failures_; }

 private:
  double rate_;
  int failures_;
};

enum class ProcessKind { poisson, polya };

// L = exp(rate t) / (1 + rate t)^(n+1) for the last observed time t > 0.
// Minimised at t = n / rate.
double point_process_lr(const PointProcessPair& m, double last_time);
double point_process_log_lr(const PointProcessPair& m, double last_time);

// First `n` event times. Polya inter-event times are drawn by inverting the
// conditional survival ((1 + rate s) / (1 + rate t))^(k+1) after k events at s.
std::vector<double> arrival_times(ProcessKind kind, double rate, int n, Engine& rng);
std::size_t count_events(ProcessKind kind, double rate, double horizon, Engine& rng);

std::vector<double> simulate_last_times(ProcessKind kind, const PointProcessPair& m, std::size_t n_rep,
                                        std::uint64_t seed);
std::vector<std::size_t> simulate_counts(ProcessKind kind, double rate, double horizon, std::size_t n_rep,
                                         std::uint64_t seed);

// LR draws under each process (n_rep each) from simulated last failure times.
LrDistribution simulate_processes(const PointProcessPair& m, std::size_t n_rep, std::uint64_t seed);

}  // namespace lroc
