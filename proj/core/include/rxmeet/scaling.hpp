#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rxmeet/gen.hpp"

namespace rxmeet {

// Empirical scaling harness: times dispatch() on generated pairs of growing
// size and fits a log-log slope, so linear routes and the quadratic
// baseline can be told apart by measurement.

struct BenchRecord {
  std::string route;
  std::size_t size_m = 0;
  std::size_t size_n = 0;
  int trial = 0;
  double seconds = 0.0;
  Verdict verdict = Verdict::Empty;
  std::uint64_t seed = 0;
};

struct ScalingReport {
  std::string route;
  double slope = 0.0;
  double slope_stderr = 0.0;
  int points = 0;  // sizes that produced a usable median
  std::vector<BenchRecord> records;
  std::vector<std::string> warnings;
};

// Route ids accepted by run_scaling: the nine form-pair routines, the
// closure/runalt/star-reduce cases and "baseline_hard".
const std::vector<std::string>& scaling_route_ids();
bool is_baseline_route(const std::string& route_id);

// Default size ladders (geometric, five points each).
std::vector<std::size_t> default_linear_sizes();
std::vector<std::size_t> default_baseline_sizes();

// For each size: generate a pair, verify the expected route is taken and
// any witness is sound (untimed), then record `trials` timed runs. One CSV
// row per timed run: route,size_m,size_n,trial,seconds,verdict,seed.
// Medians below the clock-resolution floor are dropped with a warning.
ScalingReport run_scaling(const std::string& route_id,
                          const std::vector<std::size_t>& sizes, int trials,
                          std::uint64_t seed, std::ostream* csv = nullptr);

void write_csv_header(std::ostream& os);

}  // namespace rxmeet
