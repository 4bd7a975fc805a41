#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "c4free/pipeline.hpp"

namespace c4free {

struct BenchRow {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t delta = 0;
  Strategy strategy = Strategy::automatic;
  double alpha = 0;
  std::uint64_t seed = 0;
  std::size_t colours = 0;
  double sqrt_ratio = 0;
  bool verify_ok = false;
  double millis = 0;
};

struct BenchConfig {
  std::size_t n = 1000;
  std::vector<std::size_t> degrees;
  std::vector<std::uint64_t> seeds;
  std::vector<Strategy> strategies;
  /// Frugal parameters, strategy and thresholds; the seed and strategy are
  /// overridden per cell.
  PipelineConfig pipeline;
  unsigned jobs = 1;
  /// Record wall time; off by default so the CSV is byte-reproducible.
  bool timing = false;
};

inline constexpr const char* kBenchHeader =
    "n,d,Delta,strategy,alpha,seed,colours,sqrt_ratio,verify_ok,millis";

/// One row per (d, seed, strategy) in that nesting order. Each cell builds
/// random_regular(n, d, seed), decomposes it with pipeline seed `seed` and
/// re-verifies the result; any failure aborts the whole run with
/// std::runtime_error. Cells run on up to `jobs` threads.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace c4free
