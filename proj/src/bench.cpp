#include "c4free/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "c4free/generators.hpp"
#include "c4free/verify.hpp"

namespace c4free {
namespace {

struct Cell {
  std::size_t d;
  std::uint64_t seed;
  Strategy strategy;
};

BenchRow run_cell(const BenchConfig& config, const Cell& cell) {
  const Graph g = random_regular(config.n, cell.d, cell.seed);
  PipelineConfig pc = config.pipeline;
  pc.strategy = cell.strategy;
  pc.frugal.seed = cell.seed;
  auto result = decompose(g, pc);
  auto report = verify_c4_free_colouring(g, result.colouring);
  if (!report.ok) {
    throw std::runtime_error("bench cell d=" + std::to_string(cell.d) + " seed=" +
                             std::to_string(cell.seed) + " strategy=" + to_string(cell.strategy) +
                             " failed verification: " + report.summary());
  }
  BenchRow row;
  row.n = config.n;
  row.d = cell.d;
  row.delta = g.max_degree();
  row.strategy = cell.strategy;
  row.alpha = pc.frugal.alpha;
  row.seed = cell.seed;
  row.colours = result.colouring.classes;
  row.sqrt_ratio = result.stats.sqrt_ratio;
  row.verify_ok = report.ok;
  row.millis = config.timing ? result.stats.millis : 0.0;
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<Cell> cells;
  for (auto d : config.degrees) {
    for (auto seed : config.seeds) {
      for (auto s : config.strategies) cells.push_back({d, seed, s});
    }
  }
  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed) {
      const std::size_t i = next++;
      if (i >= cells.size()) return;
      try {
        rows[i] = run_cell(config, cells[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(cells.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kBenchHeader << '\n';
  char buf[64];
  for (const auto& r : rows) {
    out << r.n << ',' << r.d << ',' << r.delta << ',' << to_string(r.strategy) << ',';
    std::snprintf(buf, sizeof buf, "%g", r.alpha);
    out << buf << ',' << r.seed << ',' << r.colours << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.sqrt_ratio);
    out << buf << ',' << (r.verify_ok ? "true" : "false") << ',';
    std::snprintf(buf, sizeof buf, "%.3f", r.millis);
    out << buf << '\n';
  }
}

}  // namespace c4free
