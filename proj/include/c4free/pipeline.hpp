#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c4free/frugal.hpp"
#include "c4free/graph.hpp"
#include "c4free/sidon.hpp"

namespace c4free {

enum class Strategy { pipeline, forest, greedy, automatic };

const char* to_string(Strategy s);
/// Accepts "pipeline", "forest", "greedy" and "auto"; throws std::invalid_argument.
Strategy parse_strategy(const std::string& name);

struct PipelineConfig {
  FrugalParams frugal;
  /// Peeling threshold; unset means max(1, ceil((log Delta)^2)) with the
  /// frugal log base and Delta the input's maximum degree.
  std::optional<std::size_t> degree_threshold;
  /// Unset means 10 * ceil(ln Delta) + 10.
  std::optional<std::size_t> max_iterations;
  std::size_t budget_slack = 0;
  Strategy strategy = Strategy::automatic;
  /// Extra frugal runs per iteration when the maximum degree does not drop
  /// to (1 - beta0) of its value.
  int progress_resamples = 5;
};

std::size_t default_threshold(std::size_t delta, double log_base = 2.718281828459045);
std::size_t default_max_iterations(std::size_t delta);

/// beta0 used by the progress check: strict_beta(alpha) in strict mode,
/// empirical_retention in empirical mode.
double progress_beta(const FrugalParams& params);

struct IterationStats {
  std::size_t delta = 0;
  std::size_t core_edges = 0;
  std::size_t classes = 0;
  std::size_t complete_order = 0;
  double min_retention = 0;
  double mean_retention = 0;
  int frugal_resamples = 0;
  int progress_resamples = 0;
  std::size_t next_delta = 0;
  bool degraded = false;
};

struct PipelineStats {
  Strategy strategy = Strategy::automatic;
  /// Strategy that produced the returned colouring (differs under auto).
  Strategy chosen = Strategy::automatic;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t delta = 0;
  std::size_t threshold = 0;
  std::vector<IterationStats> per_iteration;
  std::size_t peeled_edges = 0;
  std::size_t remainder_edges = 0;
  std::size_t remainder_degeneracy = 0;
  std::size_t remainder_classes = 0;
  std::size_t total_classes = 0;
  double sqrt_ratio = 0;
  double millis = 0;
  bool degraded = false;

  std::size_t iterations() const { return per_iteration.size(); }
};

/// Flat JSON object: scalars plus one array per per-iteration field.
std::string stats_to_json(const PipelineStats& stats);

struct PeelResult {
  /// Same vertex set as the input; minimum degree >= threshold over the
  /// vertices that still have edges, or no edges at all.
  Graph core;
  std::vector<Edge> peeled;
  /// Vertices in the order they were removed.
  std::vector<Vertex> order;
};

/// Repeatedly removes a vertex of current degree below the threshold.
/// Throws std::invalid_argument for threshold 0.
PeelResult peel_low_degree(const Graph& g, std::size_t threshold);

/// Each edge uv of h gets the class of {chi(u), chi(v)} in the colouring of K_t.
/// Throws std::invalid_argument when chi is not total, proper and 1-frugal on
/// h or uses colours >= t; throws std::logic_error if a class has a C4.
EdgeColouring pullback_decompose(const Graph& h, const VertexColouring& chi,
                                 const CompleteColouring& kt);

struct DegeneracyOrder {
  std::vector<Vertex> order;
  /// Largest degree seen at extraction; bounds every forward degree.
  std::size_t k = 0;
};

/// Smallest-last ordering via a bucket queue, ties broken by smallest id.
DegeneracyOrder degeneracy_ordering(const Graph& g);

/// Labels the forward edges of each vertex 0, 1, ...; each label class is a
/// forest. Throws std::invalid_argument if some forward degree exceeds k or the
/// ordering is not a permutation, std::logic_error if a class has a cycle.
EdgeColouring forest_partition(const Graph& g, const std::vector<Vertex>& ordering, std::size_t k);

/// Edges in id order, each into the smallest class where it closes no C4.
EdgeColouring greedy_c4_free(const Graph& g);

struct Decomposition {
  EdgeColouring colouring;
  PipelineStats stats;
};

/// C4-free edge colouring of g by the configured strategy. The result is
/// verified before return (std::logic_error on failure). Strict-mode frugal
/// preconditions surface as PreconditionError.
Decomposition decompose(const Graph& g, const PipelineConfig& config);

}  // namespace c4free
