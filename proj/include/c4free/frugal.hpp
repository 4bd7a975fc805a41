#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "c4free/graph.hpp"

namespace c4free {

enum class FrugalMode { strict, empirical };

/// Input that violates a mode's preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FrugalParams {
  double alpha = 18.0;
  std::uint64_t seed = 1;
  /// Extra attempts after the first when the retention target is missed.
  int max_resamples = 20;
  FrugalMode mode = FrugalMode::strict;
  /// Empirical mode: required min over v of d_H(v) / d_G(v), in [0, 1);
  /// 0 accepts the first attempt.
  double empirical_retention = 0.3;
  /// Strict mode: smallest maximum degree accepted.
  std::size_t strict_delta_floor = 16;
  /// Strict mode: minimum degree must be at least (log Delta)^2 in this base.
  double log_base = 2.718281828459045;
};

/// Retention guaranteed in strict mode: (1 - 4 / sqrt(alpha))^2 / 2.
double strict_beta(double alpha);

/// (log_base Delta)^2.
double log_squared(double delta, double base = 2.718281828459045);

struct Bipartition {
  /// side[v] is 0 for A, 1 for B.
  std::vector<std::uint8_t> side;
  /// cut[e] is 1 for the edges of H0 (endpoints on opposite sides).
  std::vector<std::uint8_t> cut;
};

/// Random sides, then single-vertex flips while any flip enlarges the cut.
/// At the fixpoint each v keeps at least ceil(d(v) / 2) cut edges.
Bipartition maxcut_bipartition(const Graph& g, std::uint64_t seed);

/// Contiguous colour range [first, first + size).
struct Palette {
  Colour first = 0;
  std::size_t size = 0;
};

/// State of one colouring round: the surviving edges (a mask over the host
/// graph's edges), the colouring so far and the vertices awaiting Phase II.
struct RoundState {
  std::vector<std::uint8_t> alive;
  VertexColouring chi;
  std::vector<Vertex> uncoloured;
  std::size_t phase1_uncoloured = 0;
  std::size_t phase1_deleted = 0;
  std::size_t phase2_deleted = 0;
  /// Smallest kept / degree-before ratio over Phase II vertices (1 if none).
  double phase2_worst_keep = 1.0;
};

/// Phase I on the vertices with side[v] == colour_side.
///
/// Every such vertex draws a uniform colour from the palette. A vertex a loses
/// its colour when at least d(a) / sqrt(alpha) of its alive neighbours b have
/// another alive neighbour with a's colour; the test runs on the initial draw
/// for all vertices at once. Vertices that keep their colour drop exactly
/// those conflicted edges. Alive edges must join the two sides.
///
/// Postcondition (checked, std::logic_error if broken): for every coloured a
/// and alive edge ab, a is the only alive neighbour of b with a's colour.
RoundState phase1_colour(const Graph& g, std::vector<std::uint8_t> alive,
                         std::span<const std::uint8_t> side, std::uint8_t colour_side,
                         Palette palette, double alpha, std::uint64_t seed, VertexColouring chi);

/// Phase II: colours the vertices left by Phase I in ascending id order.
///
/// Each gets the palette colour minimising the number of alive neighbours b
/// that already see that colour (ties to the smallest), and drops those edges.
/// Asserts that each such vertex keeps at least (1 - 1/alpha) of its edges,
/// which the counting bound guarantees whenever every degree is at most
/// max_degree; a violation throws std::logic_error.
void phase2_complete(const Graph& g, RoundState& state, std::span<const std::uint8_t> side,
                     std::uint8_t colour_side, Palette palette, double alpha,
                     std::size_t max_degree);

struct FrugalResult {
  /// Spanning subgraph of the input.
  Graph h;
  /// Mask over the input's edges selecting h.
  std::vector<std::uint8_t> h_mask;
  /// Total, proper and 1-frugal on h; palette 2 * palette_per_round.
  VertexColouring chi;
  std::vector<std::uint8_t> side;
  std::size_t palette_per_round = 0;
  int resamples_used = 0;
  /// Over vertices of positive degree in the input.
  double min_retention = 1.0;
  double mean_retention = 1.0;
  /// No attempt met the retention target; the best attempt is returned.
  bool degraded = false;
  std::array<RoundState, 2> rounds;
};

/// Finds a spanning subgraph H and a vertex colouring with 2 ceil(alpha Delta)
/// colours that is proper and 1-frugal on H: max-cut bipartition, then side A
/// and side B each coloured by Phase I + Phase II with disjoint palettes.
///
/// Strict mode requires alpha > 16, Delta >= strict_delta_floor and every
/// non-isolated vertex of degree >= (log Delta)^2, and accepts an attempt when
/// d_H(v) >= strict_beta(alpha) d_G(v) for all v. Empirical mode accepts any
/// graph with an edge and alpha > 0, and requires min retention >=
/// empirical_retention. Misses are resampled with fresh randomness up to
/// max_resamples times. Throws PreconditionError.
FrugalResult frugal_colour(const Graph& g, const FrugalParams& params);

}  // namespace c4free
