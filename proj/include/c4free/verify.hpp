#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "c4free/graph.hpp"

namespace c4free {

enum class ViolationKind { c4, improper, not_frugal, cycle };

const char* to_string(ViolationKind kind);

/// One failed check. `witness` holds a 4-cycle (w, x, y, z) for c4, the
/// endpoints of a monochromatic edge for improper, (vertex, neighbour,
/// neighbour) for not_frugal and the cycle's vertices for cycle. `colour` is
/// the offending class (or the repeated vertex colour).
struct Violation {
  ViolationKind kind;
  std::vector<Vertex> witness;
  Colour colour = kNoColour;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
  /// Total violations found; only the first `kMaxStored` are kept.
  std::size_t violation_count = 0;

  static constexpr std::size_t kMaxStored = 64;

  void add(Violation v);

  /// "OK" or "FAIL kind=<kind> witness=a,b,c,d class=<c>" for the first
  /// violation.
  std::string summary() const;
  /// Multi-line human-readable listing of all stored violations.
  std::string text() const;
};

/// Some 4-cycle (w, x, y, z) of g, or nothing if g is C4-free.
/// Common-neighbour counting: O(sum of squared degrees), stops at the first hit.
std::optional<std::array<Vertex, 4>> find_c4(const Graph& g);

/// Checks that every colour class, taken as a spanning subgraph, has no C4.
/// Throws std::invalid_argument if the colouring is not total on g's edges.
VerificationReport verify_c4_free_colouring(const Graph& g, const EdgeColouring& colouring);

/// Same check on the graph formed by the colouring's own edge list.
VerificationReport verify_c4_free_colouring(const EdgeColouring& colouring);

/// Checks properness and 1-frugality of chi on h.
/// Throws std::invalid_argument if chi is partial or sized for another graph.
VerificationReport verify_frugal_proper(const Graph& h, const VertexColouring& chi);

/// Checks that every colour class is a forest.
VerificationReport verify_forest_classes(const EdgeColouring& colouring);

bool is_forest(std::size_t n, std::span<const Edge> edges);

/// True iff the sums a + b mod m (a <= b taken from S, repeats allowed) are
/// pairwise distinct. S is treated as a set of residues mod m.
bool is_sidon(std::span<const std::uint64_t> set, std::uint64_t m);

}  // namespace c4free
