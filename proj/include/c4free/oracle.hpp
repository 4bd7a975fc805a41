#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "c4free/graph.hpp"

namespace c4free {

/// Raised when an exact search is asked for an instance above its cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kExactExCap = 10;

/// ex(n, C4) by branch and bound, adding one vertex and its neighbourhood
/// among earlier vertices at a time.
std::size_t exact_ex_c4(std::size_t n, std::size_t cap = kExactExCap);

/// Upper bound n(1 + sqrt(4n - 3)) / 4 on ex(n, C4), in integer arithmetic
/// with the square root rounded up.
std::uint64_t ex_c4_upper_bound(std::uint64_t n);

/// ceil(binom(delta + 1, 2) / ex(delta + 1, C4)): a lower bound on the number
/// of classes of any C4-free colouring of K_{delta+1}. Without an explicit ex
/// value, uses exact_ex_c4 up to its cap and ex_c4_upper_bound beyond.
std::uint64_t phi_lower_bound(std::uint64_t delta, std::optional<std::uint64_t> ex_value = {});

/// Size limits for the backtracking colouring search.
///
/// With k colours the search accepts graphs of at most
/// floor(edges_at_3 * ln 3 / ln k) edges (unbounded for k = 1), so the
/// nominal search space stays near 3^edges_at_3. Graphs must have at most
/// 64 vertices; with a single colour the question is just whether g is
/// C4-free, which has no size limit.
struct OracleLimits {
  std::size_t edges_at_3 = 15;

  std::size_t edge_cap(std::size_t colours) const;
};

/// A C4-free colouring of g with at most k colours, or nothing if none exists.
/// Edges are ordered by a line-graph ordering, the first edge's colour is
/// fixed and new colours are opened in order. Throws OracleCapExceeded.
std::optional<EdgeColouring> find_c4_free_colouring(const Graph& g, std::size_t k,
                                                     const OracleLimits& limits = {});

/// Least m admitting a C4-free colouring of g with m colours, searching
/// m = 1..max_colours. Throws OracleCapExceeded if the graph is too large for
/// some m that has to be searched, or if no m <= max_colours works.
std::size_t exact_phi_c4(const Graph& g, std::size_t max_colours,
                         const OracleLimits& limits = {});

}  // namespace c4free
