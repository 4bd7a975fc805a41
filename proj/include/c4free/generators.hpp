#pragma once

#include <cstdint>

#include "c4free/graph.hpp"

namespace c4free {

Graph complete_graph(std::size_t t);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();

/// Uniformly random labelled tree on n vertices (Prüfer sequence).
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Simple d-regular graph on n vertices from the pairing model.
///
/// Stubs are paired one at a time, rejecting pairs that would create a loop
/// or a parallel edge. When the remaining stubs admit no valid pair, two of
/// them are spliced into a random existing edge; if that fails too the whole
/// pairing is restarted, at most `max_restarts` times. Throws GraphError when
/// n*d is odd, d >= n, or the restart cap is exhausted.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, int max_restarts = 100);

/// G(n, p): each pair independently with probability p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

}  // namespace c4free
