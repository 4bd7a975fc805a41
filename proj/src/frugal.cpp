#include "c4free/frugal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "c4free/rng.hpp"
#include "c4free/verify.hpp"

namespace c4free {

double strict_beta(double alpha) {
  const double f = 1.0 - 4.0 / std::sqrt(alpha);
  return 0.5 * f * f;
}

double log_squared(double delta, double base) {
  if (delta <= 1.0) return 0.0;
  const double l = std::log(delta) / std::log(base);
  return l * l;
}

Bipartition maxcut_bipartition(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  Bipartition out;
  out.side.resize(n);
  for (auto& s : out.side) s = static_cast<std::uint8_t>(rng.below(2));

  auto same_side = [&](Vertex v) {
    std::size_t same = 0;
    for (Vertex w : g.neighbours(v)) same += out.side[w] == out.side[v];
    return same;
  };
  std::deque<Vertex> work;
  std::vector<std::uint8_t> queued(n, 1);
  for (Vertex v = 0; v < n; ++v) work.push_back(v);
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    queued[v] = 0;
    if (2 * same_side(v) <= g.degree(v)) continue;
    out.side[v] ^= 1;
    for (Vertex w : g.neighbours(v)) {
      if (!queued[w]) {
        queued[w] = 1;
        work.push_back(w);
      }
    }
  }
  out.cut.resize(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const auto& e = g.edge(id);
    out.cut[id] = out.side[e.u] != out.side[e.v];
  }
  return out;
}

namespace {

std::size_t alive_degree(const Graph& g, const std::vector<std::uint8_t>& alive, Vertex v) {
  std::size_t d = 0;
  for (EdgeId id : g.incident_edges(v)) d += alive[id];
  return d;
}

void check_palette(const VertexColouring& chi, Palette palette) {
  if (palette.size == 0) throw std::invalid_argument("empty palette");
  if (palette.first + palette.size > chi.palette) {
    throw std::invalid_argument("palette range exceeds the colouring's palette");
  }
}

}  // namespace

RoundState phase1_colour(const Graph& g, std::vector<std::uint8_t> alive,
                         std::span<const std::uint8_t> side, std::uint8_t colour_side,
                         Palette palette, double alpha, std::uint64_t seed, VertexColouring chi) {
  check_palette(chi, palette);
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  std::vector<Colour> draw(n, kNoColour);
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == colour_side) draw[v] = static_cast<Colour>(rng.below(palette.size));
  }

  // conflicted[e] for e = ab: b has another alive neighbour drawing a's colour.
  std::vector<std::uint8_t> conflicted(g.num_edges(), 0);
  std::vector<std::uint32_t> count(palette.size, 0);
  for (Vertex b = 0; b < n; ++b) {
    if (side[b] == colour_side) continue;
    auto nb = g.neighbours(b);
    auto ids = g.incident_edges(b);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (alive[ids[i]]) ++count[draw[nb[i]]];
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (alive[ids[i]] && count[draw[nb[i]]] >= 2) conflicted[ids[i]] = 1;
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (alive[ids[i]]) count[draw[nb[i]]] = 0;
    }
  }

  RoundState state;
  for (Vertex a = 0; a < n; ++a) {
    if (side[a] != colour_side) continue;
    std::size_t degree = 0;
    std::size_t conflicts = 0;
    for (EdgeId id : g.incident_edges(a)) {
      if (!alive[id]) continue;
      ++degree;
      conflicts += conflicted[id];
    }
    const double c = static_cast<double>(conflicts);
    const double d = static_cast<double>(degree);
    if (c * c * alpha >= d * d) {
      state.uncoloured.push_back(a);
      continue;
    }
    chi.colour[a] = palette.first + draw[a];
    for (EdgeId id : g.incident_edges(a)) {
      if (alive[id] && conflicted[id]) {
        alive[id] = 0;
        ++state.phase1_deleted;
      }
    }
  }

  for (Vertex b = 0; b < n; ++b) {
    if (side[b] == colour_side) continue;
    auto nb = g.neighbours(b);
    auto ids = g.incident_edges(b);
    bool clash = false;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (alive[ids[i]] && chi.is_coloured(nb[i])) {
        clash |= ++count[chi.colour[nb[i]] - palette.first] > 1;
      }
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (alive[ids[i]] && chi.is_coloured(nb[i])) count[chi.colour[nb[i]] - palette.first] = 0;
    }
    if (clash) {
      throw std::logic_error("phase I: vertex " + std::to_string(b) +
                             " sees a colour twice after pruning");
    }
  }

  state.phase1_uncoloured = state.uncoloured.size();
  state.alive = std::move(alive);
  state.chi = std::move(chi);
  return state;
}

void phase2_complete(const Graph& g, RoundState& state, std::span<const std::uint8_t> side,
                     std::uint8_t colour_side, Palette palette, double alpha,
                     std::size_t max_degree) {
  check_palette(state.chi, palette);
  if (static_cast<double>(palette.size) + 1e-9 < alpha * static_cast<double>(max_degree)) {
    throw std::invalid_argument("phase II: palette smaller than alpha * max_degree");
  }
  const std::size_t n = g.num_vertices();
  auto& alive = state.alive;
  auto& chi = state.chi;

  // Colours (palette-relative) already present around each opposite vertex.
  std::vector<std::vector<Colour>> seen(n);
  for (Vertex b = 0; b < n; ++b) {
    if (side[b] == colour_side) continue;
    auto nb = g.neighbours(b);
    auto ids = g.incident_edges(b);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (alive[ids[i]] && chi.is_coloured(nb[i])) seen[b].push_back(chi.colour[nb[i]] - palette.first);
    }
  }

  std::vector<std::uint32_t> score(palette.size, 0);
  std::vector<Colour> touched;
  auto uncoloured = state.uncoloured;
  std::sort(uncoloured.begin(), uncoloured.end());
  for (Vertex a : uncoloured) {
    const std::size_t before = alive_degree(g, alive, a);

    touched.clear();
    auto nb = g.neighbours(a);
    auto ids = g.incident_edges(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!alive[ids[i]]) continue;
      for (Colour c : seen[nb[i]]) {
        if (score[c]++ == 0) touched.push_back(c);
      }
    }
    Colour best = 0;
    if (touched.size() < palette.size) {
      while (score[best] != 0) ++best;
    } else {
      for (Colour c = 1; c < palette.size; ++c) {
        if (score[c] < score[best]) best = c;
      }
    }
    for (Colour c : touched) score[c] = 0;

    std::size_t dropped = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!alive[ids[i]]) continue;
      auto& around = seen[nb[i]];
      if (std::find(around.begin(), around.end(), best) != around.end()) {
        alive[ids[i]] = 0;
        ++dropped;
      } else {
        around.push_back(best);
      }
    }
    chi.colour[a] = palette.first + best;
    state.phase2_deleted += dropped;

    const std::size_t kept = before - dropped;
    if (before > 0) {
      state.phase2_worst_keep =
          std::min(state.phase2_worst_keep, static_cast<double>(kept) / static_cast<double>(before));
    }
    if (static_cast<double>(kept) * alpha + 1e-9 < (alpha - 1.0) * static_cast<double>(before)) {
      throw std::logic_error("phase II: vertex " + std::to_string(a) + " kept " +
                             std::to_string(kept) + " of " + std::to_string(before) +
                             " edges, below (1 - 1/alpha)");
    }
  }
  state.uncoloured.clear();
}

namespace {

struct Attempt {
  std::vector<std::uint8_t> side;
  std::array<RoundState, 2> rounds;
  double min_retention = 1.0;
  double mean_retention = 1.0;
  bool accepted = false;
};

Attempt run_attempt(const Graph& g, const FrugalParams& params, std::size_t per_round,
                    std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  Attempt out;
  auto bip = maxcut_bipartition(g, derive_seed(seed, 0));
  out.side = std::move(bip.side);

  VertexColouring chi{std::vector<Colour>(n, kNoColour), 2 * per_round};
  const Palette pal_a{0, per_round};
  const Palette pal_b{static_cast<Colour>(per_round), per_round};
  const std::size_t delta = g.max_degree();

  out.rounds[0] = phase1_colour(g, std::move(bip.cut), out.side, 0, pal_a, params.alpha,
                                derive_seed(seed, 1), std::move(chi));
  phase2_complete(g, out.rounds[0], out.side, 0, pal_a, params.alpha, delta);
  out.rounds[1] = phase1_colour(g, out.rounds[0].alive, out.side, 1, pal_b, params.alpha,
                                derive_seed(seed, 2), out.rounds[0].chi);
  phase2_complete(g, out.rounds[1], out.side, 1, pal_b, params.alpha, delta);

  const auto& alive = out.rounds[1].alive;
  const double beta = strict_beta(params.alpha);
  bool strict_ok = true;
  double sum = 0;
  std::size_t counted = 0;
  out.min_retention = 1.0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d == 0) continue;
    const std::size_t kept = alive_degree(g, alive, v);
    const double r = static_cast<double>(kept) / static_cast<double>(d);
    out.min_retention = std::min(out.min_retention, r);
    sum += r;
    ++counted;
    strict_ok &= static_cast<double>(kept) >= beta * static_cast<double>(d);
  }
  out.mean_retention = counted ? sum / static_cast<double>(counted) : 1.0;
  out.accepted = params.mode == FrugalMode::strict
                     ? strict_ok
                     : out.min_retention >= params.empirical_retention;
  return out;
}

}  // namespace

FrugalResult frugal_colour(const Graph& g, const FrugalParams& params) {
  const std::size_t delta = g.max_degree();
  if (params.mode == FrugalMode::strict) {
    if (!(params.alpha > 16.0)) throw PreconditionError("strict mode requires alpha > 16");
    if (delta < params.strict_delta_floor) {
      throw PreconditionError("strict mode requires max degree >= " +
                              std::to_string(params.strict_delta_floor) + ", got " +
                              std::to_string(delta));
    }
    const double need = log_squared(static_cast<double>(delta), params.log_base);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const std::size_t d = g.degree(v);
      if (d > 0 && static_cast<double>(d) < need) {
        throw PreconditionError("strict mode requires min degree >= (log max degree)^2 = " +
                                std::to_string(need) + ", vertex " + std::to_string(v) +
                                " has degree " + std::to_string(d));
      }
    }
  } else {
    if (!(params.alpha > 0.0)) throw PreconditionError("alpha must be positive");
    if (g.num_edges() == 0) throw PreconditionError("graph has no edges");
    if (!(params.empirical_retention >= 0.0 && params.empirical_retention < 1.0)) {
      throw PreconditionError("empirical_retention must lie in [0, 1)");
    }
  }
  if (params.max_resamples < 0) throw PreconditionError("max_resamples must be nonnegative");

  const auto per_round = static_cast<std::size_t>(std::ceil(params.alpha * static_cast<double>(delta)));
  if (per_round == 0) throw PreconditionError("palette would be empty");

  Attempt best;
  int used = 0;
  for (int attempt = 0; attempt <= params.max_resamples; ++attempt) {
    auto current = run_attempt(g, params, per_round, derive_seed(params.seed, attempt));
    used = attempt;
    const bool better = attempt == 0 || (current.accepted && !best.accepted) ||
                        (current.accepted == best.accepted && current.min_retention > best.min_retention);
    if (better) best = std::move(current);
    if (best.accepted) break;
  }

  FrugalResult out;
  out.h_mask = best.rounds[1].alive;
  out.h = g.masked(out.h_mask);
  out.chi = best.rounds[1].chi;
  out.side = std::move(best.side);
  out.palette_per_round = per_round;
  out.resamples_used = used;
  out.min_retention = best.min_retention;
  out.mean_retention = best.mean_retention;
  out.degraded = !best.accepted;
  out.rounds = std::move(best.rounds);

  auto report = verify_frugal_proper(out.h, out.chi);
  if (!report.ok) throw std::logic_error("frugal colouring failed verification: " + report.summary());
  return out;
}

}  // namespace c4free
