#include "c4free/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "c4free/verify.hpp"
#include "c4free/rng.hpp"

namespace c4free {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::pipeline: return "pipeline";
    case Strategy::forest: return "forest";
    case Strategy::greedy: return "greedy";
    case Strategy::automatic: return "auto";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "pipeline") return Strategy::pipeline;
  if (name == "forest") return Strategy::forest;
  if (name == "greedy") return Strategy::greedy;
  if (name == "auto") return Strategy::automatic;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

std::size_t default_threshold(std::size_t delta, double log_base) {
  const double l2 = log_squared(static_cast<double>(delta), log_base);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(l2 - 1e-12)));
}

std::size_t default_max_iterations(std::size_t delta) {
  if (delta <= 1) return 10;
  return 10 * static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(delta)))) + 10;
}

double progress_beta(const FrugalParams& params) {
  return params.mode == FrugalMode::strict ? strict_beta(params.alpha) : params.empirical_retention;
}

std::string stats_to_json(const PipelineStats& s) {
  nlohmann::ordered_json j;
  j["strategy"] = to_string(s.strategy);
  j["chosen"] = to_string(s.chosen);
  j["n"] = s.n;
  j["m"] = s.m;
  j["delta"] = s.delta;
  j["threshold"] = s.threshold;
  j["iterations"] = s.iterations();
  auto column = [&](const char* key, auto field) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& it : s.per_iteration) arr.push_back(it.*field);
    j[key] = std::move(arr);
  };
  column("iter_delta", &IterationStats::delta);
  column("iter_core_edges", &IterationStats::core_edges);
  column("iter_classes", &IterationStats::classes);
  column("iter_complete_order", &IterationStats::complete_order);
  column("iter_min_retention", &IterationStats::min_retention);
  column("iter_mean_retention", &IterationStats::mean_retention);
  column("iter_frugal_resamples", &IterationStats::frugal_resamples);
  column("iter_progress_resamples", &IterationStats::progress_resamples);
  column("iter_next_delta", &IterationStats::next_delta);
  column("iter_degraded", &IterationStats::degraded);
  j["peeled_edges"] = s.peeled_edges;
  j["remainder_edges"] = s.remainder_edges;
  j["remainder_degeneracy"] = s.remainder_degeneracy;
  j["remainder_classes"] = s.remainder_classes;
  j["total_classes"] = s.total_classes;
  j["sqrt_ratio"] = s.sqrt_ratio;
  j["millis"] = s.millis;
  j["degraded"] = s.degraded;
  return j.dump(2) + "\n";
}

PeelResult peel_low_degree(const Graph& g, std::size_t threshold) {
  if (threshold == 0) throw std::invalid_argument("peeling threshold must be at least 1");
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<std::uint8_t> removed(n, 0), queued(n, 0);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] > 0 && deg[v] < threshold) {
      queued[v] = 1;
      queue.push_back(v);
    }
  }
  PeelResult out;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    removed[v] = 1;
    out.order.push_back(v);
    for (Vertex w : g.neighbours(v)) {
      if (removed[w]) continue;
      out.peeled.push_back(make_edge(v, w));
      if (--deg[w] < threshold && !queued[w]) {
        queued[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Edge> core;
  for (const auto& e : g.edges()) {
    if (!removed[e.u] && !removed[e.v]) core.push_back(e);
  }
  out.core = Graph(n, std::move(core));
  return out;
}

EdgeColouring pullback_decompose(const Graph& h, const VertexColouring& chi,
                                 const CompleteColouring& kt) {
  if (!chi.is_total() || chi.colour.size() != h.num_vertices()) {
    throw std::invalid_argument("pullback: vertex colouring must be total on H");
  }
  for (Colour c : chi.colour) {
    if (c >= kt.order()) {
      throw std::invalid_argument("pullback: vertex colour " + std::to_string(c) +
                                  " outside K_" + std::to_string(kt.order()));
    }
  }
  auto pre = verify_frugal_proper(h, chi);
  if (!pre.ok) throw std::invalid_argument("pullback: " + pre.summary());

  std::vector<Colour> colour(h.num_edges());
  for (EdgeId id = 0; id < h.num_edges(); ++id) {
    const auto& e = h.edge(id);
    colour[id] = kt.class_of(chi.colour[e.u], chi.colour[e.v]);
  }
  auto out = make_edge_colouring(h, std::move(colour));
  auto post = verify_c4_free_colouring(h, out);
  if (!post.ok) throw std::logic_error("pullback produced a C4: " + post.summary());
  return out;
}

DegeneracyOrder degeneracy_ordering(const Graph& g) {
  // Batagelj-Zaversnik: vertices sorted by current degree in one array, with
  // bucket starts; extracting from the front and decrementing neighbours keeps
  // the array sorted.
  const std::size_t n = g.num_vertices();
  DegeneracyOrder out;
  if (n == 0) return out;
  const std::size_t maxd = g.max_degree();
  std::vector<std::size_t> deg(n), bin(maxd + 1, 0), pos(n);
  std::vector<Vertex> vert(n);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    ++bin[deg[v]];
  }
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  for (Vertex v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = maxd; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  out.order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = vert[i];
    out.order.push_back(v);
    out.k = std::max(out.k, deg[v]);
    for (Vertex w : g.neighbours(v)) {
      if (deg[w] > deg[v]) {
        const std::size_t dw = deg[w];
        const std::size_t pw = pos[w];
        const std::size_t ps = bin[dw];
        const Vertex u = vert[ps];
        if (u != w) {
          vert[pw] = u;
          pos[u] = pw;
          vert[ps] = w;
          pos[w] = ps;
        }
        ++bin[dw];
        --deg[w];
      }
    }
  }
  return out;
}

EdgeColouring forest_partition(const Graph& g, const std::vector<Vertex>& ordering, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (ordering.size() != n) throw std::invalid_argument("forest_partition: ordering has wrong length");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ordering[i] >= n || pos[ordering[i]] != n) {
      throw std::invalid_argument("forest_partition: ordering is not a permutation");
    }
    pos[ordering[i]] = i;
  }
  std::vector<Colour> colour(g.num_edges(), kNoColour);
  for (Vertex v : ordering) {
    Colour label = 0;
    auto nb = g.neighbours(v);
    auto ids = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (pos[nb[i]] > pos[v]) colour[ids[i]] = label++;
    }
    if (label > k) {
      throw std::invalid_argument("forest_partition: vertex " + std::to_string(v) + " has " +
                                  std::to_string(label) + " forward edges, above k = " +
                                  std::to_string(k));
    }
  }
  auto out = make_edge_colouring(g, std::move(colour));
  auto report = verify_forest_classes(out);
  if (!report.ok) throw std::logic_error("forest_partition produced a cycle: " + report.summary());
  return out;
}

EdgeColouring greedy_c4_free(const Graph& g) {
  const std::size_t n = g.num_vertices();
  // Per vertex, (class, neighbour) pairs kept sorted so a class is a range.
  std::vector<std::vector<std::pair<Colour, Vertex>>> adj(n);
  std::vector<std::uint64_t> mark(n, 0);
  std::uint64_t stamp = 0;
  auto range = [&](Vertex v, Colour c) {
    const auto& a = adj[v];
    auto lo = std::lower_bound(a.begin(), a.end(), std::pair<Colour, Vertex>{c, 0});
    auto hi = std::lower_bound(lo, a.end(), std::pair<Colour, Vertex>{c + 1, 0});
    return std::pair{lo, hi};
  };
  auto insert = [&](Vertex v, Colour c, Vertex w) {
    auto& a = adj[v];
    const std::pair<Colour, Vertex> item{c, w};
    a.insert(std::lower_bound(a.begin(), a.end(), item), item);
  };

  std::vector<Colour> colour(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const auto [u, v] = g.edge(id);
    for (Colour c = 0;; ++c) {
      auto [ulo, uhi] = range(u, c);
      auto [vlo, vhi] = range(v, c);
      bool closes = false;
      if (ulo != uhi && vlo != vhi) {
        ++stamp;
        for (auto it = vlo; it != vhi; ++it) mark[it->second] = stamp;
        // u - x - z - v - u with x in N_c(u), z in N_c(x) and N_c(v).
        for (auto it = ulo; it != uhi && !closes; ++it) {
          auto [xlo, xhi] = range(it->second, c);
          for (auto jt = xlo; jt != xhi; ++jt) {
            if (jt->second != u && mark[jt->second] == stamp) {
              closes = true;
              break;
            }
          }
        }
      }
      if (!closes) {
        colour[id] = c;
        insert(u, c, v);
        insert(v, c, u);
        break;
      }
    }
  }
  return make_edge_colouring(g, std::move(colour));
}

namespace {

std::vector<Colour> run_forest(const Graph& g, PipelineStats& stats) {
  auto ord = degeneracy_ordering(g);
  auto col = forest_partition(g, ord.order, ord.k);
  stats.remainder_edges = g.num_edges();
  stats.remainder_degeneracy = ord.k;
  stats.remainder_classes = col.classes;
  // col shares g's edge order, so its colours index by edge id directly.
  return col.colour;
}

std::vector<Colour> run_pipeline(const Graph& g, const PipelineConfig& cfg, PipelineStats& stats) {
  const std::size_t n = g.num_vertices();
  const std::size_t delta = g.max_degree();
  const std::size_t threshold = stats.threshold;
  const std::size_t max_iter = cfg.max_iterations.value_or(default_max_iterations(delta));
  if (max_iter == 0) throw std::invalid_argument("max_iterations must be positive");
  const double beta0 = progress_beta(cfg.frugal);

  std::vector<Colour> colour(g.num_edges(), kNoColour);
  Colour next_colour = 0;
  std::vector<Edge> remainder;
  std::map<std::size_t, CompleteColouring> complete_cache;
  CompleteOptions copts;
  copts.budget_slack = cfg.budget_slack;
  // Sidon classes are verified when built and the final colouring is
  // verified as a whole, so skip materialising K_t here.
  copts.verify = false;

  Graph current = g;
  if (delta > threshold) {
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
      auto peel = peel_low_degree(current, threshold);
      stats.peeled_edges += peel.peeled.size();
      remainder.insert(remainder.end(), peel.peeled.begin(), peel.peeled.end());
      current = std::move(peel.core);
      const std::size_t di = current.max_degree();
      if (current.num_edges() == 0 || di <= threshold) break;
      if (cfg.frugal.mode == FrugalMode::strict && di < cfg.frugal.strict_delta_floor) break;

      IterationStats it;
      it.delta = di;
      it.core_edges = current.num_edges();
      std::optional<FrugalResult> best;
      std::size_t best_next = 0;
      int tries = 0;
      for (int r = 0; r <= cfg.progress_resamples; ++r) {
        FrugalParams p = cfg.frugal;
        p.seed = derive_seed(cfg.frugal.seed, iter, static_cast<std::uint64_t>(r));
        auto fr = frugal_colour(current, p);
        std::size_t next_delta = 0;
        {
          std::vector<std::size_t> deg(n, 0);
          for (EdgeId id = 0; id < current.num_edges(); ++id) {
            if (fr.h_mask[id]) continue;
            const auto& e = current.edge(id);
            next_delta = std::max({next_delta, ++deg[e.u], ++deg[e.v]});
          }
        }
        tries = r;
        if (!best || next_delta < best_next) {
          best = std::move(fr);
          best_next = next_delta;
        }
        if (static_cast<double>(best_next) <= (1.0 - beta0) * static_cast<double>(di)) break;
      }
      const bool progressed = static_cast<double>(best_next) <= (1.0 - beta0) * static_cast<double>(di);

      const std::size_t t = 2 * best->palette_per_round;
      auto found = complete_cache.find(t);
      if (found == complete_cache.end()) {
        found = complete_cache.emplace(t, complete_c4_free_colouring(t, copts)).first;
      }
      auto classes = pullback_decompose(best->h, best->chi, found->second);
      for (std::size_t i = 0; i < classes.edges.size(); ++i) {
        const auto& e = classes.edges[i];
        colour[*g.edge_id(e.u, e.v)] = next_colour + classes.colour[i];
      }
      next_colour += static_cast<Colour>(classes.classes);

      it.classes = classes.classes;
      it.complete_order = t;
      it.min_retention = best->min_retention;
      it.mean_retention = best->mean_retention;
      it.frugal_resamples = best->resamples_used;
      it.progress_resamples = tries;
      it.next_delta = best_next;
      it.degraded = best->degraded || !progressed;
      stats.degraded |= it.degraded;
      stats.per_iteration.push_back(it);

      std::vector<std::uint8_t> rest(best->h_mask.size());
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = !best->h_mask[i];
      current = current.masked(rest);
      if (iter + 1 == max_iter && current.max_degree() > threshold) stats.degraded = true;
    }
  }
  remainder.insert(remainder.end(), current.edges().begin(), current.edges().end());

  const Graph rest(n, std::move(remainder));
  PipelineStats forest_stats;
  auto rest_colour = run_forest(rest, forest_stats);
  stats.remainder_edges = forest_stats.remainder_edges;
  stats.remainder_degeneracy = forest_stats.remainder_degeneracy;
  stats.remainder_classes = forest_stats.remainder_classes;
  for (EdgeId id = 0; id < rest.num_edges(); ++id) {
    const auto& e = rest.edge(id);
    colour[*g.edge_id(e.u, e.v)] = next_colour + rest_colour[id];
  }
  return colour;
}

Decomposition finish(const Graph& g, std::vector<Colour> colour, PipelineStats stats) {
  Decomposition out;
  out.colouring = make_edge_colouring(g, std::move(colour));
  auto report = verify_c4_free_colouring(g, out.colouring);
  if (!report.ok) {
    throw std::logic_error(std::string(to_string(stats.chosen)) +
                           " decomposition failed verification: " + report.summary());
  }
  stats.total_classes = out.colouring.classes;
  stats.sqrt_ratio = stats.delta == 0 ? 0.0
                                      : static_cast<double>(stats.total_classes) /
                                            std::sqrt(static_cast<double>(stats.delta));
  out.stats = std::move(stats);
  return out;
}

Decomposition decompose_with(const Graph& g, const PipelineConfig& cfg, Strategy strategy) {
  PipelineStats stats;
  stats.strategy = strategy;
  stats.chosen = strategy;
  stats.n = g.num_vertices();
  stats.m = g.num_edges();
  stats.delta = g.max_degree();
  stats.threshold = cfg.degree_threshold.value_or(default_threshold(stats.delta, cfg.frugal.log_base));
  if (stats.threshold == 0) throw std::invalid_argument("degree threshold must be at least 1");

  std::vector<Colour> colour;
  switch (strategy) {
    case Strategy::forest:
      colour = run_forest(g, stats);
      return finish(g, std::move(colour), std::move(stats));
    case Strategy::greedy:
      colour = greedy_c4_free(g).colour;
      return finish(g, std::move(colour), std::move(stats));
    case Strategy::pipeline:
      colour = run_pipeline(g, cfg, stats);
      return finish(g, std::move(colour), std::move(stats));
    case Strategy::automatic: {
      auto piped = decompose_with(g, cfg, Strategy::pipeline);
      auto forest = decompose_with(g, cfg, Strategy::forest);
      auto& pick = piped.stats.total_classes < forest.stats.total_classes ? piped : forest;
      pick.stats.strategy = Strategy::automatic;
      return std::move(pick);
    }
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace

Decomposition decompose(const Graph& g, const PipelineConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  auto out = decompose_with(g, config, config.strategy);
  out.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace c4free
