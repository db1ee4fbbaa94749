#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/errors.hpp"
#include "posetdim/util.hpp"

namespace posetdim {

/**
 * Finite digraph on dense vertex ids 0..nv-1. Arcs are kept sorted and unique,
 * so the position of an arc in `arcs` is a stable id for it (arc_digraph and
 * theorem6_construct rely on that). Self-loops are rejected.
 *
 * An undirected graph is represented by listing each edge once as (min,max);
 * the coloring routines symmetrize, so arc direction never affects them.
 */
struct Digraph {
  int nv = 0;
  std::vector<std::pair<int, int>> arcs;

  static Digraph from_arcs(int nv, std::vector<std::pair<int, int>> arcs) {
    for (auto [u, v] : arcs) {
      if (u < 0 || v < 0 || u >= nv || v >= nv)
        throw BadParameter("digraph arc endpoint out of range");
      if (u == v) throw BadParameter("digraph self-loop");
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return Digraph{nv, std::move(arcs)};
  }

  int arc_count() const { return static_cast<int>(arcs.size()); }

  /** Index of arc (u,v) in `arcs`, or -1. */
  int arc_index(int u, int v) const {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), std::pair{u, v});
    if (it == arcs.end() || *it != std::pair{u, v}) return -1;
    return static_cast<int>(it - arcs.begin());
  }

  std::vector<std::vector<int>> out_adjacency() const {
    std::vector<std::vector<int>> out(nv);
    for (auto [u, v] : arcs) out[u].push_back(v);
    return out;
  }

  /** Symmetrized adjacency bitsets (undirected view; used by the coloring code). */
  std::vector<Bits> undirected_adjacency() const {
    std::vector<Bits> adj(nv, Bits(nv));
    for (auto [u, v] : arcs) {
      adj[u].set(v);
      adj[v].set(u);
    }
    return adj;
  }

  /** Lexicographically smallest topological order, or nullopt on a cycle. */
  std::optional<std::vector<int>> topological_order() const {
    std::vector<int> indeg(nv, 0);
    auto out = out_adjacency();
    for (auto& [u, v] : arcs) indeg[v]++;
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < nv; ++v)
      if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(nv);
    while (!ready.empty()) {
      int v = ready.top();
      ready.pop();
      order.push_back(v);
      for (int w : out[v])
        if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != nv) return std::nullopt;
    return order;
  }

  bool is_acyclic() const { return topological_order().has_value(); }
};

/**
 * Arc digraph: one vertex per arc of g (in arc-id order), and an arc from
 * uv to vw whenever both belong to g. Iterating twice yields the digraph
 * whose vertices are the length-2 directed paths uvw of g and whose arcs
 * join uvw to vwx.
 */
inline Digraph arc_digraph(const Digraph& g) {
  std::vector<std::vector<int>> arcs_from(g.nv);
  for (int i = 0; i < g.arc_count(); ++i) arcs_from[g.arcs[i].first].push_back(i);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g.arc_count(); ++i)
    for (int j : arcs_from[g.arcs[i].second]) out.emplace_back(i, j);
  return Digraph::from_arcs(g.arc_count(), std::move(out));
}

}  // namespace posetdim
