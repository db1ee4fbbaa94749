#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/errors.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/realizer.hpp"
#include "posetdim/util.hpp"

namespace posetdim {

struct DimensionDecision {
  bool value = false;
  std::optional<Realizer> witness;  // present iff value
};

namespace detail {

// Search state: one reachability closure per bucket. Reversing the critical
// pair (x,y) in a bucket adds y <= x; the closure stays a partial order as
// long as x <= y is absent, which is exactly the feasibility test.
struct BucketState {
  std::vector<std::vector<Bits>> rel;  // rel[b][u] = up-set of u in bucket b

  bool reversed(int b, int x, int y) const { return rel[b][y].test(x); }
  bool feasible(int b, int x, int y) const { return !rel[b][x].test(y); }

  void add(int b, int x, int y) {
    auto& r = rel[b];
    int n = static_cast<int>(r.size());
    for (int u = 0; u < n; ++u)
      if (r[u].test(y)) r[u] |= r[x];
  }
};

inline std::vector<int> extension_of_closure(const std::vector<Bits>& rel) {
  int n = static_cast<int>(rel.size());
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    rel[u].for_each([&](int v) {
      if (v != u) arcs.emplace_back(u, v);
    });
  return *Digraph::from_arcs(n, std::move(arcs)).topological_order();
}

inline bool dimension_search(const Poset& p,
                             const std::vector<std::pair<int, int>>& pairs,
                             std::vector<char>& done, BucketState& st, int& used,
                             const Budget& budget) {
  budget.check("decide_dimension");
  int d = static_cast<int>(st.rel.size());
  // Drop pairs already reversed by transitive closure of earlier choices,
  // then pick the unassigned pair with the fewest feasible buckets.
  std::vector<int> revived;
  int best = -1, best_count = d + 1;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    if (done[i]) continue;
    auto [x, y] = pairs[i];
    bool implied = false;
    int count = 0;
    for (int b = 0; b < d && !implied; ++b) {
      if (st.reversed(b, x, y)) implied = true;
      if (st.feasible(b, x, y)) ++count;
    }
    if (implied) {
      done[i] = 2;
      revived.push_back(i);
      continue;
    }
    if (count < best_count) {
      best_count = count;
      best = i;
    }
  }
  if (best == -1) return true;  // every pair reversed somewhere
  if (best_count > 0) {
    auto [x, y] = pairs[best];
    done[best] = 1;
    int limit = std::min(used + 1, d);
    for (int b = 0; b < limit; ++b) {
      if (!st.feasible(b, x, y)) continue;
      auto saved = st.rel[b];
      bool was_empty = b == used;
      st.add(b, x, y);
      if (was_empty) ++used;
      if (dimension_search(p, pairs, done, st, used, budget)) return true;
      if (was_empty) --used;
      st.rel[b] = std::move(saved);
    }
    done[best] = 0;
  }
  for (int i : revived) done[i] = 0;
  return false;
}

}  // namespace detail

/**
 * Exact test for dim(p) <= d by assigning critical pairs to d buckets, where
 * a bucket stays feasible while its reversals keep the order acyclic; every
 * linear extension of a finished bucket reverses that bucket's pairs, and a
 * family of extensions realizes p exactly when every critical pair is
 * reversed in some member. Most-constrained pair first, then lowest index;
 * empty buckets are interchangeable, so only the first one is ever tried.
 */
inline DimensionDecision decide_dimension(const Poset& p, int d,
                                          const Budget& budget = Budget()) {
  if (d < 0) throw BadParameter("decide_dimension: d < 0");
  int n = p.size();
  if (d == 0) {
    DimensionDecision out{n <= 1, std::nullopt};
    if (out.value) out.witness = Realizer{};
    return out;
  }
  auto pairs = critical_pairs(p);
  DimensionDecision out;
  if (pairs.empty()) {
    out.value = true;
    out.witness = Realizer{{lex_min_linear_extension(p)}};
  } else {
    detail::BucketState st;
    std::vector<Bits> base;
    base.reserve(n);
    for (int x = 0; x < n; ++x) base.push_back(p.up_set(x));
    st.rel.assign(d, base);
    std::vector<char> done(pairs.size(), 0);
    int used = 0;
    if (!detail::dimension_search(p, pairs, done, st, used, budget)) return out;
    out.value = true;
    Realizer r;
    for (int b = 0; b < std::max(used, 1); ++b)
      r.orders.push_back(detail::extension_of_closure(st.rel[b]));
    out.witness = std::move(r);
  }
  if (!verify_realizer(p, *out.witness))
    throw Error("decide_dimension: witness failed verification");
  return out;
}

/** First-fit proper coloring along the given vertex order (undirected view). */
inline std::vector<int> greedy_coloring(const Digraph& g,
                                        const std::vector<int>& vertex_order) {
  auto pos = order_positions(vertex_order, g.nv, "vertex order");
  auto adj = g.undirected_adjacency();
  std::vector<int> color(g.nv, -1);
  for (int v : vertex_order) {
    std::vector<char> taken(static_cast<std::size_t>(g.nv) + 1, 0);
    adj[v].for_each([&](int u) {
      if (color[u] >= 0) taken[color[u]] = 1;
    });
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
  }
  return color;
}

/**
 * Processing order for greedy coloring: reverse of a repeated minimum-degree
 * elimination (ties by smallest id), so each vertex sees at most degeneracy
 * many earlier neighbors.
 */
inline std::vector<int> degeneracy_order(const Digraph& g) {
  int n = g.nv;
  auto adj = g.undirected_adjacency();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = adj[v].count();
  std::vector<int> elim;
  elim.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
    gone[best] = 1;
    elim.push_back(best);
    adj[best].for_each([&](int u) {
      if (!gone[u]) --deg[u];
    });
  }
  std::reverse(elim.begin(), elim.end());
  return elim;
}

namespace detail {

inline bool k_colorable(const std::vector<Bits>& adj, int k, std::vector<int>& color,
                        int colored, int used, const Budget& budget) {
  budget.check("exact_chromatic_number");
  int n = static_cast<int>(adj.size());
  if (colored == n) return true;
  // DSATUR: most distinct neighbor colors, then highest degree, then id.
  int pick = -1, pick_sat = -1, pick_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (color[v] >= 0) continue;
    Bits seen(k);
    adj[v].for_each([&](int u) {
      if (color[u] >= 0) seen.set(color[u]);
    });
    int sat = seen.count(), dg = adj[v].count();
    if (sat > pick_sat || (sat == pick_sat && dg > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = dg;
    }
  }
  std::vector<char> taken(k, 0);
  adj[pick].for_each([&](int u) {
    if (color[u] >= 0) taken[color[u]] = 1;
  });
  int limit = std::min(used + 1, k);
  for (int c = 0; c < limit; ++c) {
    if (taken[c]) continue;
    color[pick] = c;
    if (k_colorable(adj, k, color, colored + 1, std::max(used, c + 1), budget))
      return true;
    color[pick] = -1;
  }
  return false;
}

inline int greedy_clique(const std::vector<Bits>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return adj[a].count() > adj[b].count(); });
  std::vector<int> clique;
  for (int v : by_degree) {
    bool ok = true;
    for (int u : clique)
      if (!adj[v].test(u)) ok = false;
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

}  // namespace detail

/**
 * Exact chromatic number of g viewed as an undirected graph: per component,
 * branch-and-bound between a greedy clique lower bound and a greedy upper
 * bound, deciding k-colorability by DSATUR backtracking.
 */
inline int exact_chromatic_number(const Digraph& g, const Budget& budget = Budget()) {
  int n = g.nv;
  if (n == 0) return 0;
  auto adj = g.undirected_adjacency();
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      adj[v].for_each([&](int u) {
        if (comp[u] == -1) {
          comp[u] = comps;
          stack.push_back(u);
        }
      });
    }
    ++comps;
  }
  int chi = 0;
  for (int c = 0; c < comps; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) verts.push_back(v);
    int m = static_cast<int>(verts.size());
    std::vector<int> local(n, -1);
    for (int i = 0; i < m; ++i) local[verts[i]] = i;
    std::vector<Bits> sub(m, Bits(m));
    for (int i = 0; i < m; ++i)
      adj[verts[i]].for_each([&](int u) {
        if (local[u] >= 0) sub[i].set(local[u]);
      });
    // Greedy bounds on the component.
    std::vector<std::pair<int, int>> sub_arcs;
    for (int i = 0; i < m; ++i)
      sub[i].for_each([&](int j) {
        if (i < j) sub_arcs.emplace_back(i, j);
      });
    auto subg = Digraph::from_arcs(m, std::move(sub_arcs));
    auto greedy = greedy_coloring(subg, degeneracy_order(subg));
    int ub = 1 + *std::max_element(greedy.begin(), greedy.end());
    int lb = std::max(chi, detail::greedy_clique(sub));
    int value = ub;
    for (int k = lb; k < ub; ++k) {
      std::vector<int> color(m, -1);
      if (detail::k_colorable(sub, k, color, 0, 0, budget)) {
        value = k;
        break;
      }
    }
    chi = std::max(chi, value);
  }
  return chi;
}

struct BooleanDimensionDecision {
  bool value = false;
  std::optional<BooleanRealizer> witness;  // present iff value
};

/**
 * Exhaustive boolean-dimension test at toy scale (n <= 6, d <= 2): enumerate
 * d-tuples of the n! linear orders in lexicographic order; a tuple works iff
 * no comparison tuple alpha is forced to both 0 and 1 across ordered pairs.
 * Reflexive pairs force phi(1,...,1)=1 and comparable/incomparable pairs fill
 * the rest; unconstrained entries are left 0, and the first witness wins.
 */
inline BooleanDimensionDecision decide_boolean_dimension_small(const Poset& p, int d) {
  if (d < 0) throw BadParameter("decide_boolean_dimension_small: d < 0");
  int n = p.size();
  if (n > 6 || d > 2)
    throw ScaleExceeded("decide_boolean_dimension_small: limits are n <= 6, d <= 2");
  if (d == 0) {
    BooleanDimensionDecision out{n <= 1, std::nullopt};
    if (out.value) {
      TruthTable phi = TruthTable::of_arity(0);
      phi.bits[0] = n == 1;
      out.witness = BooleanRealizer{{}, phi};
    }
    return out;
  }
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;
  std::vector<std::vector<int>> orders;
  std::vector<std::vector<int>> all_pos;
  std::vector<int> perm = ident;
  do {
    orders.push_back(perm);
    all_pos.push_back(order_positions(perm, n, "order"));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> choice(d, 0);
  std::vector<const std::vector<int>*> pos(d);
  auto try_tuple = [&]() -> std::optional<TruthTable> {
    for (int i = 0; i < d; ++i) pos[i] = &all_pos[choice[i]];
    std::vector<signed char> forced(std::size_t{1} << d, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        std::size_t idx = 0;
        for (int i = 0; i < d; ++i)
          idx = (idx << 1) |
                static_cast<std::size_t>(x == y || (*pos[i])[x] < (*pos[i])[y]);
        signed char want = p.leq(x, y) ? 1 : 0;
        if (forced[idx] == -1) forced[idx] = want;
        if (forced[idx] != want) return std::nullopt;
      }
    TruthTable phi = TruthTable::of_arity(d);
    for (std::size_t idx = 0; idx < phi.bits.size(); ++idx)
      phi.bits[idx] = forced[idx] == 1;
    return phi;
  };

  BooleanDimensionDecision out;
  while (true) {
    if (auto phi = try_tuple()) {
      Realizer chosen;
      for (int i = 0; i < d; ++i) chosen.orders.push_back(orders[choice[i]]);
      out.value = true;
      out.witness = BooleanRealizer{std::move(chosen.orders), std::move(*phi)};
      if (!verify_boolean_realizer(p, *out.witness))
        throw Error("decide_boolean_dimension_small: witness failed verification");
      return out;
    }
    int i = d - 1;
    while (i >= 0 && choice[i] + 1 == static_cast<int>(orders.size())) {
      choice[i] = 0;
      --i;
    }
    if (i < 0) return out;
    ++choice[i];
  }
}

/**
 * Local dimension at d in {1,2} coincides with dimension, so the decision
 * delegates to decide_dimension. No exact procedure exists here for d >= 3.
 */
inline bool decide_local_dimension_low(const Poset& p, int d,
                                       const Budget& budget = Budget()) {
  if (d != 1 && d != 2)
    throw BadParameter("decide_local_dimension_low: d must be 1 or 2");
  return decide_dimension(p, d, budget).value;
}

}  // namespace posetdim
