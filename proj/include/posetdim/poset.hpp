#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/digraph.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/util.hpp"

namespace posetdim {

/**
 * Finite partial order on dense ids 0..n-1, stored as bit rows of the full
 * reflexive relation. Construction validates reflexivity, antisymmetry and
 * transitivity, so a Poset value is a partial order by construction.
 */
class Poset {
 public:
  Poset() = default;

  static Poset from_relation(int n, std::vector<Bits> leq,
                             std::vector<std::string> labels = {}) {
    Poset p;
    p.n_ = n;
    p.up_ = std::move(leq);
    p.labels_ = std::move(labels);
    p.validate();
    p.build_down();
    return p;
  }

  int size() const { return n_; }

  bool leq(int x, int y) const { return up_[x].test(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool incomparable(int x, int y) const { return !leq(x, y) && !leq(y, x); }

  /** Row x of the relation: { y : x <= y }, including x itself. */
  const Bits& up_set(int x) const { return up_[x]; }
  /** { y : y <= x }, including x itself. */
  const Bits& down_set(int x) const { return down_[x]; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int x) const {
    if (x < static_cast<int>(labels_.size()) && !labels_[x].empty()) return labels_[x];
    return std::to_string(x);
  }

  /** Number of ordered pairs (x,y) with x < y strictly. */
  int strict_pair_count() const {
    int c = 0;
    for (int x = 0; x < n_; ++x) c += up_[x].count() - 1;
    return c;
  }

  /** Cover relation: arcs (x,y) with x < y and nothing strictly between. */
  Digraph covers() const {
    std::vector<std::pair<int, int>> arcs;
    for (int x = 0; x < n_; ++x)
      up_[x].for_each([&](int y) {
        if (y == x) return;
        bool has_mid = false;
        up_[x].for_each([&](int z) {
          if (!has_mid && z != x && z != y && up_[z].test(y)) has_mid = true;
        });
        if (!has_mid) arcs.emplace_back(x, y);
      });
    return Digraph::from_arcs(n_, std::move(arcs));
  }

 private:
  void validate() const {
    if (static_cast<int>(up_.size()) != n_) throw InvalidRelation("relation row count != n");
    for (int x = 0; x < n_; ++x) {
      if (up_[x].capacity() != n_) throw InvalidRelation("relation row width != n");
      if (!up_[x].test(x)) throw InvalidRelation("relation not reflexive");
    }
    for (int x = 0; x < n_; ++x)
      up_[x].for_each([&](int y) {
        if (y != x && up_[y].test(x))
          throw InvalidRelation("relation not antisymmetric at (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
        if (!up_[y].is_subset_of(up_[x]))
          throw InvalidRelation("relation not transitive below " + std::to_string(x));
      });
  }

  void build_down() {
    down_.assign(n_, Bits(n_));
    for (int x = 0; x < n_; ++x)
      up_[x].for_each([&](int y) { down_[y].set(x); });
  }

  int n_ = 0;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::string> labels_;
};

/**
 * Reflexive-transitive closure of a cover digraph. Arcs may include
 * transitively implied pairs; a cycle throws CycleDetected.
 */
inline Poset transitive_closure(const Digraph& covers,
                                std::vector<std::string> labels = {}) {
  auto topo = covers.topological_order();
  if (!topo) throw CycleDetected("cover relation contains a directed cycle");
  int n = covers.nv;
  auto out = covers.out_adjacency();
  std::vector<Bits> up(n, Bits(n));
  for (int i = n - 1; i >= 0; --i) {
    int v = (*topo)[i];
    up[v].set(v);
    for (int w : out[v]) up[v] |= up[w];
  }
  return Poset::from_relation(n, std::move(up), std::move(labels));
}

/**
 * Incomparability graph. Each incomparable pair appears once as (min,max);
 * consumers treat the arc set as undirected edges.
 */
inline Digraph incomparability_graph(const Poset& p) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (p.incomparable(x, y)) edges.emplace_back(x, y);
  return Digraph::from_arcs(p.size(), std::move(edges));
}

/**
 * Critical pairs (x,y): incomparable, with strict-down(x) ⊆ strict-down(y)
 * and strict-up(y) ⊆ strict-up(x). A family of linear extensions realizes p
 * exactly when every critical pair is reversed (x above y) somewhere.
 */
inline std::vector<std::pair<int, int>> critical_pairs(const Poset& p) {
  int n = p.size();
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !p.incomparable(x, y)) continue;
      // strict down/up via the reflexive rows: down(x)\{x} ⊆ down(y)\{y} etc.
      // x ∉ down(y) and y ∉ up(x) because the pair is incomparable, so the
      // reflexive bits cannot leak through the subset tests.
      Bits dx = p.down_set(x);
      dx.reset(x);
      Bits uy = p.up_set(y);
      uy.reset(y);
      if (dx.is_subset_of(p.down_set(y)) && uy.is_subset_of(p.up_set(x)))
        out.emplace_back(x, y);
    }
  return out;
}

/** Sequence of distinct element ids, meant to extend the order on its support. */
struct PartialLinearExtension {
  std::vector<int> seq;
  auto operator<=>(const PartialLinearExtension&) const = default;
};

/** Positions of a full linear order given as a sequence; throws MalformedOrder. */
inline std::vector<int> order_positions(const std::vector<int>& order, int n,
                                        const char* what = "order") {
  if (static_cast<int>(order.size()) != n)
    throw MalformedOrder(std::string(what) + ": wrong length");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int x = order[i];
    if (x < 0 || x >= n) throw MalformedOrder(std::string(what) + ": id out of range");
    if (pos[x] != -1) throw MalformedOrder(std::string(what) + ": duplicate id");
    pos[x] = i;
  }
  return pos;
}

/** True iff `order` is a permutation of 0..n-1 that puts x before y whenever x < y. */
inline bool is_linear_extension(const Poset& p, const std::vector<int>& order) {
  auto pos = order_positions(order, p.size(), "linear extension");
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.less(x, y) && pos[x] > pos[y]) return false;
  return true;
}

/** Lexicographically smallest linear extension (deterministic default witness). */
inline std::vector<int> lex_min_linear_extension(const Poset& p) {
  auto topo = p.covers().topological_order();
  return *topo;  // a validated Poset is always acyclic
}

/** Width = size of a maximum antichain, via Dilworth (min chain cover). */
inline int poset_width(const Poset& p) {
  int n = p.size();
  if (n == 0) return 0;
  // Bipartite matching on strict pairs; width = n - max matching.
  std::vector<int> match_right(n, -1);
  std::vector<char> used;
  auto try_kuhn = [&](auto&& self, int x) -> bool {
    bool found = false;
    p.up_set(x).for_each([&](int y) {
      if (found || y == x || used[y]) return;
      used[y] = 1;
      if (match_right[y] == -1 || self(self, match_right[y])) {
        match_right[y] = x;
        found = true;
      }
    });
    return found;
  };
  int matching = 0;
  for (int x = 0; x < n; ++x) {
    used.assign(n, 0);
    if (try_kuhn(try_kuhn, x)) ++matching;
  }
  return n - matching;
}

/** Height = number of elements in a longest chain. */
inline int poset_height(const Poset& p) {
  int n = p.size();
  if (n == 0) return 0;
  auto order = lex_min_linear_extension(p);
  std::vector<int> h(n, 1);
  int best = 1;
  for (int i = n - 1; i >= 0; --i) {
    int x = order[i];
    p.up_set(x).for_each([&](int y) {
      if (y != x) h[x] = std::max(h[x], 1 + h[y]);
    });
    best = std::max(best, h[x]);
  }
  return best;
}

/** Number of connected components of the incomparability graph. */
inline int incomparability_component_count(const Poset& p) {
  int n = p.size();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (comp[y] == -1 && p.incomparable(x, y)) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace posetdim
