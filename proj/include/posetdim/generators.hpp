#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/errors.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/realizer.hpp"

namespace posetdim {

inline Poset chain(int n) {
  if (n < 0) throw BadParameter("chain: n < 0");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return transitive_closure(Digraph::from_arcs(n, std::move(covers)));
}

inline Poset antichain(int n) {
  if (n < 0) throw BadParameter("antichain: n < 0");
  return transitive_closure(Digraph::from_arcs(n, {}));
}

/** Intersection of full linear orders on 0..n-1, all of the same length. */
inline Poset intersection_poset(const std::vector<std::vector<int>>& orders) {
  if (orders.empty()) throw BadParameter("intersection_poset: no orders");
  int n = static_cast<int>(orders.front().size());
  std::vector<std::vector<int>> pos;
  pos.reserve(orders.size());
  for (const auto& order : orders) pos.push_back(order_positions(order, n, "order"));
  std::vector<Bits> rel(n, Bits(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool all = true;
      for (const auto& pi : pos)
        if (pi[x] > pi[y]) all = false;
      if (all) rel[x].set(y);
    }
  return Poset::from_relation(n, std::move(rel));
}

/**
 * Seeded random poset: `tries` arc samples oriented along a hidden random
 * permutation, then closed. Deterministic for a fixed (n, tries, seed).
 */
inline Poset random_poset(int n, int tries, unsigned seed) {
  if (n < 0 || tries < 0) throw BadParameter("random_poset: negative size");
  std::mt19937 rng(seed);
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[i] = i;
  std::shuffle(rank.begin(), rank.end(), rng);
  std::set<std::pair<int, int>> arcs;
  if (n >= 2) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < tries; ++t) {
      int u = pick(rng), v = pick(rng);
      if (u == v) continue;
      if (rank[u] > rank[v]) std::swap(u, v);
      arcs.insert({u, v});
    }
  }
  return transitive_closure(Digraph::from_arcs(n, {arcs.begin(), arcs.end()}));
}

/**
 * The standard example on 2k elements: a_i (ids 0..k-1) below b_j
 * (ids k..2k-1) exactly when i != j, together with its certificates:
 * a size-k realizer (k >= 2), the width-3 local realizer (k >= 3), and
 * the 4-order boolean realizer with a1 AND a2 AND (a3 OR a4) (k >= 4).
 */
struct StandardExample {
  Poset poset;
  Realizer realizer;
  std::optional<LocalRealizer> local_cert;
  std::optional<BooleanRealizer> boolean_cert;
};

inline StandardExample standard_example(int k) {
  if (k < 2) throw BadParameter("standard_example: k < 2");
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels(2 * k);
  for (int i = 0; i < k; ++i) {
    labels[i] = "a" + std::to_string(i + 1);
    labels[k + i] = "b" + std::to_string(i + 1);
    for (int j = 0; j < k; ++j)
      if (i != j) covers.emplace_back(i, k + j);
  }
  StandardExample out;
  out.poset = transitive_closure(Digraph::from_arcs(2 * k, std::move(covers)),
                                 std::move(labels));

  // L_i: the a-chain without a_i, then b_i < a_i, then the b-chain without b_i.
  for (int i = 0; i < k; ++i) {
    std::vector<int> order;
    for (int j = 0; j < k; ++j)
      if (j != i) order.push_back(j);
    order.push_back(k + i);
    order.push_back(i);
    for (int j = 0; j < k; ++j)
      if (j != i) order.push_back(k + j);
    out.realizer.orders.push_back(std::move(order));
  }
  if (!verify_realizer(out.poset, out.realizer))
    throw Error("standard_example: realizer failed verification");

  std::vector<int> up, down;  // a's ascending + b's ascending, and both reversed
  for (int j = 0; j < k; ++j) up.push_back(j);
  for (int j = 0; j < k; ++j) up.push_back(k + j);
  for (int j = k - 1; j >= 0; --j) down.push_back(j);
  for (int j = k - 1; j >= 0; --j) down.push_back(k + j);

  if (k >= 3) {
    std::vector<PartialLinearExtension> ples{PartialLinearExtension{up},
                                             PartialLinearExtension{down}};
    for (int i = 0; i < k; ++i) ples.push_back(PartialLinearExtension{{k + i, i}});
    LocalRealizer lr(std::move(ples));
    if (!verify_local_realizer(out.poset, lr) || local_width(lr) != 3)
      throw Error("standard_example: local certificate failed verification");
    out.local_cert = std::move(lr);
  }

  if (k >= 4) {
    std::vector<int> zig, zag;  // b1 < a1 < ... < b_k < a_k and its block reverse
    for (int j = 0; j < k; ++j) {
      zig.push_back(k + j);
      zig.push_back(j);
      zag.push_back(k + (k - 1 - j));
      zag.push_back(k - 1 - j);
    }
    TruthTable phi = TruthTable::of_arity(4);
    for (std::size_t idx = 0; idx < phi.bits.size(); ++idx)
      phi.bits[idx] = (idx & 8) && (idx & 4) && ((idx & 2) || (idx & 1));
    BooleanRealizer br{{up, down, std::move(zig), std::move(zag)}, std::move(phi)};
    if (!verify_boolean_realizer(out.poset, br))
      throw Error("standard_example: boolean certificate failed verification");
    out.boolean_cert = std::move(br);
  }
  return out;
}

/**
 * Incidence poset of the complete graph on n vertices: v_i (ids 0..n-1)
 * below every edge v_iv_j (ids n.., in lexicographic (i,j) order), plus
 * the 4-order boolean certificate with (a1 AND a2) OR (a3 AND a4).
 */
struct IncidencePoset {
  Poset poset;
  BooleanRealizer cert;
};

/** Element id of the edge v_i v_j in incidence_poset(n); vertices keep 0..n-1. */
inline int incidence_edge_id(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || i == j || j >= n)
    throw BadParameter("incidence_edge_id: need distinct vertices below n");
  return n + i * (n - 1) - i * (i - 1) / 2 + (j - i - 1);
}

inline IncidencePoset incidence_poset(int n) {
  if (n < 2) throw BadParameter("incidence_poset: n < 2");
  int elems = n + n * (n - 1) / 2;
  std::vector<std::string> labels(elems);
  std::vector<std::vector<int>> edge_id(n, std::vector<int>(n, -1));
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int next = incidence_edge_id(n, i, j);
      edge_id[i][j] = next;
      labels[next] = "v" + std::to_string(i + 1) + "v" + std::to_string(j + 1);
      covers.emplace_back(i, next);
      covers.emplace_back(j, next);
    }
  IncidencePoset out;
  out.poset = transitive_closure(Digraph::from_arcs(elems, std::move(covers)),
                                 std::move(labels));

  // Blocks: A_i = v_i, v_iv_{i+1}..v_iv_n; B_i = v_i, v_iv_n..v_iv_{i+1};
  //         C_i = v_i, v_1v_i..v_{i-1}v_i; D_i = v_i, v_{i-1}v_i..v_1v_i.
  std::vector<int> A, B, C, D;
  for (int i = 0; i < n; ++i) {
    A.push_back(i);
    for (int j = i + 1; j < n; ++j) A.push_back(edge_id[i][j]);
  }
  for (int i = n - 1; i >= 0; --i) {
    B.push_back(i);
    for (int j = n - 1; j > i; --j) B.push_back(edge_id[i][j]);
  }
  for (int i = 0; i < n; ++i) {
    C.push_back(i);
    for (int j = 0; j < i; ++j) C.push_back(edge_id[j][i]);
  }
  for (int i = n - 1; i >= 0; --i) {
    D.push_back(i);
    for (int j = i - 1; j >= 0; --j) D.push_back(edge_id[j][i]);
  }
  TruthTable phi = TruthTable::of_arity(4);
  for (std::size_t idx = 0; idx < phi.bits.size(); ++idx)
    phi.bits[idx] = ((idx & 8) && (idx & 4)) || ((idx & 2) && (idx & 1));
  out.cert = BooleanRealizer{{std::move(A), std::move(B), std::move(C), std::move(D)},
                             std::move(phi)};
  if (!verify_boolean_realizer(out.poset, out.cert))
    throw Error("incidence_poset: boolean certificate failed verification");
  return out;
}

}  // namespace posetdim
