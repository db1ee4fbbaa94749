#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/errors.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/realizer.hpp"

namespace posetdim {

/**
 * One level of the recursive digraph/poset construction. Poset elements are
 * the arcs of g, identified by their index in g.arcs. The four ordering
 * families make {orderA, orderB} plus the per-vertex gadgets a width-4
 * local realizer of p.
 */
struct Theorem6Instance {
  int k = 0;
  Digraph g;
  Poset p;
  std::vector<int> orderA;
  std::vector<int> orderB;
  std::vector<PartialLinearExtension> gadgets;  // indexed by vertex of g
  std::vector<std::vector<int>> xsets;          // top-level r-subsets X^i
  std::vector<std::vector<int>> nsets;          // N_j = out-neighbors of x_j

  LocalRealizer local_realizer() const {
    std::vector<PartialLinearExtension> ples{PartialLinearExtension{orderA},
                                             PartialLinearExtension{orderB}};
    for (const auto& gadget : gadgets) ples.push_back(gadget);
    return LocalRealizer(std::move(ples));
  }
};

/**
 * Predicted sizes of the level-k instance. Exact values are reported while
 * they fit in 64 bits; the log2 estimates are always reported and saturate
 * to infinity once the counts leave double range (k >= 5).
 */
struct Theorem6Sizes {
  int k = 0;
  bool exact = false;
  std::uint64_t r = 0, s = 0, n = 0, vertices = 0, edges = 0;
  double log2_n = 0.0, log2_vertices = 0.0, log2_edges = 0.0;
};

namespace detail {

inline bool mul_u64(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

inline bool add_u64(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_add_overflow(a, b, &out);
}

// C(s,r) with overflow detection; the running product stays integral.
inline bool binom_u64(std::uint64_t s, std::uint64_t r, std::uint64_t& out) {
  if (r > s) {
    out = 0;
    return true;
  }
  r = std::min(r, s - r);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    std::uint64_t num = s - r + i;
    std::uint64_t g = std::gcd(acc, i);
    std::uint64_t a = acc / g, div = i / g;
    std::uint64_t g2 = std::gcd(num, div);
    num /= g2;
    div /= g2;  // now 1: i! divides the partial product
    if (!mul_u64(a, num, acc)) return false;
  }
  out = acc;
  return true;
}

inline double log2_binom(double s, double r) {
  if (r <= 0 || r >= s) return 0.0;
  return (std::lgamma(s + 1) - std::lgamma(r + 1) - std::lgamma(s - r + 1)) /
         std::log(2.0);
}

}  // namespace detail

/** Pure size estimator for any k >= 1; never materializes anything. */
inline Theorem6Sizes theorem6_sizes(int k) {
  if (k < 1) throw BadParameter("theorem6_sizes: k < 1");
  Theorem6Sizes cur{1, true, 0, 0, 0, 2, 1, 0.0, 1.0, 0.0};
  for (int level = 2; level <= k; ++level) {
    Theorem6Sizes next;
    next.k = level;
    if (cur.exact) {
      std::uint64_t kk = static_cast<std::uint64_t>(level);
      next.r = cur.vertices;
      bool ok = detail::mul_u64(kk, next.r - 1, next.s) &&
                detail::add_u64(next.s, 1, next.s) &&
                detail::binom_u64(next.s, next.r, next.n);
      std::uint64_t sub_v = 0, per_e = 0;
      ok = ok && detail::mul_u64(next.n, cur.vertices, sub_v) &&
           detail::add_u64(next.s, sub_v, next.vertices) &&
           detail::add_u64(next.r, cur.edges, per_e) &&
           detail::mul_u64(next.n, per_e, next.edges);
      next.exact = ok;
      if (ok) {
        next.log2_n = detail::log2_binom(static_cast<double>(next.s),
                                         static_cast<double>(next.r));
        next.log2_vertices = std::log2(static_cast<double>(next.vertices));
        next.log2_edges = std::log2(static_cast<double>(next.edges));
        cur = next;
        continue;
      }
    }
    // Exact tracking lost: estimate in log2 space while doubles last.
    double r2 = cur.exact ? std::log2(static_cast<double>(cur.vertices))
                          : cur.log2_vertices;
    double s2 = r2 + std::log2(static_cast<double>(level));
    if (cur.exact && std::pow(2.0, s2) < 9e18) {
      // s still fits; only the binomial overflowed 64 bits.
      double s_val = static_cast<double>(level) *
                         (static_cast<double>(cur.vertices) - 1) + 1;
      double r_val = static_cast<double>(cur.vertices);
      next.log2_n = detail::log2_binom(s_val, r_val);
    } else {
      // r itself is astronomic; the entropy bound H(1/level)*s in bits
      // already exceeds double range, so everything saturates.
      next.log2_n = std::numeric_limits<double>::infinity();
    }
    next.log2_vertices = next.log2_n + (cur.exact
                             ? std::log2(static_cast<double>(cur.vertices))
                             : cur.log2_vertices);
    next.log2_edges = next.log2_n + (cur.exact
                          ? std::log2(static_cast<double>(cur.edges) +
                                      static_cast<double>(cur.vertices))
                          : cur.log2_edges);
    next.exact = false;
    cur = next;
  }
  return cur;
}

inline constexpr std::uint64_t kTheorem6DefaultEdgeCap = 1'000'000;

namespace detail {

// Order the vertices of a finished instance so that non-sinks follow their
// out-edge block positions in orderB and sinks come last; this is the border
// sequence the next level's matching edges attach to. Positions of the empty
// out-blocks are not constrained by the construction, so sinks are placed
// after all non-sinks, in ascending id order, as a fixed deterministic rule.
inline std::vector<int> border_order(const Theorem6Instance& inst) {
  int nv = inst.g.nv;
  std::vector<int> first(nv, -1);
  for (std::size_t pos = 0; pos < inst.orderB.size(); ++pos) {
    int src = inst.g.arcs[inst.orderB[pos]].first;
    if (first[src] == -1) first[src] = static_cast<int>(pos);
  }
  std::vector<int> verts(nv);
  for (int v = 0; v < nv; ++v) verts[v] = v;
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
    bool sa = first[a] == -1, sb = first[b] == -1;
    if (sa != sb) return sb;  // non-sinks first
    if (sa) return a < b;
    return first[a] < first[b];
  });
  return verts;
}

// Relation induced by {orderA, orderB} + gadgets per Eq. (2), validated as a
// partial order by construction; this machine-checks transitivity.
inline Poset induced_poset(const Digraph& g, const std::vector<int>& orderA,
                           const std::vector<int>& orderB,
                           const std::vector<PartialLinearExtension>& gadgets,
                           std::vector<std::string> labels) {
  int m = g.arc_count();
  auto posA = order_positions(orderA, m, "orderA");
  auto posB = order_positions(orderB, m, "orderB");
  std::vector<Bits> above(m, Bits(m));
  auto add = [&](const std::vector<int>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j < seq.size(); ++j) above[seq[j]].set(seq[i]);
  };
  add(orderA);
  add(orderB);
  for (const auto& gadget : gadgets) add(gadget.seq);
  std::vector<Bits> rel(m, Bits(m));
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      if (e == f || !above[e].test(f)) rel[e].set(f);
  return Poset::from_relation(m, std::move(rel), std::move(labels));
}

inline std::vector<std::string> arc_labels(const Digraph& g) {
  std::vector<std::string> labels;
  labels.reserve(g.arcs.size());
  for (auto [u, v] : g.arcs)
    labels.push_back(std::to_string(u) + "->" + std::to_string(v));
  return labels;
}

}  // namespace detail

/**
 * Build the level-k instance: fresh vertex set X of size s = k(r-1)+1 on top
 * of n = C(s,r) copies of the level k-1 instance, one matching edge from each
 * X^i into its copy. Copy i occupies vertex ids [i*r, (i+1)*r); X follows.
 * Refuses instances whose predicted edge count exceeds edge_cap.
 */
inline Theorem6Instance theorem6_construct(
    int k, std::uint64_t edge_cap = kTheorem6DefaultEdgeCap) {
  if (k < 1) throw BadParameter("theorem6_construct: k < 1");
  auto sizes = theorem6_sizes(k);
  if (!sizes.exact || sizes.edges > edge_cap)
    throw SizeCapExceeded(
        "theorem6_construct: k=" + std::to_string(k) + " needs " +
        (sizes.exact ? std::to_string(sizes.edges)
                     : "about 2^" + std::to_string(sizes.log2_edges)) +
        " edges, cap is " + std::to_string(edge_cap));

  Theorem6Instance inst;
  inst.k = 1;
  inst.g = Digraph::from_arcs(2, {{0, 1}});
  inst.orderA = inst.orderB = {0};
  inst.gadgets = {PartialLinearExtension{{0}}, PartialLinearExtension{{0}}};
  inst.p = detail::induced_poset(inst.g, inst.orderA, inst.orderB, inst.gadgets,
                                 detail::arc_labels(inst.g));

  for (int level = 2; level <= k; ++level) {
    const Theorem6Instance prev = std::move(inst);
    int r = prev.g.nv;
    int s = level * (r - 1) + 1;
    auto border = detail::border_order(prev);

    // Lexicographic r-subsets of {0..s-1}.
    std::vector<std::vector<int>> xsets;
    std::vector<int> pickidx(r);
    for (int i = 0; i < r; ++i) pickidx[i] = i;
    while (true) {
      xsets.push_back(pickidx);
      int i = r - 1;
      while (i >= 0 && pickidx[i] == s - r + i) --i;
      if (i < 0) break;
      ++pickidx[i];
      for (int j = i + 1; j < r; ++j) pickidx[j] = pickidx[j - 1] + 1;
    }
    int n = static_cast<int>(xsets.size());
    int xbase = n * r;
    int nv = xbase + s;

    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) {
      for (auto [u, v] : prev.g.arcs) arcs.emplace_back(i * r + u, i * r + v);
      for (int pth = 0; pth < r; ++pth)
        arcs.emplace_back(xbase + xsets[i][pth], i * r + border[pth]);
    }
    Theorem6Instance next;
    next.k = level;
    next.g = Digraph::from_arcs(nv, std::move(arcs));

    auto sub_arc = [&](int i, int e) {
      auto [u, v] = prev.g.arcs[e];
      return next.g.arc_index(i * r + u, i * r + v);
    };
    auto match_arc = [&](int i, int pth) {
      return next.g.arc_index(xbase + xsets[i][pth], i * r + border[pth]);
    };

    // orderA: per copy, the matching block then the copy's own orderA.
    for (int i = 0; i < n; ++i) {
      for (int pth = 0; pth < r; ++pth) next.orderA.push_back(match_arc(i, pth));
      for (int e : prev.orderA) next.orderA.push_back(sub_arc(i, e));
    }

    // orderB: per x_j, the block E(x_j,V) then E(N_j,V), copies ascending;
    // each inner out-edge block keeps its orderB-internal order.
    std::vector<std::vector<std::pair<int, int>>> from_x(s);  // (copy, border pos)
    for (int i = 0; i < n; ++i)
      for (int pth = 0; pth < r; ++pth)
        from_x[xsets[i][pth]].emplace_back(i, pth);
    next.nsets.assign(s, {});
    for (int j = 0; j < s; ++j) {
      for (auto [i, pth] : from_x[j]) {
        next.orderB.push_back(match_arc(i, pth));
        next.nsets[j].push_back(i * r + border[pth]);
      }
      for (auto [i, pth] : from_x[j])
        for (int e : prev.orderB)
          if (prev.g.arcs[e].first == border[pth])
            next.orderB.push_back(sub_arc(i, e));
    }

    // Gadgets: inner vertices extend their copy's gadget with the matching
    // in-edge on top; x vertices get a fresh gadget on their out-edges.
    next.gadgets.assign(nv, PartialLinearExtension{});
    std::vector<int> match_in(nv, -1);
    for (int i = 0; i < n; ++i)
      for (int pth = 0; pth < r; ++pth) match_in[i * r + border[pth]] = match_arc(i, pth);
    for (int i = 0; i < n; ++i)
      for (int w = 0; w < r; ++w) {
        auto& seq = next.gadgets[i * r + w].seq;
        for (int e : prev.gadgets[w].seq) seq.push_back(sub_arc(i, e));
        seq.push_back(match_in[i * r + w]);
      }
    for (int j = 0; j < s; ++j) {
      auto& seq = next.gadgets[xbase + j].seq;
      for (auto [i, pth] : from_x[j]) seq.push_back(match_arc(i, pth));
    }

    next.xsets.reserve(xsets.size());
    for (const auto& xs : xsets) {
      std::vector<int> global;
      global.reserve(xs.size());
      for (int j : xs) global.push_back(xbase + j);
      next.xsets.push_back(std::move(global));
    }

    next.p = detail::induced_poset(next.g, next.orderA, next.orderB, next.gadgets,
                                   detail::arc_labels(next.g));
    inst = std::move(next);
  }

  std::string why;
  if (!verify_local_realizer(inst.p, inst.local_realizer(), &why))
    throw Error("theorem6_construct: family is not a local realizer: " + why);
  return inst;
}

}  // namespace posetdim
