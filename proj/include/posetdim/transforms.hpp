#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/digraph.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/realizer.hpp"
#include "posetdim/solvers.hpp"
#include "posetdim/theorem6.hpp"
#include "posetdim/util.hpp"

namespace posetdim {

/**
 * Turns a transitive orientation of the incomparability graph into a
 * 2-realizer: L1 extends the order together with the orientation, L2 extends
 * it together with the reversed orientation, so every incomparable pair is
 * reversed between the two. The orientation must cover each incomparable
 * pair in exactly one direction and be transitive as a relation.
 */
inline Realizer orientation_to_two_realizer(const Poset& p,
                                            const std::vector<std::pair<int, int>>& orient) {
  int n = p.size();
  std::vector<Bits> prec(n, Bits(n));
  for (auto [x, y] : orient) {
    if (x < 0 || y < 0 || x >= n || y >= n || x == y || !p.incomparable(x, y))
      throw NotTransitiveOrientation(
          "orientation_to_two_realizer: oriented pair is not incomparable");
    if (prec[y].test(x))
      throw NotTransitiveOrientation(
          "orientation_to_two_realizer: pair oriented in both directions");
    prec[x].set(y);
  }
  for (auto [x, y] : incomparability_graph(p).arcs)
    if (!prec[x].test(y) && !prec[y].test(x))
      throw NotTransitiveOrientation(
          "orientation_to_two_realizer: incomparable pair left unoriented");
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    prec[x].for_each([&](int y) {
      prec[y].for_each([&](int z) {
        if (!prec[x].test(z)) ok = false;
      });
    });
    if (!ok)
      throw NotTransitiveOrientation("orientation_to_two_realizer: orientation not transitive");
  }
  std::vector<std::pair<int, int>> fwd, bwd;
  for (int x = 0; x < n; ++x)
    p.up_set(x).for_each([&](int y) {
      if (y != x) {
        fwd.emplace_back(x, y);
        bwd.emplace_back(x, y);
      }
    });
  for (int x = 0; x < n; ++x)
    prec[x].for_each([&](int y) {
      fwd.emplace_back(x, y);
      bwd.emplace_back(y, x);
    });
  auto l1 = Digraph::from_arcs(n, std::move(fwd)).topological_order();
  auto l2 = Digraph::from_arcs(n, std::move(bwd)).topological_order();
  if (!l1 || !l2)
    throw NotTransitiveOrientation(
        "orientation_to_two_realizer: orientation conflicts with the order");
  Realizer out{{std::move(*l1), std::move(*l2)}};
  if (!verify_realizer(p, out))
    throw Error("orientation_to_two_realizer: output failed verification");
  return out;
}

namespace detail {

inline std::size_t pattern_of(const std::vector<std::vector<int>>& pos, int x, int y) {
  std::size_t idx = 0;
  for (const auto& q : pos) idx = (idx << 1) | static_cast<std::size_t>(q[x] < q[y]);
  return idx;
}

}  // namespace detail

/**
 * Rebuilds a plain realizer of size <= d from a verifying boolean realizer
 * with d <= 3 orders. After normalizing the truth table, the realized ones
 * fall into one of the canonical shapes, tried in this order: the pure
 * conjunction keeps all d orders; a single-zero entry next to the all-ones
 * entry makes its coordinate redundant, so that order is dropped; no fully
 * zero complementary entry pair means the poset is a chain; one such pair
 * orients every incomparable pair by its comparison pattern; and the d=3
 * shape whose second one has two zeros orients by those two coordinates
 * disagreeing. The last two emit a 2-realizer through the orientation.
 */
inline Realizer boolean_to_realizer(const Poset& p, const BooleanRealizer& br) {
  int d = br.arity();
  if (d > 3) throw ArityTooLarge("boolean_to_realizer: certificate has more than 3 orders");
  TruthTable table = normalize_truth_table(p, br);
  int n = p.size();
  if (n == 0) return Realizer{};

  auto finish = [&](Realizer out) {
    if (!verify_realizer(p, out)) throw Error("boolean_to_realizer: output failed verification");
    return out;
  };

  std::vector<std::size_t> ones;
  for (std::size_t idx = 0; idx < table.bits.size(); ++idx)
    if (table.bits[idx]) ones.push_back(idx);
  const std::size_t full = (std::size_t{1} << d) - 1;

  if (ones == std::vector<std::size_t>{full}) return finish(Realizer{br.orders});

  if (ones.size() == 2 && ones[1] == full && std::popcount(ones[0]) == d - 1) {
    std::size_t gamma = ones[0];
    Realizer out;
    for (int i = 0; i < d; ++i)
      if (gamma >> (d - 1 - i) & 1) out.orders.push_back(br.orders[i]);
    return finish(std::move(out));
  }

  std::vector<std::vector<int>> pos;
  for (const auto& order : br.orders) pos.push_back(order_positions(order, n, "order"));
  std::vector<std::pair<std::size_t, std::size_t>> zero_pairs;
  for (std::size_t idx = 0; idx < table.bits.size(); ++idx) {
    std::size_t comp = full ^ idx;
    if (idx < comp && !table.bits[idx] && !table.bits[comp]) zero_pairs.emplace_back(idx, comp);
  }

  if (zero_pairs.empty()) return finish(Realizer{{lex_min_linear_extension(p)}});

  std::vector<std::pair<int, int>> orient;
  if (zero_pairs.size() == 1) {
    std::size_t alpha = zero_pairs[0].first;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && p.incomparable(x, y) && detail::pattern_of(pos, x, y) == alpha)
          orient.emplace_back(x, y);
    return orientation_to_two_realizer(p, orient);
  }

  if (d == 3 && ones.size() == 2 && ones[1] == full && std::popcount(ones[0]) == 1) {
    std::size_t gamma = ones[0];
    std::vector<int> zero_coords;
    for (int i = 0; i < d; ++i)
      if (!(gamma >> (d - 1 - i) & 1)) zero_coords.push_back(i);
    int u = zero_coords[0], v = zero_coords[1];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && p.incomparable(x, y) && pos[u][x] < pos[u][y] && pos[v][x] > pos[v][y])
          orient.emplace_back(x, y);
    return orientation_to_two_realizer(p, orient);
  }

  throw NoCanonicalCase("boolean_to_realizer: normalized table matches no known shape");
}

/**
 * Recovers a realizer of size <= 2 from a verifying local realizer of width
 * <= 2. Every incomparable pair co-occurs in exactly two ples, and within a
 * connected component of the incomparability graph those two ples are the
 * same, so their restrictions realize the component. Components are totally
 * ordered by the poset relation and the restrictions are stacked along it.
 */
inline Realizer local2_to_realizer(const Poset& p, const LocalRealizer& lr) {
  try {
    std::string why;
    if (!verify_local_realizer(p, lr, &why))
      throw NotALocalRealizer("local2_to_realizer: " + why);
  } catch (const MalformedOrder& e) {
    throw NotALocalRealizer(std::string("local2_to_realizer: ") + e.what());
  } catch (const NotAnExtension& e) {
    throw NotALocalRealizer(std::string("local2_to_realizer: ") + e.what());
  }
  if (local_width(lr) > 2) throw WidthTooLarge("local2_to_realizer: width exceeds 2");
  int n = p.size();

  std::vector<std::vector<int>> adj(n);
  for (auto [x, y] : incomparability_graph(p).arcs) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] == -1) {
          comp[y] = comps;
          stack.push_back(y);
        }
    }
    ++comps;
  }

  std::vector<std::pair<int, int>> quotient_arcs;
  for (int x = 0; x < n; ++x)
    p.up_set(x).for_each([&](int y) {
      if (comp[x] != comp[y]) quotient_arcs.emplace_back(comp[x], comp[y]);
    });
  auto stack_order = Digraph::from_arcs(comps, std::move(quotient_arcs)).topological_order();
  if (!stack_order) throw Error("local2_to_realizer: component order is cyclic");

  std::vector<std::vector<int>> members(comps);
  for (int x = 0; x < n; ++x) members[comp[x]].push_back(x);
  std::vector<std::vector<int>> host(n);
  for (std::size_t t = 0; t < lr.ples.size(); ++t)
    for (int x : lr.ples[t].seq) host[x].push_back(static_cast<int>(t));

  std::vector<int> l1, l2;
  for (int c : *stack_order) {
    const auto& mem = members[c];
    if (mem.size() == 1) {
      l1.push_back(mem[0]);
      l2.push_back(mem[0]);
      continue;
    }
    int ax = -1, ay = -1;
    for (std::size_t i = 0; i < mem.size() && ax == -1; ++i)
      for (std::size_t j = i + 1; j < mem.size() && ax == -1; ++j)
        if (p.incomparable(mem[i], mem[j])) {
          ax = mem[i];
          ay = mem[j];
        }
    if (ax == -1) throw Error("local2_to_realizer: connected component with no edge");
    std::vector<int> shared;
    for (int t : host[ax])
      if (std::find(host[ay].begin(), host[ay].end(), t) != host[ay].end())
        shared.push_back(t);
    if (shared.size() != 2) throw Error("local2_to_realizer: component not covered by two ples");
    Bits in_comp(n);
    for (int x : mem) in_comp.set(x);
    for (int which = 0; which < 2; ++which) {
      auto& out = which == 0 ? l1 : l2;
      std::size_t before = out.size();
      for (int x : lr.ples[shared[which]].seq)
        if (in_comp.test(x)) out.push_back(x);
      if (out.size() - before != mem.size())
        throw Error("local2_to_realizer: covering ple misses part of the component");
    }
  }

  Realizer out;
  out.orders.push_back(std::move(l1));
  if (l2 != out.orders[0]) out.orders.push_back(std::move(l2));
  if (!verify_realizer(p, out)) throw Error("local2_to_realizer: output failed verification");
  return out;
}

/** Partition of the ground set into blocks, each ordered by its host gadget. */
struct PartitionScheme {
  std::vector<std::vector<int>> blocks;

  // Blocks concatenated first to last; block-internal order is kept.
  std::vector<int> ascending() const {
    std::vector<int> out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  // Block sequence reversed; block-internal order is kept.
  std::vector<int> descending() const {
    std::vector<int> out;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
      out.insert(out.end(), it->begin(), it->end());
    return out;
  }
};

/** Where each element's three occurrences live after padding, gadget order. */
struct OccurrenceIndex {
  struct Occurrence {
    int gadget = -1;
    int position = -1;
    bool operator==(const Occurrence&) const = default;
  };
  std::vector<std::array<Occurrence, 3>> per_element;
};

struct Local3Conversion {
  BooleanRealizer certificate;
  LocalRealizer padded;                    // real gadgets first, pads appended
  OccurrenceIndex occurrences;
  std::vector<PartitionScheme> partitions; // 3 occurrence-level, then color pairs
  std::vector<int> coloring;               // proper coloring of the conflict graph
  int colors_used = 0;
};

/**
 * Converts a width <= 3 local realizer into a boolean realizer with formula
 * a* and (a_1 or a_1') and ... over block partitions: a partition pair votes
 * against x <= y only when x,y share a block with y first, so the relation
 * becomes "below in some extension and never reversed inside a block".
 * Three partitions keyed by occurrence number catch same-index reversals;
 * reversals across occurrence indices are edges of a conflict graph, and one
 * partition per occurrence index pair and ordered color pair catches each of
 * them, since endpoint colors differ. Output size is 1 + 2(3 + 3c(c-1)).
 */
inline Local3Conversion local3_to_boolean(const Poset& p, const LocalRealizer& lr) {
  try {
    std::string why;
    if (!verify_local_realizer(p, lr, &why))
      throw NotALocalRealizer("local3_to_boolean: " + why);
  } catch (const MalformedOrder& e) {
    throw NotALocalRealizer(std::string("local3_to_boolean: ") + e.what());
  } catch (const NotAnExtension& e) {
    throw NotALocalRealizer(std::string("local3_to_boolean: ") + e.what());
  }
  if (local_width(lr) > 3) throw WidthTooLarge("local3_to_boolean: width exceeds 3");
  int n = p.size();

  Local3Conversion out;
  // Pads go after the real gadgets so occurrence numbering of the input is
  // unchanged by padding.
  auto& gadgets = out.padded.ples;
  gadgets = lr.ples;
  std::vector<int> seen(n, 0);
  for (const auto& g : lr.ples)
    for (int x : g.seq) ++seen[x];
  for (int x = 0; x < n; ++x)
    for (int k = seen[x]; k < 3; ++k) gadgets.push_back(PartialLinearExtension{{x}});

  out.occurrences.per_element.resize(n);
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t g = 0; g < gadgets.size(); ++g)
    for (std::size_t i = 0; i < gadgets[g].seq.size(); ++i) {
      int x = gadgets[g].seq[i];
      out.occurrences.per_element[x][seen[x]++] = {static_cast<int>(g),
                                                   static_cast<int>(i)};
    }
  for (int x = 0; x < n; ++x)
    if (seen[x] != 3) throw Error("local3_to_boolean: padding left occurrences short");

  auto occ_number = [&](int x, int gadget, int position) {
    const auto& occ = out.occurrences.per_element[x];
    for (int k = 0; k < 3; ++k)
      if (occ[k] == OccurrenceIndex::Occurrence{gadget, position}) return k;
    throw Error("local3_to_boolean: occurrence lookup failed");
  };

  std::vector<int> star = lex_min_linear_extension(p);
  std::vector<int> star_pos = order_positions(star, n, "linear extension");

  for (int number = 0; number < 3; ++number) {
    PartitionScheme ps;
    for (std::size_t g = 0; g < gadgets.size(); ++g) {
      std::vector<int> block;
      for (std::size_t i = 0; i < gadgets[g].seq.size(); ++i) {
        int x = gadgets[g].seq[i];
        if (occ_number(x, static_cast<int>(g), static_cast<int>(i)) == number)
          block.push_back(x);
      }
      if (!block.empty()) ps.blocks.push_back(std::move(block));
    }
    out.partitions.push_back(std::move(ps));
  }

  // Conflict graph: x below y in the extension, but some gadget puts y first
  // while hosting occurrences with different numbers.
  std::vector<std::pair<int, int>> conflicts;
  for (std::size_t g = 0; g < gadgets.size(); ++g) {
    const auto& seq = gadgets[g].seq;
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        int y = seq[i], x = seq[j];
        if (star_pos[x] < star_pos[y] &&
            occ_number(x, static_cast<int>(g), static_cast<int>(j)) !=
                occ_number(y, static_cast<int>(g), static_cast<int>(i)))
          conflicts.emplace_back(std::min(x, y), std::max(x, y));
      }
  }
  Digraph conflict_graph = Digraph::from_arcs(n, std::move(conflicts));
  out.coloring = greedy_coloring(conflict_graph, degeneracy_order(conflict_graph));
  out.colors_used =
      n == 0 ? 0 : 1 + *std::max_element(out.coloring.begin(), out.coloring.end());

  for (int np = 0; np < 3; ++np)
    for (int nq = np + 1; nq < 3; ++nq)
      for (int a = 0; a < out.colors_used; ++a)
        for (int b = 0; b < out.colors_used; ++b) {
          if (a == b) continue;
          PartitionScheme ps;
          Bits covered(n);
          for (std::size_t g = 0; g < gadgets.size(); ++g) {
            std::vector<int> block;
            for (std::size_t i = 0; i < gadgets[g].seq.size(); ++i) {
              int x = gadgets[g].seq[i];
              int number = occ_number(x, static_cast<int>(g), static_cast<int>(i));
              if ((number == np && out.coloring[x] == a) ||
                  (number == nq && out.coloring[x] == b)) {
                block.push_back(x);
                covered.set(x);
              }
            }
            if (!block.empty()) ps.blocks.push_back(std::move(block));
          }
          for (int x = 0; x < n; ++x)
            if (!covered.test(x)) ps.blocks.push_back({x});
          out.partitions.push_back(std::move(ps));
        }

  int t = static_cast<int>(out.partitions.size());
  std::vector<std::vector<int>> orders;
  orders.reserve(1 + 2 * static_cast<std::size_t>(t));
  orders.push_back(std::move(star));
  for (const auto& ps : out.partitions) {
    orders.push_back(ps.ascending());
    orders.push_back(ps.descending());
  }
  out.certificate = BooleanRealizer{std::move(orders), GuardedConjunction{t}};
  if (!verify_boolean_realizer(p, out.certificate))
    throw Error("local3_to_boolean: output failed verification");
  return out;
}

struct RamseyCycleWitness {
  std::array<int, 4> vertices{-1, -1, -1, -1};  // i < j < k < l
  std::pair<int, int> color{-1, -1};            // shared occurrence pair (p,q)
  int ple = -1;                                 // extension hosting the cycle
  std::array<int, 4> cycle{-1, -1, -1, -1};     // v_j, v_jv_l, v_k, v_iv_k
};

/**
 * Ramsey-style refuter for candidate local realizers of incidence_poset(n).
 * Colors each vertex triple i<j<k by the least occurrence pair (p,q) such
 * that some ple holds the p-th occurrence of v_j above the q-th occurrence
 * of v_iv_k; a quadruple whose four triples share a color pins all five
 * participants into one ple, which then contains the 4-cycle
 * v_j < v_jv_l < v_k < v_iv_k < v_j and cannot be a linear extension.
 */
inline std::optional<RamseyCycleWitness> ramsey_cycle_witness(int n,
                                                              const LocalRealizer& family) {
  if (n < 2) throw BadParameter("ramsey_cycle_witness: n < 2");
  int ground = n + n * (n - 1) / 2;
  std::vector<std::vector<std::pair<int, int>>> occ(ground);  // (ple, position)
  for (std::size_t t = 0; t < family.ples.size(); ++t) {
    std::vector<char> dup(ground, 0);
    const auto& seq = family.ples[t].seq;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      int x = seq[i];
      if (x < 0 || x >= ground)
        throw MalformedOrder("ramsey_cycle_witness: element outside the ground set");
      if (dup[x]) throw MalformedOrder("ramsey_cycle_witness: element repeated in a ple");
      dup[x] = 1;
      occ[x].emplace_back(static_cast<int>(t), static_cast<int>(i));
    }
  }

  auto triple_color = [&](int i, int j, int k) -> std::pair<int, int> {
    int e = incidence_edge_id(n, i, k);
    for (std::size_t pp = 0; pp < occ[j].size(); ++pp)
      for (std::size_t qq = 0; qq < occ[e].size(); ++qq)
        if (occ[j][pp].first == occ[e][qq].first && occ[e][qq].second < occ[j][pp].second)
          return {static_cast<int>(pp), static_cast<int>(qq)};
    throw PreconditionUnmet("ramsey_cycle_witness: triple " + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) +
                            " has no ple with the outer edge below the middle vertex");
  };

  std::map<std::array<int, 3>, std::pair<int, int>> color;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) color[{i, j, k}] = triple_color(i, j, k);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          auto c = color[{i, j, k}];
          if (color[{i, j, l}] != c || color[{i, k, l}] != c || color[{j, k, l}] != c)
            continue;
          RamseyCycleWitness w;
          w.vertices = {i, j, k, l};
          w.color = c;
          w.ple = occ[j][c.first].first;
          w.cycle = {j, incidence_edge_id(n, j, l), k, incidence_edge_id(n, i, k)};
          return w;
        }
  return std::nullopt;
}

struct Thm6Refutation {
  enum class Kind { Consistent, PairViolation, QuadrupleViolation, ColoringCount };
  Kind kind = Kind::Consistent;
  std::array<int, 3> triple{-1, -1, -1};        // u,v,w of a pair violation
  std::array<int, 4> quadruple{-1, -1, -1, -1}; // u,v,w,x of a quadruple violation
  std::array<int, 3> elements{-1, -1, -1};      // poset ids of uv, vw (, wx)
  std::vector<bool> alpha;                      // pattern at the violation
  bool alpha_proper = false;                    // alpha colors G'' properly
  int chi = 0;                                  // exact chromatic number of G''
};

/**
 * Checks a candidate boolean realizer against the recursive construction.
 * Consecutive edges uv,vw share the gadget of v with vw first, so uv is
 * never below vw; a candidate whose formula accepts some alpha(uvw) claims
 * otherwise and fails on that pair. Edge pairs two steps apart satisfy
 * uv < wx, so equal patterns alpha(uvw) = alpha(vwx) with a rejecting
 * formula contradict that relation on the quadruple. Failing both, alpha is
 * a proper 2^d-coloring of G'', which is impossible once chi(G'') > 2^d.
 */
inline Thm6Refutation thm6_refute_boolean(const Theorem6Instance& inst,
                                          const BooleanRealizer& br,
                                          const Budget& budget = Budget()) {
  int m = inst.p.size();
  int d = static_cast<int>(br.orders.size());
  if (formula_arity(br.phi) != d)
    throw MalformedCandidate("thm6_refute_boolean: formula arity differs from order count");
  std::vector<std::vector<int>> pos;
  try {
    for (const auto& order : br.orders) pos.push_back(order_positions(order, m, "order"));
  } catch (const MalformedOrder& e) {
    throw MalformedCandidate(std::string("thm6_refute_boolean: ") + e.what());
  }

  Digraph gp = arc_digraph(inst.g);
  Digraph gpp = arc_digraph(gp);
  std::vector<std::vector<bool>> alpha(gp.arcs.size());
  for (std::size_t a = 0; a < gp.arcs.size(); ++a) {
    auto [e, f] = gp.arcs[a];
    alpha[a].resize(d);
    for (int i = 0; i < d; ++i) alpha[a][i] = pos[i][e] < pos[i][f];
  }

  Thm6Refutation out;
  out.chi = exact_chromatic_number(gpp, budget);
  out.alpha_proper = true;
  for (auto [a1, a2] : gpp.arcs)
    if (alpha[a1] == alpha[a2]) out.alpha_proper = false;

  for (std::size_t a = 0; a < gp.arcs.size(); ++a) {
    if (!formula_eval(br.phi, alpha[a])) continue;
    auto [e, f] = gp.arcs[a];
    out.kind = Thm6Refutation::Kind::PairViolation;
    out.triple = {inst.g.arcs[e].first, inst.g.arcs[e].second, inst.g.arcs[f].second};
    out.elements = {e, f, -1};
    out.alpha = alpha[a];
    return out;
  }

  for (auto [a1, a2] : gpp.arcs) {
    auto [e, f] = gp.arcs[a1];
    int g = gp.arcs[a2].second;
    if (alpha[a1] != alpha[a2] || formula_eval(br.phi, alpha[a1]) ||
        !inst.p.less(e, g))
      continue;
    out.kind = Thm6Refutation::Kind::QuadrupleViolation;
    out.quadruple = {inst.g.arcs[e].first, inst.g.arcs[e].second, inst.g.arcs[g].first,
                     inst.g.arcs[g].second};
    out.elements = {e, f, g};
    out.alpha = alpha[a1];
    return out;
  }

  if (out.alpha_proper && d < 31 && out.chi > (1 << d))
    out.kind = Thm6Refutation::Kind::ColoringCount;
  return out;
}

}  // namespace posetdim
