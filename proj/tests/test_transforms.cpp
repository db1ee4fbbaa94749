#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "posetdim/generators.hpp"
#include "posetdim/solvers.hpp"
#include "posetdim/theorem6.hpp"
#include "posetdim/transforms.hpp"

using namespace posetdim;

namespace {

using Orders = std::vector<std::vector<int>>;

Poset poset_from_strict_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Bits> rows(n, Bits(n));
  for (int x = 0; x < n; ++x) rows[x].set(x);
  for (auto [x, y] : pairs) rows[x].set(y);
  return Poset::from_relation(n, std::move(rows));
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

TruthTable table_with_ones(int arity, const std::vector<std::size_t>& ones) {
  TruthTable t = TruthTable::of_arity(arity);
  for (std::size_t idx : ones) t.bits[idx] = true;
  return t;
}

// Orientation induced by one order of a realizer: incomparable pairs follow it.
std::vector<std::pair<int, int>> orientation_from_order(const Poset& p,
                                                        const std::vector<int>& order) {
  auto pos = order_positions(order, p.size(), "order");
  std::vector<std::pair<int, int>> orient;
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y) {
      if (!p.incomparable(x, y)) continue;
      if (pos[x] < pos[y])
        orient.emplace_back(x, y);
      else
        orient.emplace_back(y, x);
    }
  return orient;
}

// Mixed bag of small posets for round-trip properties.
std::vector<Poset> sample_posets() {
  std::vector<Poset> out;
  for (int n = 0; n <= 5; ++n) out.push_back(chain(n));
  for (int n = 2; n <= 4; ++n) out.push_back(antichain(n));
  for (int k = 2; k <= 3; ++k) out.push_back(standard_example(k).poset);
  out.push_back(poset_from_strict_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  for (unsigned seed = 100; seed < 112; ++seed) out.push_back(random_poset(5, 10, seed));
  for (unsigned seed = 200; seed < 206; ++seed) out.push_back(random_poset(6, 12, seed));
  return out;
}

// The derived relation claimed for the width-3 conversion output: below in
// the extension and never reversed inside a shared block.
bool derived_relation(const Local3Conversion& conv, const std::vector<int>& star_pos,
                      int x, int y) {
  if (star_pos[x] >= star_pos[y]) return false;
  for (const auto& ps : conv.partitions)
    for (const auto& block : ps.blocks) {
      int px = -1, py = -1;
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (block[i] == x) px = static_cast<int>(i);
        if (block[i] == y) py = static_cast<int>(i);
      }
      if (px != -1 && py != -1 && py < px) return false;
    }
  return true;
}

void check_local3_output(const Poset& p, const Local3Conversion& conv) {
  REQUIRE(verify_boolean_realizer(p, conv.certificate));
  int c = conv.colors_used;
  REQUIRE(static_cast<int>(conv.partitions.size()) == 3 + 3 * c * (c - 1));
  REQUIRE(conv.certificate.arity() == 1 + 2 * (3 + 3 * c * (c - 1)));
  if (p.size() == 0) return;
  auto star_pos = order_positions(conv.certificate.orders[0], p.size(), "extension");
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (x != y) REQUIRE(derived_relation(conv, star_pos, x, y) == p.less(x, y));
}

// Width <= 3 certificate: a 2-realizer's orders plus one seeded partial
// extension over a random subset.
LocalRealizer seeded_width3_cert(const Poset& p, const Realizer& two, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<PartialLinearExtension> ples;
  for (const auto& order : two.orders) ples.push_back(PartialLinearExtension{order});
  std::vector<int> extra;
  for (int x = 0; x < p.size(); ++x)
    if (rng() % 2 == 0) extra.push_back(x);
  auto pos = order_positions(two.orders[0], p.size(), "order");
  std::sort(extra.begin(), extra.end(), [&](int a, int b) { return pos[a] < pos[b]; });
  if (!extra.empty()) ples.push_back(PartialLinearExtension{std::move(extra)});
  return LocalRealizer(std::move(ples));
}

}  // namespace

TEST_CASE("orientation to two realizer on fixed posets") {
  SECTION("two element antichain") {
    Realizer out = orientation_to_two_realizer(antichain(2), {{0, 1}});
    REQUIRE(out.orders == Orders{{0, 1}, {1, 0}});
  }
  SECTION("chain with the empty orientation gives two equal orders") {
    Realizer out = orientation_to_two_realizer(chain(4), {});
    REQUIRE(out.orders == Orders{{0, 1, 2, 3}, {0, 1, 2, 3}});
  }
  SECTION("hand orientation of the 4-element standard example") {
    auto se = standard_example(2);
    REQUIRE(se.realizer.orders == Orders{{1, 2, 0, 3}, {0, 3, 1, 2}});
    Realizer out =
        orientation_to_two_realizer(se.poset, {{1, 0}, {2, 0}, {1, 3}, {2, 3}});
    REQUIRE(out.orders == Orders{{1, 2, 0, 3}, {0, 3, 1, 2}});
    REQUIRE(verify_realizer(se.poset, out));
  }
}

TEST_CASE("orientation to two realizer rejects bad orientations") {
  REQUIRE_THROWS_AS(orientation_to_two_realizer(chain(2), {{0, 1}}),
                    NotTransitiveOrientation);  // comparable pair
  REQUIRE_THROWS_AS(orientation_to_two_realizer(antichain(2), {{0, 1}, {1, 0}}),
                    NotTransitiveOrientation);  // both directions
  REQUIRE_THROWS_AS(orientation_to_two_realizer(antichain(3), {{0, 1}}),
                    NotTransitiveOrientation);  // pair left unoriented
  REQUIRE_THROWS_AS(
      orientation_to_two_realizer(antichain(3), {{0, 1}, {1, 2}, {2, 0}}),
      NotTransitiveOrientation);  // cyclic, hence not transitive
  REQUIRE_THROWS_AS(orientation_to_two_realizer(antichain(2), {{0, 5}}),
                    NotTransitiveOrientation);  // id out of range
}

TEST_CASE("orientation from a two realizer order converts back") {
  for (const auto& p : sample_posets()) {
    auto dec = decide_dimension(p, 2);
    if (!dec.value) continue;
    auto orient = orientation_from_order(p, dec.witness->orders[0]);
    Realizer out = orientation_to_two_realizer(p, orient);
    REQUIRE(out.orders.size() == 2);
    REQUIRE(verify_realizer(p, out));
  }
}

TEST_CASE("boolean to realizer handles every canonical table shape") {
  auto se = standard_example(2);
  const auto m1 = se.realizer.orders[0];  // {1,2,0,3}
  const auto m2 = se.realizer.orders[1];  // {0,3,1,2}

  SECTION("conjunction tables return the orders unchanged") {
    Realizer out = boolean_to_realizer(se.poset, boolean_from_realizer(se.realizer));
    REQUIRE(out.orders == se.realizer.orders);
  }
  SECTION("a chain with the identity formula keeps its single order") {
    BooleanRealizer br{{{0, 1, 2, 3, 4}}, table_with_ones(1, {1})};
    Realizer out = boolean_to_realizer(chain(5), br);
    REQUIRE(out.orders == Orders{{0, 1, 2, 3, 4}});
  }
  SECTION("a redundant coordinate is dropped") {
    BooleanRealizer br{{m1, m2, reversed(m1)}, table_with_ones(3, {6, 7})};
    Realizer out = boolean_to_realizer(se.poset, br);
    REQUIRE(out.orders == Orders{m1, m2});
  }
  SECTION("ones at 001 and 111 orient by the two zero coordinates") {
    BooleanRealizer br{{reversed(m1), reversed(m2), m1}, table_with_ones(3, {1, 7})};
    Realizer out = boolean_to_realizer(se.poset, br);
    REQUIRE(out.orders == Orders{m2, m1});
  }
  SECTION("a single fully zero complementary pair orients by its pattern") {
    // Comparable pairs realize 011 and 101, incomparable ones 001 and 110.
    BooleanRealizer br{{{3, 0, 1, 2}, {0, 3, 2, 1}, m1}, table_with_ones(3, {3, 5, 7})};
    REQUIRE(verify_boolean_realizer(se.poset, br));
    Realizer out = boolean_to_realizer(se.poset, br);
    REQUIRE(out.orders == Orders{m1, m2});
  }
  SECTION("no fully zero pair means the poset is a chain") {
    BooleanRealizer br{{{2, 1, 0}, {0, 2, 1}, {1, 0, 2}},
                       table_with_ones(3, {1, 2, 3, 7})};
    REQUIRE(verify_boolean_realizer(chain(3), br));
    Realizer out = boolean_to_realizer(chain(3), br);
    REQUIRE(out.orders == Orders{{0, 1, 2}});
  }
  SECTION("degenerate ground sets") {
    REQUIRE(boolean_to_realizer(chain(0), BooleanRealizer{{}, table_with_ones(0, {})})
                .orders.empty());
    REQUIRE(boolean_to_realizer(chain(1), BooleanRealizer{{}, table_with_ones(0, {0})})
                .orders.empty());
  }
}

TEST_CASE("boolean to realizer rejects oversized and broken certificates") {
  auto se4 = standard_example(4);
  REQUIRE(se4.boolean_cert.has_value());
  REQUIRE_THROWS_AS(boolean_to_realizer(se4.poset, *se4.boolean_cert), ArityTooLarge);
  BooleanRealizer wrong{{{0, 1}}, table_with_ones(1, {1})};
  REQUIRE_THROWS_AS(boolean_to_realizer(antichain(2), wrong), NotARealizer);
}

TEST_CASE("boolean to realizer converts every small solver certificate") {
  for (const auto& p : sample_posets()) {
    if (p.size() > 5) continue;
    for (int d = 1; d <= 2; ++d) {
      auto dec = decide_boolean_dimension_small(p, d);
      if (!dec.value) continue;
      Realizer out = boolean_to_realizer(p, *dec.witness);
      REQUIRE(verify_realizer(p, out));
      REQUIRE(static_cast<int>(out.orders.size()) <= d);
    }
  }
}

TEST_CASE("local width two converts on fixed certificates") {
  SECTION("chain with its single order") {
    LocalRealizer lr(std::vector<PartialLinearExtension>{
        PartialLinearExtension{{0, 1, 2, 3}}});
    Realizer out = local2_to_realizer(chain(4), lr);
    REQUIRE(out.orders == Orders{{0, 1, 2, 3}});
  }
  SECTION("two element antichain") {
    LocalRealizer lr(std::vector<PartialLinearExtension>{
        PartialLinearExtension{{0, 1}}, PartialLinearExtension{{1, 0}}});
    Realizer out = local2_to_realizer(antichain(2), lr);
    REQUIRE(out.orders == Orders{{0, 1}, {1, 0}});
  }
  SECTION("two stacked antichains recover the stacked orders") {
    Poset p = poset_from_strict_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    LocalRealizer lr = local_from_realizer(Realizer{{{0, 1, 2, 3}, {1, 0, 3, 2}}});
    Realizer out = local2_to_realizer(p, lr);
    REQUIRE(out.orders == Orders{{0, 1, 2, 3}, {1, 0, 3, 2}});
  }
  SECTION("partial extensions on an antichain below a point") {
    Poset p = poset_from_strict_pairs(3, {{0, 2}, {1, 2}});
    LocalRealizer lr(std::vector<PartialLinearExtension>{
        PartialLinearExtension{{0, 1, 2}}, PartialLinearExtension{{1, 0}}});
    Realizer out = local2_to_realizer(p, lr);
    REQUIRE(out.orders == Orders{{0, 1, 2}, {1, 0, 2}});
  }
  SECTION("empty poset") {
    Realizer out = local2_to_realizer(chain(0), LocalRealizer{});
    REQUIRE(out.orders.size() == 1);
    REQUIRE(out.orders[0].empty());
  }
}

TEST_CASE("local width two conversion rejects wide and broken inputs") {
  auto se3 = standard_example(3);
  REQUIRE(se3.local_cert.has_value());
  REQUIRE_THROWS_AS(local2_to_realizer(se3.poset, *se3.local_cert), WidthTooLarge);
  // Comparable pair with no co-occurrence.
  REQUIRE_THROWS_AS(local2_to_realizer(chain(2), LocalRealizer{}), NotALocalRealizer);
  // Structurally broken ples also surface as NotALocalRealizer.
  REQUIRE_THROWS_AS(
      local2_to_realizer(chain(2), LocalRealizer(std::vector<PartialLinearExtension>{
                                       PartialLinearExtension{{5}}})),
      NotALocalRealizer);
  REQUIRE_THROWS_AS(
      local2_to_realizer(chain(2), LocalRealizer(std::vector<PartialLinearExtension>{
                                       PartialLinearExtension{{1, 0}}})),
      NotALocalRealizer);
}

TEST_CASE("local width two converts every dimension two witness") {
  for (const auto& p : sample_posets()) {
    auto dec = decide_dimension(p, 2);
    if (!dec.value) continue;
    Realizer out = local2_to_realizer(p, local_from_realizer(*dec.witness));
    REQUIRE(out.orders.size() <= 2);
    REQUIRE(verify_realizer(p, out));
  }
}

TEST_CASE("local width three conversion on the standard examples") {
  for (int k = 3; k <= 10; ++k) {
    auto se = standard_example(k);
    REQUIRE(se.local_cert.has_value());
    Local3Conversion conv = local3_to_boolean(se.poset, *se.local_cert);
    // The only reversals are same-occurrence ones, so the conflict graph is
    // empty and one color suffices.
    REQUIRE(conv.colors_used == 1);
    REQUIRE(conv.partitions.size() == 3);
    REQUIRE(conv.certificate.arity() == 7);
    check_local3_output(se.poset, conv);
  }
}

TEST_CASE("local width three conversion on small fixed certificates") {
  SECTION("chain with a single full order") {
    LocalRealizer lr(std::vector<PartialLinearExtension>{
        PartialLinearExtension{{0, 1, 2, 3}}});
    Local3Conversion conv = local3_to_boolean(chain(4), lr);
    REQUIRE(conv.colors_used == 1);
    REQUIRE(conv.certificate.arity() == 7);
    check_local3_output(chain(4), conv);
  }
  SECTION("two element antichain padded to three occurrences") {
    LocalRealizer lr(std::vector<PartialLinearExtension>{
        PartialLinearExtension{{0, 1}}, PartialLinearExtension{{1, 0}}});
    Local3Conversion conv = local3_to_boolean(antichain(2), lr);
    REQUIRE(conv.padded.ples ==
            std::vector<PartialLinearExtension>{PartialLinearExtension{{0, 1}},
                                                PartialLinearExtension{{1, 0}},
                                                PartialLinearExtension{{0}},
                                                PartialLinearExtension{{1}}});
    REQUIRE(conv.occurrences.per_element[0][2].gadget == 2);
    REQUIRE(conv.occurrences.per_element[1][2].gadget == 3);
    REQUIRE(conv.colors_used == 1);
    REQUIRE(conv.partitions[0].blocks == Orders{{0, 1}});
    REQUIRE(conv.partitions[1].blocks == Orders{{1, 0}});
    REQUIRE(conv.partitions[2].blocks == Orders{{0}, {1}});
    REQUIRE(conv.certificate.orders ==
            Orders{{0, 1}, {0, 1}, {0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}});
    check_local3_output(antichain(2), conv);
  }
  SECTION("a cross occurrence reversal forces a second color") {
    LocalRealizer lr(std::vector<PartialLinearExtension>{
        PartialLinearExtension{{0}}, PartialLinearExtension{{0, 1}},
        PartialLinearExtension{{1, 0}}});
    Local3Conversion conv = local3_to_boolean(antichain(2), lr);
    REQUIRE(conv.colors_used == 2);
    REQUIRE(conv.coloring == std::vector<int>{1, 0});
    REQUIRE(conv.partitions.size() == 9);
    REQUIRE(conv.certificate.arity() == 19);
    check_local3_output(antichain(2), conv);
  }
  SECTION("degenerate ground sets") {
    check_local3_output(chain(0), local3_to_boolean(chain(0), LocalRealizer{}));
    Local3Conversion conv = local3_to_boolean(chain(1), LocalRealizer{});
    REQUIRE(conv.certificate.arity() == 7);
    check_local3_output(chain(1), conv);
  }
}

TEST_CASE("local width three conversion on seeded certificates") {
  for (const auto& p : sample_posets()) {
    auto dec = decide_dimension(p, 2);
    if (!dec.value || p.size() == 0) continue;
    for (unsigned seed = 0; seed < 3; ++seed) {
      LocalRealizer cert = seeded_width3_cert(p, *dec.witness, 977 * seed + 13);
      REQUIRE(local_width(cert) <= 3);
      check_local3_output(p, local3_to_boolean(p, cert));
    }
  }
}

TEST_CASE("local width three conversion rejects wide and broken inputs") {
  LocalRealizer wide(std::vector<PartialLinearExtension>{
      PartialLinearExtension{{0, 1}}, PartialLinearExtension{{1, 0}},
      PartialLinearExtension{{0}}, PartialLinearExtension{{0}}});
  REQUIRE_THROWS_AS(local3_to_boolean(antichain(2), wide), WidthTooLarge);
  REQUIRE_THROWS_AS(local3_to_boolean(antichain(2), LocalRealizer{}), NotALocalRealizer);
  REQUIRE_THROWS_AS(
      local3_to_boolean(chain(2), LocalRealizer(std::vector<PartialLinearExtension>{
                                      PartialLinearExtension{{1, 0}}})),
      NotALocalRealizer);
}

TEST_CASE("incidence edge ids are dense and symmetric") {
  REQUIRE(incidence_edge_id(4, 0, 1) == 4);
  REQUIRE(incidence_edge_id(4, 1, 0) == 4);
  REQUIRE(incidence_edge_id(4, 1, 2) == 7);
  REQUIRE(incidence_edge_id(4, 2, 3) == 9);
  REQUIRE(incidence_edge_id(5, 0, 2) == 6);
  REQUIRE(incidence_edge_id(5, 1, 3) == 10);
  REQUIRE_THROWS_AS(incidence_edge_id(4, 2, 2), BadParameter);
  REQUIRE_THROWS_AS(incidence_edge_id(4, -1, 0), BadParameter);
  REQUIRE_THROWS_AS(incidence_edge_id(4, 0, 4), BadParameter);
}

TEST_CASE("ramsey cycle witness finds the cycle in a monochromatic family") {
  // One ple listing all edges, then all vertices: every triple is colored
  // with the first occurrence pair, so the very first quadruple fires.
  std::vector<int> ple;
  for (int e = 5; e < 15; ++e) ple.push_back(e);
  for (int v = 0; v < 5; ++v) ple.push_back(v);
  LocalRealizer family(
      std::vector<PartialLinearExtension>{PartialLinearExtension{ple}});
  auto w = ramsey_cycle_witness(5, family);
  REQUIRE(w.has_value());
  REQUIRE(w->vertices == std::array<int, 4>{0, 1, 2, 3});
  REQUIRE(w->color == std::pair<int, int>{0, 0});
  REQUIRE(w->ple == 0);
  REQUIRE(w->cycle == std::array<int, 4>{1, 10, 2, 6});
}

TEST_CASE("ramsey cycle witness returns none without a monochromatic quadruple") {
  SECTION("below the quadruple threshold") {
    LocalRealizer family(std::vector<PartialLinearExtension>{
        PartialLinearExtension{{3, 4, 5, 0, 1, 2}}});
    REQUIRE(!ramsey_cycle_witness(3, family).has_value());
    REQUIRE(!ramsey_cycle_witness(2, LocalRealizer{}).has_value());
  }
  SECTION("a valid certificate never yields a cycle") {
    auto ip = incidence_poset(4);
    auto dec = decide_dimension(ip.poset, 3);
    REQUIRE(dec.value);
    REQUIRE(!ramsey_cycle_witness(4, local_from_realizer(*dec.witness)).has_value());
  }
}

TEST_CASE("ramsey cycle witness validates its inputs") {
  REQUIRE_THROWS_AS(ramsey_cycle_witness(1, LocalRealizer{}), BadParameter);
  // Vertices first leaves the outer edge above the middle vertex everywhere.
  REQUIRE_THROWS_AS(
      ramsey_cycle_witness(3, LocalRealizer(std::vector<PartialLinearExtension>{
                                  PartialLinearExtension{{0, 1, 2, 3, 4, 5}}})),
      PreconditionUnmet);
  REQUIRE_THROWS_AS(
      ramsey_cycle_witness(3, LocalRealizer(std::vector<PartialLinearExtension>{
                                  PartialLinearExtension{{0, 0}}})),
      MalformedOrder);
  REQUIRE_THROWS_AS(
      ramsey_cycle_witness(3, LocalRealizer(std::vector<PartialLinearExtension>{
                                  PartialLinearExtension{{15}}})),
      MalformedOrder);
}

TEST_CASE("recursive construction refuter on built instances") {
  SECTION("the single edge instance is always consistent") {
    auto inst = theorem6_construct(1);
    BooleanRealizer br{{{0}}, table_with_ones(1, {1})};
    auto out = thm6_refute_boolean(inst, br);
    REQUIRE(out.kind == Thm6Refutation::Kind::Consistent);
    REQUIRE(out.chi == 0);
    REQUIRE(out.alpha_proper);
  }
  SECTION("level two sizes and candidate outcomes") {
    auto inst = theorem6_construct(2);
    REQUIRE(inst.p.size() == 9);
    Digraph gp = arc_digraph(inst.g);
    REQUIRE(gp.arc_count() == 3);                   // consecutive arc pairs
    REQUIRE(arc_digraph(gp).arc_count() == 0);      // no length three paths
    REQUIRE(inst.g.arc_index(6, 0) == 3);
    REQUIRE(inst.g.arc_index(0, 1) == 0);

    // Putting arc 6->0 below arc 0->1 claims a relation the gadget forbids.
    BooleanRealizer hit{{{3, 0, 1, 2, 4, 5, 6, 7, 8}}, table_with_ones(1, {1})};
    auto bad = thm6_refute_boolean(inst, hit);
    REQUIRE(bad.kind == Thm6Refutation::Kind::PairViolation);
    REQUIRE(bad.triple == std::array<int, 3>{6, 0, 1});
    REQUIRE(bad.elements == std::array<int, 3>{3, 0, -1});
    REQUIRE(bad.alpha == std::vector<bool>{true});
    REQUIRE(bad.chi == 1);

    // The identity order dodges every check: with two levels the second
    // arc digraph is empty and its chromatic number 1 cannot exceed 2.
    BooleanRealizer dodge{{{0, 1, 2, 3, 4, 5, 6, 7, 8}}, table_with_ones(1, {1})};
    auto ok = thm6_refute_boolean(inst, dodge);
    REQUIRE(ok.kind == Thm6Refutation::Kind::Consistent);
    REQUIRE(ok.chi == 1);
    REQUIRE(ok.alpha_proper);
  }
}

TEST_CASE("recursive construction refuter on synthetic instances") {
  SECTION("directed path yields pair and quadruple violations") {
    Theorem6Instance inst;
    inst.g = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}});
    inst.p = poset_from_strict_pairs(3, {{0, 2}});

    BooleanRealizer pair_hit{{{0, 1, 2}}, table_with_ones(1, {1})};
    auto pv = thm6_refute_boolean(inst, pair_hit);
    REQUIRE(pv.kind == Thm6Refutation::Kind::PairViolation);
    REQUIRE(pv.triple == std::array<int, 3>{0, 1, 2});
    REQUIRE(pv.elements == std::array<int, 3>{0, 1, -1});

    // Reversing everything leaves both consecutive patterns equal and zero
    // while the poset relates the outer arcs, an Eq. (1) contradiction.
    BooleanRealizer quad_hit{{{2, 1, 0}}, table_with_ones(1, {1})};
    auto qv = thm6_refute_boolean(inst, quad_hit);
    REQUIRE(qv.kind == Thm6Refutation::Kind::QuadrupleViolation);
    REQUIRE(qv.quadruple == std::array<int, 4>{0, 1, 2, 3});
    REQUIRE(qv.elements == std::array<int, 3>{0, 1, 2});
    REQUIRE(qv.alpha == std::vector<bool>{false});
    REQUIRE(!qv.alpha_proper);
    REQUIRE(qv.chi == 2);
  }
  SECTION("directed five cycle documents an evasive candidate honestly") {
    Theorem6Instance inst;
    inst.g = Digraph::from_arcs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    inst.p = poset_from_strict_pairs(
        5, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}});
    // Alternating patterns dodge the qualifying checks even though the
    // second arc digraph is an odd cycle; the report stays consistent but
    // records that the patterns do not even color it properly.
    BooleanRealizer evasive{{{1, 3, 0, 2, 4}}, table_with_ones(1, {})};
    auto out = thm6_refute_boolean(inst, evasive);
    REQUIRE(out.kind == Thm6Refutation::Kind::Consistent);
    REQUIRE(!out.alpha_proper);
    REQUIRE(out.chi == 3);
  }
}

TEST_CASE("recursive construction refuter rejects malformed candidates") {
  auto inst = theorem6_construct(1);
  REQUIRE_THROWS_AS(
      thm6_refute_boolean(inst, BooleanRealizer{{{0}}, table_with_ones(2, {3})}),
      MalformedCandidate);
  REQUIRE_THROWS_AS(
      thm6_refute_boolean(inst, BooleanRealizer{{{1}}, table_with_ones(1, {1})}),
      MalformedCandidate);
  auto inst2 = theorem6_construct(2);
  REQUIRE_THROWS_AS(
      thm6_refute_boolean(inst2, BooleanRealizer{{{0}}, table_with_ones(1, {1})}),
      MalformedCandidate);
}
