#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "posetdim/generators.hpp"
#include "posetdim/theorem6.hpp"

using namespace posetdim;

TEST_CASE("chain and antichain basics") {
  REQUIRE(chain(1).size() == 1);
  REQUIRE(chain(5).strict_pair_count() == 10);
  REQUIRE(antichain(2).strict_pair_count() == 0);
  REQUIRE(chain(0).size() == 0);
  REQUIRE_THROWS_AS(chain(-1), BadParameter);
}

TEST_CASE("intersection of orders") {
  auto p = intersection_poset({{0, 1, 2}, {0, 1, 2}});
  REQUIRE(p.strict_pair_count() == 3);
  auto q = intersection_poset({{0, 1}, {1, 0}});
  REQUIRE(q.strict_pair_count() == 0);
  Realizer r{{{0, 2, 1, 3}, {1, 0, 3, 2}}};
  REQUIRE(verify_realizer(intersection_poset(r.orders), r));
  REQUIRE_THROWS_AS(intersection_poset({}), BadParameter);
  REQUIRE_THROWS_AS(intersection_poset({{0, 1}, {0, 2}}), MalformedOrder);
}

TEST_CASE("random posets are reproducible for a seed") {
  auto a = random_poset(9, 14, 5);
  auto b = random_poset(9, 14, 5);
  REQUIRE(a.size() == 9);
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) REQUIRE(a.leq(x, y) == b.leq(x, y));
}

TEST_CASE("standard example shapes and certificates") {
  REQUIRE_THROWS_AS(standard_example(1), BadParameter);

  SECTION("k=2 gives only the realizer") {
    auto se = standard_example(2);
    REQUIRE(se.poset.size() == 4);
    REQUIRE(se.poset.strict_pair_count() == 2);
    REQUIRE(se.realizer.orders ==
            std::vector<std::vector<int>>{{1, 2, 0, 3}, {0, 3, 1, 2}});
    REQUIRE(verify_realizer(se.poset, se.realizer));
    REQUIRE_FALSE(se.local_cert.has_value());
    REQUIRE_FALSE(se.boolean_cert.has_value());
    REQUIRE(se.poset.label(0) == "a1");
    REQUIRE(se.poset.label(3) == "b2");
  }
  SECTION("k=3 adds the width-3 local certificate") {
    auto se = standard_example(3);
    REQUIRE(se.local_cert.has_value());
    REQUIRE(local_width(*se.local_cert) == 3);
    REQUIRE(verify_local_realizer(se.poset, *se.local_cert));
    REQUIRE_FALSE(se.boolean_cert.has_value());
  }
  SECTION("k=4 adds the frozen 4-order boolean certificate") {
    auto se = standard_example(4);
    REQUIRE(se.boolean_cert.has_value());
    REQUIRE(se.boolean_cert->orders ==
            std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5, 6, 7},
                                          {3, 2, 1, 0, 7, 6, 5, 4},
                                          {4, 0, 5, 1, 6, 2, 7, 3},
                                          {7, 3, 6, 2, 5, 1, 4, 0}});
    const auto& phi = std::get<TruthTable>(se.boolean_cert->phi);
    for (std::size_t idx = 0; idx < 16; ++idx)
      REQUIRE(phi.bits[idx] == (idx == 13 || idx == 14 || idx == 15));
    REQUIRE(verify_boolean_realizer(se.poset, *se.boolean_cert));
  }
  SECTION("certificates verify across a range of k") {
    for (int k = 2; k <= 8; ++k) {
      auto se = standard_example(k);
      REQUIRE(static_cast<int>(se.realizer.orders.size()) == k);
      REQUIRE(verify_realizer(se.poset, se.realizer));
      REQUIRE(se.local_cert.has_value() == (k >= 3));
      if (se.local_cert.has_value())
        REQUIRE(verify_local_realizer(se.poset, *se.local_cert));
      REQUIRE(se.boolean_cert.has_value() == (k >= 4));
      if (se.boolean_cert.has_value())
        REQUIRE(verify_boolean_realizer(se.poset, *se.boolean_cert));
    }
  }
}

TEST_CASE("incidence poset shapes and certificate") {
  REQUIRE_THROWS_AS(incidence_poset(1), BadParameter);

  SECTION("n=2 is the three-element vee") {
    auto ip = incidence_poset(2);
    REQUIRE(ip.poset.size() == 3);
    REQUIRE(ip.poset.less(0, 2));
    REQUIRE(ip.poset.less(1, 2));
    REQUIRE(ip.poset.incomparable(0, 1));
    REQUIRE(ip.cert.orders == std::vector<std::vector<int>>{
                                  {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {1, 2, 0}});
    REQUIRE(verify_boolean_realizer(ip.poset, ip.cert));
  }
  SECTION("n=4 has the frozen block layouts") {
    auto ip = incidence_poset(4);
    REQUIRE(ip.poset.size() == 10);
    REQUIRE(ip.cert.orders[0] == std::vector<int>{0, 4, 5, 6, 1, 7, 8, 2, 9, 3});
    REQUIRE(ip.cert.orders[1] == std::vector<int>{3, 2, 9, 1, 8, 7, 0, 6, 5, 4});
    REQUIRE(ip.cert.orders[2] == std::vector<int>{0, 1, 4, 2, 5, 7, 3, 6, 8, 9});
    REQUIRE(ip.cert.orders[3] == std::vector<int>{3, 9, 8, 6, 2, 7, 5, 1, 4, 0});
    REQUIRE(ip.poset.label(4) == "v1v2");
    REQUIRE(ip.poset.label(9) == "v3v4");
  }
  SECTION("certificate verifies across a range of n") {
    for (int n = 2; n <= 10; ++n) {
      auto ip = incidence_poset(n);
      REQUIRE(ip.poset.size() == n + n * (n - 1) / 2);
      REQUIRE(ip.poset.strict_pair_count() == n * (n - 1));
      REQUIRE(verify_boolean_realizer(ip.poset, ip.cert));
    }
  }
}

TEST_CASE("size predictions for the recursive construction") {
  auto s1 = theorem6_sizes(1);
  REQUIRE(s1.exact);
  REQUIRE(s1.vertices == 2);
  REQUIRE(s1.edges == 1);

  auto s2 = theorem6_sizes(2);
  REQUIRE(s2.exact);
  REQUIRE(s2.r == 2);
  REQUIRE(s2.s == 3);
  REQUIRE(s2.n == 3);
  REQUIRE(s2.vertices == 9);
  REQUIRE(s2.edges == 9);

  auto s3 = theorem6_sizes(3);
  REQUIRE(s3.exact);
  REQUIRE(s3.r == 9);
  REQUIRE(s3.s == 25);
  REQUIRE(s3.n == 2042975);
  REQUIRE(s3.vertices == 18386800);
  REQUIRE(s3.edges == 36773550);

  auto s4 = theorem6_sizes(4);
  REQUIRE_FALSE(s4.exact);
  REQUIRE(s4.log2_n > 5.9e7);
  REQUIRE(s4.log2_n < 6.0e7);
  REQUIRE(std::isfinite(s4.log2_edges));

  auto s5 = theorem6_sizes(5);
  REQUIRE_FALSE(s5.exact);
  REQUIRE(std::isinf(s5.log2_edges));

  REQUIRE_THROWS_AS(theorem6_sizes(0), BadParameter);
}

TEST_CASE("level-1 instance is the single edge") {
  auto inst = theorem6_construct(1);
  REQUIRE(inst.g.nv == 2);
  REQUIRE(inst.g.arcs == std::vector<std::pair<int, int>>{{0, 1}});
  REQUIRE(inst.p.size() == 1);
  REQUIRE(inst.orderA == std::vector<int>{0});
  REQUIRE(inst.orderB == std::vector<int>{0});
  REQUIRE(inst.gadgets.size() == 2);
  REQUIRE(inst.xsets.empty());
  auto lr = inst.local_realizer();
  REQUIRE(verify_local_realizer(inst.p, lr));
  REQUIRE(local_width(lr) == 4);
}

TEST_CASE("level-2 instance matches the frozen expansion") {
  auto inst = theorem6_construct(2);
  REQUIRE(inst.g.nv == 9);
  REQUIRE(inst.g.arcs ==
          std::vector<std::pair<int, int>>{{0, 1},
                                           {2, 3},
                                           {4, 5},
                                           {6, 0},
                                           {6, 2},
                                           {7, 1},
                                           {7, 4},
                                           {8, 3},
                                           {8, 5}});
  REQUIRE(inst.p.size() == 9);
  REQUIRE(inst.orderA == std::vector<int>{3, 5, 0, 4, 7, 1, 6, 8, 2});
  REQUIRE(inst.orderB == std::vector<int>{3, 4, 0, 1, 5, 6, 2, 7, 8});
  REQUIRE(inst.xsets ==
          std::vector<std::vector<int>>{{6, 7}, {6, 8}, {7, 8}});
  REQUIRE(inst.nsets ==
          std::vector<std::vector<int>>{{0, 2}, {1, 4}, {3, 5}});
  std::vector<std::vector<int>> gadgets{{0, 3}, {0, 5}, {1, 4}, {1, 7}, {2, 6},
                                        {2, 8}, {3, 4}, {5, 6}, {7, 8}};
  for (int v = 0; v < 9; ++v) REQUIRE(inst.gadgets[v].seq == gadgets[v]);

  auto lr = inst.local_realizer();
  REQUIRE(verify_local_realizer(inst.p, lr));
  REQUIRE(local_width(lr) == 4);

  // Arcs meeting at a middle vertex are incomparable; the matching edges of
  // one copy form a chain, as do the out-edges of one x vertex.
  REQUIRE(inst.p.incomparable(3, 0));
  REQUIRE(inst.p.less(3, 5));
  REQUIRE(inst.p.less(3, 4));
  REQUIRE(inst.p.less(0, 1));
}

TEST_CASE("level-2 orders satisfy the three ordering properties") {
  auto inst = theorem6_construct(2);
  auto posA = order_positions(inst.orderA, inst.p.size());
  auto posB = order_positions(inst.orderB, inst.p.size());
  for (int v = 0; v < inst.g.nv; ++v) {
    std::vector<int> in, out;
    for (int e = 0; e < inst.g.arc_count(); ++e) {
      if (inst.g.arcs[e].second == v) in.push_back(e);
      if (inst.g.arcs[e].first == v) out.push_back(e);
    }
    // In-edges below out-edges in both linear orders.
    for (int e : in)
      for (int f : out) {
        REQUIRE(posA[e] < posA[f]);
        REQUIRE(posB[e] < posB[f]);
      }
    // Out-edge block contiguous in orderB.
    if (!out.empty()) {
      int lo = inst.p.size(), hi = -1;
      for (int f : out) {
        lo = std::min(lo, posB[f]);
        hi = std::max(hi, posB[f]);
      }
      REQUIRE(hi - lo + 1 == static_cast<int>(out.size()));
    }
    // Gadget lists the out-edges first, then the in-edges.
    const auto& seq = inst.gadgets[v].seq;
    REQUIRE(seq.size() == in.size() + out.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      bool is_out = i < out.size();
      REQUIRE((inst.g.arcs[seq[i]].first == v) == is_out);
      REQUIRE((inst.g.arcs[seq[i]].second == v) == !is_out);
    }
  }
  // Both full orders are linear extensions of the induced order.
  REQUIRE(is_linear_extension(inst.p, inst.orderA));
  REQUIRE(is_linear_extension(inst.p, inst.orderB));
}

TEST_CASE("construction respects the size cap") {
  REQUIRE_THROWS_AS(theorem6_construct(0), BadParameter);
  REQUIRE_THROWS_AS(theorem6_construct(3), SizeCapExceeded);
  REQUIRE_THROWS_AS(theorem6_construct(2, 8), SizeCapExceeded);
  REQUIRE_NOTHROW(theorem6_construct(2, 9));
}
