#include "doctest.h"

#include <algorithm>

#include "hjkit/oracles.hpp"

using namespace hjkit;

namespace {

bool independent(const Hypergraph& H, const std::vector<int>& set) {
  for (const auto& e : H.edges) {
    if (std::includes(set.begin(), set.end(), e.begin(), e.end())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("maximum independent weight of the 7-point plane is 4") {
  // Uniform weights. Any 5 of the 7 points contain a full edge (the
  // complement would be a 2-subset met by every one of the 7 edges, but a
  // point pair meets at most 3 + 3 - 1 < 7 of them... the oracle settles it);
  // 4 points avoiding all edges exist, e.g. the complement of an edge.
  const Hypergraph F = fano_plane();
  const std::vector<Rat> w(7, Rat(1));
  const MwisResult res = max_weight_independent_set(F, w);
  CHECK(res.status == VerdictKind::Proven);
  CHECK(res.weight == Rat(4));
  CHECK(independent(F, res.set));
  CHECK(res.set.size() == 4);
}

TEST_CASE("weights steer the optimum") {
  // Single edge {a,b,c}: the best independent set drops the lightest vertex.
  const Hypergraph H = single_edge(3);
  const MwisResult res = max_weight_independent_set(H, {Rat(5), Rat(1), Rat(3)});
  CHECK(res.status == VerdictKind::Proven);
  CHECK(res.weight == Rat(8));
  CHECK(res.set == std::vector<int>{0, 2});
}

TEST_CASE("mwis budget and size guard produce honest Unknown") {
  const Hypergraph F = fano_plane();
  const std::vector<Rat> w(7, Rat(1));
  const MwisResult starved = max_weight_independent_set(F, w, /*node_budget=*/2);
  CHECK(starved.status == VerdictKind::Unknown);
  const MwisResult guarded = max_weight_independent_set(F, w, 1ull << 20, /*size_guard=*/5);
  CHECK(guarded.status == VerdictKind::Unknown);
}

TEST_CASE("mwis rejects negative weights") {
  const Hypergraph H = single_edge(3);
  CHECK_THROWS_AS(max_weight_independent_set(H, {Rat(1), Rat(-1), Rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("proper coloring search on reference instances") {
  SUBCASE("7-point plane needs 3 colours") {
    const Hypergraph F = fano_plane();
    const ColoringResult two = proper_coloring_search(F, 2);
    CHECK(two.status == VerdictKind::Proven);  // no proper 2-coloring
    const ColoringResult three = proper_coloring_search(F, 3);
    REQUIRE(three.status == VerdictKind::Refuted);
    // The witness really is proper.
    for (const auto& e : F.edges) {
      const int c0 = three.coloring[static_cast<size_t>(e[0])];
      bool mono = true;
      for (int v : e) mono = mono && three.coloring[static_cast<size_t>(v)] == c0;
      CHECK_FALSE(mono);
    }
  }
  SUBCASE("one edge is 2-colorable but not 1-colorable") {
    const Hypergraph H = single_edge(3);
    CHECK(proper_coloring_search(H, 2).status == VerdictKind::Refuted);
    CHECK(proper_coloring_search(H, 1).status == VerdictKind::Proven);
  }
  SUBCASE("edgeless hypergraphs are properly colorable") {
    const Hypergraph H = Hypergraph::make(3, {"a", "b", "c"}, {});
    CHECK(proper_coloring_search(H, 1).status == VerdictKind::Refuted);
  }
  SUBCASE("budget exhaustion is Unknown") {
    const ColoringResult starved = proper_coloring_search(fano_plane(), 2, /*node_budget=*/2);
    CHECK(starved.status == VerdictKind::Unknown);
  }
  SUBCASE("invalid colour count") {
    CHECK_THROWS_AS(proper_coloring_search(fano_plane(), 0), std::invalid_argument);
  }
}

TEST_CASE("largest progression-free subset of 1..5 has 4 elements") {
  // Ground set {0..4} standing for 1..5; forbidden: 3-term arithmetic
  // progressions. {1,2,4,5} avoids them, and no 5-element subset can.
  const auto forbidden = [](const std::vector<int>& t) {
    return t[2] - t[1] == t[1] - t[0];
  };
  const PatternFreeResult res = max_pattern_free_subset(5, 3, forbidden);
  CHECK(res.status == VerdictKind::Proven);
  CHECK(res.subset.size() == 4);
  // The subset it found is itself progression-free.
  for (size_t a = 0; a < res.subset.size(); ++a)
    for (size_t b = a + 1; b < res.subset.size(); ++b)
      for (size_t c = b + 1; c < res.subset.size(); ++c)
        CHECK_FALSE(forbidden({res.subset[a], res.subset[b], res.subset[c]}));
}

TEST_CASE("brute quasiline census") {
  const std::vector<Point> P{Point::from_digits(3, "111"), Point::from_digits(3, "121"),
                             Point::from_digits(3, "131")};
  const BruteQuasilines scan = brute_quasilines(P, 3);
  CHECK(scan.complete);
  CHECK(scan.quasilines.size() == 1);
  CHECK(scan.lines.size() == 1);
  CHECK(scan.subsets == 1);
}

TEST_CASE("4-point scan for dense triples") {
  SUBCASE("complete 3-uniform on 4 vertices is refuted") {
    const auto v = scan_k43minus(complete_3uniform(4));
    REQUIRE(v.is_refuted());
    CHECK(*v.witness == std::array<int, 4>{0, 1, 2, 3});
  }
  SUBCASE("a single edge passes") {
    CHECK(scan_k43minus(single_edge(3)).is_proven());
  }
  SUBCASE("three edges sharing pairs on 4 vertices are refuted") {
    const Hypergraph H = Hypergraph::make(3, {"a", "b", "c", "d"},
                                          {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK(scan_k43minus(H).is_refuted());
  }
  SUBCASE("budget exhaustion is Unknown") {
    const Hypergraph sparse =
        Hypergraph::make(3, {"a", "b", "c", "d", "e", "f", "g", "h"}, {{0, 1, 2}});
    const auto v = scan_k43minus(sparse, /*subset_budget=*/3);
    CHECK(v.is_unknown());
  }
}
