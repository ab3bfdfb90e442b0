#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "hjkit/oracles.hpp"
#include "hjkit/shifthyp.hpp"

using namespace hjkit;

namespace {

ShiftHypergraph sh(int k, int ell, int n) {
  ShiftParams p;
  p.k = k;
  p.ell = ell;
  p.n = n;
  p.validate();
  return build_shift(p);
}

bool independent(const Hypergraph& H, const std::vector<int>& sorted_set) {
  for (const auto& e : H.edges) {
    if (std::includes(sorted_set.begin(), sorted_set.end(), e.begin(), e.end())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("window length from the density parameter") {
  // l = ceil(2(k-1)^2 / ((k-1) - k mu)).
  CHECK(ell_for(3, Rat(1, 2)) == 16);  // 2*4 / (2 - 3/2) = 16
  CHECK(ell_for(2, Rat(1, 4)) == 4);   // 2*1 / (1 - 1/2) = 4
  CHECK(ell_for(2, Rat(1, 6)) == 3);   // 2 / (2/3) = 3
  CHECK_THROWS_AS(ell_for(3, Rat(2, 3)), std::invalid_argument);  // mu = (k-1)/k
  CHECK_THROWS_AS(ell_for(3, Rat(3, 4)), std::invalid_argument);  // mu beyond
  CHECK_THROWS_AS(ell_for(3, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(ell_for(3, Rat(-1, 2)), std::invalid_argument);
}

TEST_CASE("params validation ties ell to mu") {
  ShiftParams p;
  p.k = 3;
  p.ell = 16;
  p.n = 20;
  p.mu = Rat(1, 2);
  p.validate();
  p.ell = 15;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("the smallest two-window hypergraph") {
  // k = 2, l = 3, n = 4: vertices are the four 3-subsets of [4]; the single
  // increasing 4-sequence (1,2,3,4) contributes the edge {123, 234}.
  const ShiftHypergraph S = sh(2, 3, 4);
  CHECK(S.H.n_vertices() == 4);
  CHECK(S.H.n_edges() == 1);
  CHECK(S.H.vertex_ids ==
        std::vector<std::string>{"1,2,3", "1,2,4", "1,3,4", "2,3,4"});
  CHECK(S.H.edges[0] == std::vector<int>{0, 3});
  CHECK(S.vertex_sets[0] == std::vector<int>{1, 2, 3});
}

TEST_CASE("counting at moderate size") {
  // |V| = C(n,l), |E| = C(n, k+l-1).
  const ShiftHypergraph S = sh(3, 3, 7);
  CHECK(S.H.n_vertices() == 35);  // C(7,3)
  CHECK(S.H.n_edges() == 21);     // C(7,5)
  for (int k : {2, 3}) {
    for (int ell : {2, 3}) {
      for (int n = k + ell - 1; n <= 9; ++n) {
        const ShiftHypergraph T = sh(k, ell, n);
        CHECK(T.H.n_vertices() == static_cast<int>(binomial(n, ell)));
        CHECK(T.H.n_edges() == static_cast<int>(binomial(n, k + ell - 1)));
      }
    }
  }
}

TEST_CASE("window index set") {
  // I = { i in [k, l-k+1] : i mod k != k-1 }.
  CHECK(window_index_set(2, 3) == std::vector<int>{2});
  CHECK(window_index_set(3, 16) == std::vector<int>{3, 4, 6, 7, 9, 10, 12, 13});
  CHECK_THROWS_AS(window_index_set(3, 4), std::invalid_argument);  // l < 2k-1

  // Under the ell_for choice, |I| >= mu * l.
  for (int k : {2, 3, 4, 5}) {
    for (const Rat& mu : {Rat(1, 10), Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(3, 5)}) {
      if (mu >= Rat(k - 1, k)) continue;
      const int ell = ell_for(k, mu);
      if (ell < 2 * k - 1) continue;
      const auto I = window_index_set(k, ell);
      CHECK(Rat(static_cast<int>(I.size())) >= mu * Rat(ell));
    }
  }
}

TEST_CASE("a frozen window independent set") {
  // Sh(2; 4, 3), pi = (1,4,2,3): the pi-max of {1,2,3} and {1,2,4} is the
  // element 2 at position 2 (the only index in I); the other two vertices
  // peak at positions outside I.
  const ShiftHypergraph S = sh(2, 3, 4);
  const std::vector<int> Y = window_independent_set(S, {1, 4, 2, 3});
  CHECK(Y == std::vector<int>{0, 1});
  CHECK(independent(S.H, Y));
}

TEST_CASE("every permutation yields an independent set") {
  const ShiftHypergraph S = sh(2, 3, 5);  // 10 vertices, 5 edges
  std::vector<int> pi(5);
  std::iota(pi.begin(), pi.end(), 1);
  int checked = 0;
  do {
    const std::vector<int> Y = window_independent_set(S, pi);
    CHECK(independent(S.H, Y));
    ++checked;
  } while (std::next_permutation(pi.begin(), pi.end()));
  CHECK(checked == 120);
}

TEST_CASE("membership counts hit the exact expectation") {
  // Over all n! permutations, each vertex lands in Y_pi for exactly
  // |I|/l of them: the pi-max position is uniform over the l slots.
  const ShiftHypergraph S = sh(2, 3, 4);
  const auto I = window_index_set(2, 3);
  std::vector<int> hits(static_cast<size_t>(S.H.n_vertices()), 0);
  std::vector<int> pi{1, 2, 3, 4};
  int perms = 0;
  do {
    for (int v : window_independent_set(S, pi)) ++hits[static_cast<size_t>(v)];
    ++perms;
  } while (std::next_permutation(pi.begin(), pi.end()));
  CHECK(perms == 24);
  for (int h : hits) {
    CHECK(h * 3 == perms * static_cast<int>(I.size()));  // h = 24 * |I| / l = 8
  }
}

TEST_CASE("weighted expectation is |I|/l of the total, exactly") {
  const ShiftHypergraph S = sh(2, 3, 4);
  const std::vector<Rat> w{Rat(1, 3), Rat(7, 2), Rat(0), Rat(5)};
  Rat accumulated = 0;
  std::vector<int> pi{1, 2, 3, 4};
  do {
    for (int v : window_independent_set(S, pi)) accumulated += w[static_cast<size_t>(v)];
  } while (std::next_permutation(pi.begin(), pi.end()));
  const Rat total = Rat(1, 3) + Rat(7, 2) + Rat(5);
  CHECK(accumulated == Rat(24) * Rat(1, 3) * total);
}

TEST_CASE("heavy window search finds a mu-heavy independent set") {
  const ShiftHypergraph S = sh(2, 3, 5);
  std::vector<Rat> w;
  for (int i = 0; i < S.H.n_vertices(); ++i) w.push_back(Rat(i + 1, 3));
  const Rat mu(1, 6);  // below the guaranteed average 1/3

  const HeavySearch hs = heavy_independent_search(S, w, mu, Rng(42));
  REQUIRE(hs.found);
  CHECK(independent(S.H, hs.vertices));
  Rat weight = 0;
  for (int v : hs.vertices) weight += w[static_cast<size_t>(v)];
  CHECK(weight == hs.weight);
  CHECK(hs.weight >= mu * hs.total);
  // The recorded permutation reproduces the set.
  CHECK(window_independent_set(S, hs.permutation) == hs.vertices);
}

TEST_CASE("zero total weight is vacuously heavy") {
  const ShiftHypergraph S = sh(2, 3, 4);
  const std::vector<Rat> w(4, Rat(0));
  const HeavySearch hs = heavy_independent_search(S, w, Rat(1, 6), Rng(0));
  CHECK(hs.found);
  CHECK(hs.weight == Rat(0));
}

TEST_CASE("pair orientation is a tournament") {
  const ShiftHypergraph S = sh(3, 3, 6);
  for (size_t a = 0; a < S.vertex_sets.size(); ++a) {
    for (size_t b = a + 1; b < S.vertex_sets.size(); ++b) {
      const int ab = shift_orientation(S.vertex_sets[a], S.vertex_sets[b]);
      const int ba = shift_orientation(S.vertex_sets[b], S.vertex_sets[a]);
      CHECK((ab == 1 || ab == -1));
      CHECK(ab == -ba);
    }
  }
}

TEST_CASE("a frozen orientation value") {
  // x = {1,2,3} precedes y = {2,3,4} (smaller min); |y \ x| = |{4}| = 1 is
  // odd, so the arrow runs y -> x.
  CHECK(shift_orientation({1, 2, 3}, {2, 3, 4}) == -1);
  CHECK(shift_orientation({2, 3, 4}, {1, 2, 3}) == 1);
  // |{3,4}| = 2 even: x -> y.
  CHECK(shift_orientation({1, 2}, {3, 4}) == 1);
}

TEST_CASE("orientation certificate and the 4-point scan agree") {
  for (int n : {5, 6, 7}) {
    const ShiftHypergraph S = sh(3, 3, n);
    const OrientationCertificate cert = certify_k43minus_free(S);
    CHECK(cert.k43_free);
    CHECK(scan_k43minus(S.H).is_proven());
  }
}

TEST_CASE("certificate rejects non-shift edges") {
  const ShiftHypergraph S = sh(3, 3, 5);
  ShiftHypergraph broken = S;
  // Splice in an edge that is not three consecutive windows: {1,2,3},
  // {1,2,4}, {1,2,5} share their minimum pair, so the cyclic pattern fails.
  const int a = broken.H.index_of("1,2,3");
  const int b = broken.H.index_of("1,2,4");
  const int c = broken.H.index_of("1,2,5");
  std::vector<std::vector<int>> edges = broken.H.edges;
  std::vector<int> extra{a, b, c};
  std::sort(extra.begin(), extra.end());
  edges.push_back(extra);
  broken.H = Hypergraph::make(3, broken.H.vertex_ids, edges);
  const OrientationCertificate cert = certify_k43minus_free(broken);
  CHECK_FALSE(cert.k43_free);
  CHECK(cert.bad_edge == extra);
}
