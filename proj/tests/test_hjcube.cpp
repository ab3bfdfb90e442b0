#include "doctest.h"

#include <algorithm>
#include <set>

#include "hjkit/hjcube.hpp"
#include "hjkit/rng.hpp"

using namespace hjkit;

namespace {

Point P(int k, const std::string& digits) { return Point::from_digits(k, digits); }

std::vector<Point> pts(int k, std::initializer_list<const char*> words) {
  std::vector<Point> out;
  for (const char* w : words) out.push_back(P(k, w));
  return out;
}

}  // namespace

TEST_CASE("points pack and unpack faithfully") {
  const Point p = P(3, "1231");
  CHECK(p.k() == 3);
  CHECK(p.dim() == 4);
  CHECK(p.at(0) == 0);
  CHECK(p.at(1) == 1);
  CHECK(p.at(2) == 2);
  CHECK(p.at(3) == 0);
  CHECK(p.to_string() == "1231");
  CHECK(p.entries() == std::vector<uint8_t>{0, 1, 2, 0});
}

TEST_CASE("point comparison is lexicographic across packing regimes") {
  // Small dimension: packed codes. Large dimension: explicit entries. The
  // order must agree with entry-wise lexicographic comparison in both.
  Rng rng(2024);
  for (int dim : {3, 8, 40, 80}) {  // 80 * 2 bits > 62, so 80 uses the fallback
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<uint8_t> a(static_cast<size_t>(dim)), b(static_cast<size_t>(dim));
      for (auto& e : a) e = static_cast<uint8_t>(rng.below(3));
      for (auto& e : b) e = static_cast<uint8_t>(rng.below(3));
      const Point pa(3, a), pb(3, b);
      CHECK((pa < pb) == (a < b));
      CHECK((pa == pb) == (a == b));
    }
  }
}

TEST_CASE("points of mixed dimensions order consistently") {
  const Point a = P(3, "11");
  const Point b = P(3, "111");
  CHECK(a != b);
  CHECK((a < b) != (b < a));
}

TEST_CASE("point guards") {
  CHECK_THROWS_AS(Point(1, std::vector<uint8_t>{0}), std::invalid_argument);   // k < 2
  CHECK_THROWS_AS(Point(3, std::vector<uint8_t>{3}), std::invalid_argument);   // entry >= k
  CHECK_THROWS_AS(Point::from_digits(3, "140"), std::invalid_argument);        // digit 4 > k
  CHECK_THROWS_AS(Point::from_digits(12, "11"), std::invalid_argument);        // digits need k <= 9
}

TEST_CASE("flatten concatenates slots") {
  const Point f = flatten(pts(3, {"12", "31"}));
  CHECK(f.to_string() == "1231");
  CHECK_THROWS_AS(flatten({P(2, "11"), P(3, "11")}), std::invalid_argument);
}

TEST_CASE("identity embedding and validation") {
  const CombEmbedding id = CombEmbedding::identity(3, 4);
  CHECK(id.apply(P(3, "1321")) == P(3, "1321"));

  CombEmbedding bad = id;
  bad.block[2] = 7;  // block index out of range
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  CombEmbedding empty_block = id;
  empty_block.source_dim = 5;  // block 4 has no coordinates
  CHECK_THROWS_AS(empty_block.validate(), std::invalid_argument);
}

TEST_CASE("embedding application matches its block description") {
  // eta: [3]^2 -> [3]^4, blocks: coord0 <- source1, coord2 <- source0,
  // constants: coord1 = 3, coord3 = 1.
  CombEmbedding eta;
  eta.k = 3;
  eta.source_dim = 2;
  eta.target_dim = 4;
  eta.block = {1, -1, 0, -1};
  eta.constant = {-1, 2, -1, 0};
  eta.validate();
  CHECK(eta.apply(P(3, "12")) == P(3, "2311"));
  CHECK(eta.apply(P(3, "31")) == P(3, "1331"));
}

TEST_CASE("embeddings are injective and send lines to lines") {
  // Every embedding of [2]^2 into [2]^4 with 2 blocks, applied to all of
  // [2]^2, produces 4 distinct points; every line of [2]^2 maps to a line.
  CombEmbedding eta;
  eta.k = 2;
  eta.source_dim = 2;
  eta.target_dim = 4;
  eta.block = {0, 1, 0, -1};
  eta.constant = {-1, -1, -1, 1};
  eta.validate();

  std::set<Point> images;
  for (const char* w : {"11", "12", "21", "22"}) images.insert(eta.apply(P(2, w)));
  CHECK(images.size() == 4);

  for (const Line& L : enumerate_lines(2, 2)) {
    std::vector<Point> mapped;
    for (const Point& q : L.points()) mapped.push_back(eta.apply(q));
    const KSetVerdict v = classify_kset(mapped, 2);
    CHECK(v.kind == KSetKind::IsLine);
  }
}

TEST_CASE("composition agrees with sequential application") {
  CombEmbedding inner;  // [3]^1 -> [3]^2
  inner.k = 3;
  inner.source_dim = 1;
  inner.target_dim = 2;
  inner.block = {0, -1};
  inner.constant = {-1, 1};
  inner.validate();

  CombEmbedding outer;  // [3]^2 -> [3]^4
  outer.k = 3;
  outer.source_dim = 2;
  outer.target_dim = 4;
  outer.block = {1, -1, 0, 0};
  outer.constant = {-1, 2, -1, -1};
  outer.validate();

  const CombEmbedding both = compose_embeddings(outer, inner);
  both.validate();
  for (const char* w : {"1", "2", "3"}) {
    CHECK(both.apply(P(3, w)) == outer.apply(inner.apply(P(3, w))));
  }
}

TEST_CASE("line points and star words") {
  const Line L = Line::from_star_word(3, "1*1");
  const std::vector<Point> ps = L.points();
  REQUIRE(ps.size() == 3);
  CHECK(ps[0] == P(3, "111"));
  CHECK(ps[1] == P(3, "121"));
  CHECK(ps[2] == P(3, "131"));
  CHECK(L.star_word() == "1*1");
  CHECK(L.point(2) == P(3, "131"));
  CHECK_THROWS_AS(Line::from_star_word(3, "111"), std::invalid_argument);  // no star
  CHECK_THROWS_AS(Line::from_star_word(3, "1*4"), std::invalid_argument);  // bad digit
}

TEST_CASE("classify_kset: line, quasiline, neither") {
  SUBCASE("a line") {
    const KSetVerdict v = classify_kset(pts(3, {"111", "121", "131"}), 3);
    CHECK(v.kind == KSetKind::IsLine);
    REQUIRE(v.line.has_value());
    CHECK(v.line->star_word() == "1*1");
  }
  SUBCASE("order of input points is irrelevant") {
    const KSetVerdict v = classify_kset(pts(3, {"131", "111", "121"}), 3);
    CHECK(v.kind == KSetKind::IsLine);
    CHECK(v.line->star_word() == "1*1");
  }
  SUBCASE("quasiline that is not a line") {
    // Both coordinates take all values but never in the same order.
    const KSetVerdict v = classify_kset(pts(3, {"12", "21", "33"}), 3);
    CHECK(v.kind == KSetKind::QuasilineOnly);
    CHECK_FALSE(v.line.has_value());
  }
  SUBCASE("k = 2: every pair is a quasiline") {
    CHECK(classify_kset(pts(2, {"12", "21"}), 2).kind == KSetKind::QuasilineOnly);
    CHECK(classify_kset(pts(2, {"11", "21"}), 2).kind == KSetKind::IsLine);
  }
  SUBCASE("not a quasiline") {
    const std::vector<Point> bad = pts(3, {"111", "121", "122"});
    const KSetVerdict v = classify_kset(bad, 3);
    CHECK(v.kind == KSetKind::NotQuasiline);
    REQUIRE(v.bad_coord.has_value());
    // Whichever coordinate is reported must genuinely violate the pattern.
    std::set<uint8_t> values;
    for (const Point& p : bad) values.insert(p.at(*v.bad_coord));
    CHECK(values.size() > 1);                              // not constant
    CHECK(values.size() < bad.size());                     // not all-distinct
  }
  SUBCASE("diagonal line") {
    const KSetVerdict v = classify_kset(pts(3, {"11", "22", "33"}), 3);
    CHECK(v.kind == KSetKind::IsLine);
    CHECK(v.line->star_word() == "**");
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(classify_kset(pts(3, {"11", "22"}), 3), std::invalid_argument);
    CHECK_THROWS_AS(classify_kset(pts(3, {"11", "11", "22"}), 3), std::invalid_argument);
  }
}

TEST_CASE("line counts by moving-set size") {
  // Class i has C(n,i) k^(n-i) lines; the total telescopes to (k+1)^n - k^n.
  CHECK(line_count(3, 2, 1) == 6);
  CHECK(line_count(2, 2) == 5);
  for (int k : {2, 3, 4}) {
    for (int n : {1, 2, 3, 4, 5}) {
      uint64_t sum = 0;
      for (int i = 1; i <= n; ++i) sum += line_count(k, n, i);
      CHECK(sum == line_count(k, n));
      CHECK(sum == pow_u64(static_cast<uint64_t>(k + 1), n) -
                       pow_u64(static_cast<uint64_t>(k), n));
    }
  }
}

TEST_CASE("enumeration agrees with the counting formula and is duplicate-free") {
  for (int k : {2, 3}) {
    for (int n : {1, 2, 3}) {
      const std::vector<Line> all = enumerate_lines(k, n);
      CHECK(all.size() == line_count(k, n));
      std::set<Line> dedup(all.begin(), all.end());
      CHECK(dedup.size() == all.size());
      const std::vector<Line> singles = enumerate_lines(k, n, 1);
      CHECK(singles.size() == line_count(k, n, 1));
    }
  }
}

TEST_CASE("the five lines of the 2x2 cube") {
  std::vector<std::string> words;
  for (const Line& L : enumerate_lines(2, 2)) words.push_back(L.star_word());
  std::sort(words.begin(), words.end());
  CHECK(words == std::vector<std::string>{"**", "*1", "*2", "1*", "2*"});
}

TEST_CASE("word-index decoding is a bijection onto lines") {
  for (int k : {2, 3}) {
    const int n = 3;
    std::set<Line> decoded;
    uint64_t star_free = 0;
    const uint64_t words = pow_u64(static_cast<uint64_t>(k + 1), n);
    for (uint64_t u = 0; u < words; ++u) {
      const auto line = line_from_word_index(k, n, u);
      if (line) {
        decoded.insert(*line);
      } else {
        ++star_free;
      }
    }
    CHECK(decoded.size() == line_count(k, n));
    CHECK(star_free == pow_u64(static_cast<uint64_t>(k), n));
  }
}

TEST_CASE("lines_within finds exactly the lines inside a point set") {
  SUBCASE("full cube") {
    for (int k : {2, 3}) {
      std::vector<Point> cube;
      for (uint64_t u = 0; u < pow_u64(static_cast<uint64_t>(k), 2); ++u) {
        std::vector<uint8_t> e{static_cast<uint8_t>(u / static_cast<uint64_t>(k)),
                               static_cast<uint8_t>(u % static_cast<uint64_t>(k))};
        cube.emplace_back(k, e);
      }
      const std::vector<Line> found = lines_within(cube, k);
      CHECK(found.size() == line_count(k, 2));
    }
  }
  SUBCASE("a set with one line") {
    const std::vector<Line> found = lines_within(pts(3, {"111", "121", "131", "222"}), 3);
    REQUIRE(found.size() == 1);
    CHECK(found[0].star_word() == "1*1");
  }
  SUBCASE("no lines") {
    CHECK(lines_within(pts(3, {"112", "121", "211"}), 3).empty());
  }
}

TEST_CASE("quasilines_within matches a brute-force classification") {
  // Property: the pruned backtracker finds exactly the k-subsets that
  // classify as quasilines, on random point sets.
  Rng rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = trial % 2 == 0 ? 2 : 3;
    const int n = 3;
    std::set<Point> chosen;
    const int size = 4 + static_cast<int>(rng.below(5));
    while (static_cast<int>(chosen.size()) < size) {
      std::vector<uint8_t> e(static_cast<size_t>(n));
      for (auto& x : e) x = static_cast<uint8_t>(rng.below(static_cast<uint64_t>(k)));
      chosen.emplace(k, e);
    }
    const std::vector<Point> P(chosen.begin(), chosen.end());

    const QuasilineScan fast = quasilines_within(P, k);
    REQUIRE(fast.complete);

    // Reference: classify every k-subset directly.
    std::set<std::vector<Point>> expect;
    std::vector<int> idx(static_cast<size_t>(k));
    const int m = static_cast<int>(P.size());
    const std::function<void(int, int)> rec = [&](int pos, int from) {
      if (pos == k) {
        std::vector<Point> sub;
        for (int i : idx) sub.push_back(P[static_cast<size_t>(i)]);
        if (classify_kset(sub, k).kind != KSetKind::NotQuasiline) expect.insert(sub);
        return;
      }
      for (int i = from; i < m; ++i) {
        idx[static_cast<size_t>(pos)] = i;
        rec(pos + 1, i + 1);
      }
    };
    rec(0, 0);

    const std::set<std::vector<Point>> got(fast.quasilines.begin(), fast.quasilines.end());
    CHECK(got == expect);
  }
}

TEST_CASE("quasilines_within respects its budget") {
  std::vector<Point> cube;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        cube.emplace_back(3, std::vector<uint8_t>{static_cast<uint8_t>(a),
                                                  static_cast<uint8_t>(b),
                                                  static_cast<uint8_t>(c)});
  const QuasilineScan scan = quasilines_within(cube, 3, 10);
  CHECK_FALSE(scan.complete);
  CHECK(scan.nodes <= 10);
}

TEST_CASE("point alphabets validate") {
  PointAlphabet A;
  A.k = 3;
  A.m = 2;
  A.symbols = pts(3, {"11", "12", "21"});
  A.validate();
  CHECK(A.size() == 3);
  CHECK(A.index_of(P(3, "12")) == 1);
  CHECK(A.index_of(P(3, "33")) == -1);

  PointAlphabet unsorted = A;
  std::swap(unsorted.symbols[0], unsorted.symbols[1]);
  CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);
}

TEST_CASE("extension agrees with apply-then-flatten on alphabet points") {
  // A = 3 points of [3]^2; eta: A^1 -> A^2 a line over the alphabet.
  PointAlphabet A;
  A.k = 3;
  A.m = 2;
  A.symbols = pts(3, {"11", "22", "33"});
  A.validate();

  CombEmbedding eta;  // source A^1, target A^2: (a) -> (a, s2)
  eta.k = 3;          // |A| = 3 symbols
  eta.source_dim = 1;
  eta.target_dim = 2;
  eta.block = {0, -1};
  eta.constant = {-1, 1};  // constant symbol: A[1] = "22"
  eta.validate();

  const CombEmbedding big = extend_embedding(eta, A);
  big.validate();
  CHECK(big.k == 3);
  CHECK(big.source_dim == 2);  // m * s = 2 * 1
  CHECK(big.target_dim == 4);  // m * n = 2 * 2

  for (int s = 0; s < 3; ++s) {
    // eta(a_s) = (a_s, "22"); flattened: a_s ++ "22".
    const Point flat_source = A.symbols[static_cast<size_t>(s)];
    const Point expected = flatten({flat_source, P(3, "22")});
    CHECK(big.apply(flat_source) == expected);
  }
}

TEST_CASE("flattened line points agree with applying the extension") {
  // For any alphabet, flatten_line_points(U, A) is the set eta_U^+[A].
  PointAlphabet A;
  A.k = 3;
  A.m = 2;
  A.symbols = pts(3, {"12", "21", "33"});
  A.validate();

  for (const Line& U : enumerate_lines(3, 2)) {  // lines of A^2, |A| = 3
    const CombEmbedding ext = extend_embedding(U.emb, A);
    std::vector<Point> via_ext;
    for (const Point& sym : A.symbols) via_ext.push_back(ext.apply(sym));
    std::vector<Point> flat = flatten_line_points(U, A);
    std::sort(flat.begin(), flat.end());
    std::sort(via_ext.begin(), via_ext.end());
    CHECK(via_ext == flat);
  }
}

TEST_CASE("order-consistent alphabets flatten lines to lines") {
  // When the sorted symbols themselves trace a line of the underlying cube,
  // every line over the alphabet flattens to a genuine line of [k]^{m n}.
  // (A general alphabet does not have this property: its flattened "lines"
  // are merely k-sets, by design.)
  PointAlphabet A;
  A.k = 3;
  A.m = 2;
  A.symbols = pts(3, {"11", "21", "31"});  // the line "*1"
  A.validate();

  for (const Line& U : enumerate_lines(3, 2)) {
    const std::vector<Point> flat = flatten_line_points(U, A);
    CHECK(classify_kset(flat, 3).kind == KSetKind::IsLine);
  }

  // Contrast: a scrambled alphabet produces a non-line flattening for the
  // diagonal.
  PointAlphabet B;
  B.k = 3;
  B.m = 2;
  B.symbols = pts(3, {"12", "21", "33"});
  B.validate();
  const Line diag = Line::from_star_word(3, "**");
  CHECK(classify_kset(flatten_line_points(diag, B), 3).kind == KSetKind::QuasilineOnly);
}

TEST_CASE("pow and binomial") {
  CHECK(pow_u64(3, 0) == 1);
  CHECK(pow_u64(3, 4) == 81);
  CHECK_THROWS_AS(pow_u64(10, 30), std::overflow_error);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(7, 5) == 21);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
}
