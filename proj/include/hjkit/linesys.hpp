#pragma once

#include <array>
#include <map>
#include <optional>

#include "hjkit/hjcube.hpp"
#include "hjkit/oracles.hpp"
#include "hjkit/rng.hpp"

namespace hjkit {

// A finite system of combinatorial lines in A^n over an alphabet of size k.
// When the symbols are points of an underlying cube (a music line), the
// alphabet field carries them; nothing else in this module depends on it.
struct LineSystem {
  int k = 0;
  int n = 0;
  std::vector<Line> lines;
  std::optional<PointAlphabet> alphabet;

  void validate() const;
  std::vector<Point> covered_points() const;  // union of the lines, sorted
};

// Three distinct lines can interact as:
//  - Triangle: pairwise intersecting with no common point (three distinct
//    pairwise intersection points);
//  - Tripod: a common point, with one moving set the disjoint union of the
//    other two;
//  - Neither.
enum class TripleKind { Triangle, Tripod, Neither };

struct TripleVerdict {
  TripleKind kind = TripleKind::Neither;
  std::optional<Point> common_point;               // tripod apex
  std::optional<std::array<int, 3>> tripod_roles;  // input positions: split line, then its parts
  std::vector<Point> pairwise_points;              // triangle: the 3 intersection points
};

TripleVerdict classify_triple(const Line& a, const Line& b, const Line& c);

struct SuitabilityReport {
  bool suitable = true;
  std::optional<std::pair<Point, std::vector<int>>> degree_violation;  // point, line indices
  std::optional<std::array<int, 3>> triple_violation;                  // line indices
  TripleKind triple_kind = TripleKind::Neither;
};

// Suitable: every point lies on at most d lines (d absent = unbounded) and no
// three lines form a triangle or a tripod. First violation reported.
SuitabilityReport is_suitable(const LineSystem& S, std::optional<int> d);

struct GreedyOutcome {
  LineSystem system;
  bool reached_target = true;
  uint64_t proposals = 0;
  uint64_t rejections = 0;
};

// Randomized greedy: sample unused lines of A^n uniformly, accept those that
// keep the system suitable, stop at target lines or after a run of
// max_consecutive_rejections. The result is always suitable.
GreedyOutcome greedy_build(int k, int n, std::optional<int> d, int target, Rng rng,
                           uint64_t max_consecutive_rejections = 2000);

struct MonoCensus {
  std::vector<uint64_t> mono_by_moving;   // [i-1] = monochromatic lines with |M_L| = i
  std::vector<uint64_t> total_by_moving;  // [i-1] = lines inspected with |M_L| = i
  uint64_t mono_total = 0;
  uint64_t total = 0;
};

// Census over an explicit system; the coloring must cover every point of it.
MonoCensus mono_census(const LineSystem& S, const std::map<Point, int>& coloring);

// Census over all of L(A^n); class i has C(n,i) k^{n-i} lines.
MonoCensus mono_census_full(int k, int n, const std::function<int(const Point&)>& coloring);

// Proven: every r-coloring of the covered points leaves some line of S
// monochromatic. Refuted: witness coloring (as vertex colors of the covered
// points in sorted order). Runs the hypergraph coloring engine on the
// line-incidence hypergraph of S.
ColoringResult chromatic_exceeds(const LineSystem& S, int r, uint64_t node_budget = 1ull << 22);

// The line-incidence hypergraph: vertices = covered points (sorted order,
// ids = digit strings), edges = the lines' point sets.
Hypergraph line_incidence_hypergraph(const LineSystem& S);

}  // namespace hjkit
