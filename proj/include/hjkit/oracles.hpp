#pragma once

#include <array>
#include <functional>

#include "hjkit/hjcube.hpp"
#include "hjkit/hypergraph.hpp"
#include "hjkit/rational.hpp"
#include "hjkit/verdict.hpp"

namespace hjkit {

// Exhaustive reference engines. These are deliberately simple, budgeted, and
// hard-capped in size; production paths never call them, tests and artifact
// verification do. A set is independent when it contains no edge entirely.

struct MwisResult {
  VerdictKind status = VerdictKind::Unknown;  // Proven = exact optimum found
  std::vector<int> set;                       // best independent set seen, sorted
  Rat weight;                                 // its weight
  uint64_t nodes = 0;
};

// Branch and bound over vertices; bound = current weight + all undecided
// weight. Weights must be nonnegative.
MwisResult max_weight_independent_set(const Hypergraph& H, const std::vector<Rat>& w,
                                      uint64_t node_budget = 1ull << 22, int size_guard = 30);

struct ColoringResult {
  VerdictKind status = VerdictKind::Unknown;  // Proven = no proper r-coloring exists
  std::vector<int> coloring;                  // witness when Refuted; vertex -> 0..r-1
  uint64_t nodes = 0;
};

// A coloring is proper when no edge is monochromatic. Backtracking in a
// fixed vertex order (descending degree, index as tiebreak).
ColoringResult proper_coloring_search(const Hypergraph& H, int r,
                                      uint64_t node_budget = 1ull << 22);

struct PatternFreeResult {
  VerdictKind status = VerdictKind::Unknown;  // Proven = subset is a true maximum
  std::vector<int> subset;                    // indices into the ground set, sorted
  uint64_t nodes = 0;
};

// Largest subset of {0..n_items-1} containing no forbidden k-subset. The
// predicate receives ascending index tuples of size k.
PatternFreeResult max_pattern_free_subset(
    int n_items, int k, const std::function<bool(const std::vector<int>&)>& forbidden,
    uint64_t node_budget = 1ull << 22, int size_guard = 30);

struct BruteQuasilines {
  std::vector<std::vector<Point>> quasilines;  // all quasiline k-subsets, lines included
  std::vector<std::vector<Point>> lines;       // the ones classifying as lines
  bool complete = true;
  uint64_t subsets = 0;
};

// Classifies every k-subset of P via classify_kset.
BruteQuasilines brute_quasilines(const std::vector<Point>& P, int k,
                                 uint64_t subset_budget = ~0ull);

// Scans all 4-subsets of a 3-uniform hypergraph for one spanning >= 3 edges.
// Proven = none found; Refuted carries the 4 vertices.
Verdict<std::array<int, 4>> scan_k43minus(const Hypergraph& H, uint64_t subset_budget = ~0ull);

}  // namespace hjkit
