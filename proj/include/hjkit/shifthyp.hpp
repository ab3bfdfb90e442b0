#pragma once

#include <array>
#include <optional>

#include "hjkit/hypergraph.hpp"
#include "hjkit/oracles.hpp"
#include "hjkit/rational.hpp"
#include "hjkit/rng.hpp"
#include "hjkit/verdict.hpp"

namespace hjkit {

// Shift hypergraph on the l-subsets of [n]: one edge for every increasing
// sequence a_1 < ... < a_{k+l-1}, joining its k consecutive l-windows
// x_i = {a_i, ..., a_{i+l-1}}. |V| = C(n,l), |E| = C(n,k+l-1).

struct ShiftParams {
  int k = 0;
  int ell = 0;
  int n = 0;
  std::optional<Rat> mu;  // when set, ell must equal ell_for(k, mu)

  void validate() const;
};

// l = ceil(2(k-1)^2 / ((k-1) - k mu)); requires 0 < mu < (k-1)/k.
int ell_for(int k, const Rat& mu);

struct ShiftHypergraph {
  ShiftParams params;
  Hypergraph H;                                // vertex ids "a1,a2,...", ascending
  std::vector<std::vector<int>> vertex_sets;   // sorted l-subsets, lexicographic order
};

ShiftHypergraph build_shift(const ShiftParams& params);

// I = { i in [k, l-k+1] : i != -1 (mod k) }, 1-based window positions.
// Nonempty for l >= 2k-1, and |I| >= mu*l under the ell_for choice.
std::vector<int> window_index_set(int k, int ell);

// Y_pi = vertices whose pi-maximal element sits at a position in I; pi is a
// permutation of [1..n] given by value, pi[a-1] = pi(a). Independent for
// every pi. Returns sorted vertex indices.
std::vector<int> window_independent_set(const ShiftHypergraph& S, const std::vector<int>& pi);

struct HeavySearch {
  bool found = false;
  std::vector<int> vertices;     // Y_pi with weight >= mu * total, sorted
  std::vector<int> permutation;  // the witness pi
  uint64_t trials = 0;
  Rat weight;
  Rat total;
};

// Samples permutations from rng until some Y_pi carries at least mu of the
// total weight; the average over all pi is exactly |I|/l, so mu <= |I|/l
// terminates quickly. Zero total weight returns the empty set vacuously.
HeavySearch heavy_independent_search(const ShiftHypergraph& S, const std::vector<Rat>& w,
                                     const Rat& mu, Rng rng, uint64_t max_trials = 4096);

// Orientation on distinct vertices: with x before y in (min, lexicographic)
// order, x -> y iff |y \ x| is even. Every edge {x,y,z} of a shift hypergraph,
// with min(x) < min(y) < min(z), must form the cyclic triangle
// z -> y -> x -> z; a hypergraph all of whose edges are cyclic in some
// tournament spans at most 2 edges on any 4 vertices.
struct OrientationCertificate {
  bool k43_free = false;
  std::vector<int> bad_edge;      // first non-cyclic edge when !k43_free
  uint64_t pairs_checked = 0;
};

// +1 when x -> y, -1 when y -> x; x and y are distinct sorted l-subsets.
int shift_orientation(const std::vector<int>& x, const std::vector<int>& y);

OrientationCertificate certify_k43minus_free(const ShiftHypergraph& S);

}  // namespace hjkit
