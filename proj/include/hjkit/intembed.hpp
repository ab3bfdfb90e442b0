#pragma once

#include <map>
#include <optional>

#include "hjkit/hjcube.hpp"
#include "hjkit/rational.hpp"
#include "hjkit/verdict.hpp"

namespace hjkit {

struct LatticePoint {
  std::vector<BigInt> x;

  int d() const { return static_cast<int>(x.size()); }
  bool operator==(const LatticePoint& o) const { return x == o.x; }
  bool operator!=(const LatticePoint& o) const { return x != o.x; }
  bool operator<(const LatticePoint& o) const;
  std::string to_string() const;
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator*(const BigInt& s, const LatticePoint& p);
BigInt dot(const LatticePoint& a, const LatticePoint& b);

// A finite pattern F = (f_1, ..., f_k) of distinct points in Z^d; order
// matters for congruence matching. F = {1..k} in Z^1 is ap_pattern(k).
struct Configuration {
  int d = 0;
  std::vector<LatticePoint> points;

  int k() const { return static_cast<int>(points.size()); }
  void validate() const;
  BigInt dist2(int i, int j) const;      // squared distance
  BigInt diameter2() const;              // max squared distance
  static Configuration ap_pattern(int k);
  static Configuration unit_square();    // (0,0),(0,1),(1,0),(1,1)
};

struct EmbedParams {
  BigInt T;
  int n = 0;
  enum class Status { Unvalidated, InjectivityChecked, PullbackChecked };
  Status status = Status::Unvalidated;
};

// phi(a) = sum_{i=1..n} T^{2^i} f_{a(i)}: one pattern point per coordinate,
// scaled by a tower of T-powers. The image of a combinatorial line with
// moving set M is the homothetic copy v + lambda F with
// lambda = sum_{i in M} T^{2^i}.
struct PhiMap {
  Configuration F;
  EmbedParams params;
  std::vector<Point> domain;         // sorted
  std::vector<LatticePoint> image;   // parallel to domain

  const LatticePoint& image_of(const Point& p) const;
  std::optional<Point> preimage_of(const LatticePoint& y) const;
};

// Throws when two domain points collide (the message names the pair).
PhiMap phi_embed(const std::vector<Point>& X, const Configuration& F, const EmbedParams& params);

struct HomotheticCopy {
  LatticePoint v;
  BigInt lambda;  // positive integer
  bool operator<(const HomotheticCopy& o) const;
};

// All (v, lambda) with v + lambda F inside Y, lambda >= 1. Solved from point
// pairs matched to (f_1, f_2); sorted for determinism.
std::vector<HomotheticCopy> homothetic_copies(const std::vector<LatticePoint>& Y,
                                              const Configuration& F);

struct CongruentCopy {
  std::vector<int> idx;  // ordered k-tuple of indices into Z
  Rat lambda2;           // the common squared scale factor, > 0
};

struct CongruentScan {
  std::vector<CongruentCopy> copies;
  bool complete = true;
  uint64_t nodes = 0;
};

// Ordered k-tuples (z_1..z_k) of distinct points with
// |z_i - z_j|^2 = lambda2 |f_i - f_j|^2 for every pair; lambda2 exact
// rational. Backtracking with distance-matrix pruning.
CongruentScan scaled_congruent_copies(const std::vector<LatticePoint>& Z,
                                      const Configuration& F, uint64_t node_budget = ~0ull);

struct PullbackReport {
  VerdictKind status = VerdictKind::Unknown;
  std::vector<Point> witness;  // preimage k-set that is not a quasiline
  uint64_t nodes = 0;
};

// Every scaled-congruent copy of F inside phi[X] must pull back to a
// quasiline of X. Proven / Refuted(witness) / Unknown on budget.
PullbackReport pullback_verify(const std::vector<Point>& X, const Configuration& F,
                               const EmbedParams& params, uint64_t node_budget = ~0ull);

struct ChooseTResult {
  EmbedParams params;
  bool ok = false;
  int doublings = 0;
};

// Starts at T = 2(k s n + 1) with s = ceil(|f|_max) and doubles until the
// embedding is injective and pullback_verify returns Proven. A-posteriori
// validation only; no growth-rate argument is trusted.
ChooseTResult choose_T(const std::vector<Point>& X, const Configuration& F, int n,
                       int max_doublings = 40, uint64_t node_budget = ~0ull);

// Offsets v_1..v_R placing the parts so that no scaled-congruent copy of F in
// the union crosses two translates; certified by scanning the union, doubling
// the gap on failure. Parts must be nonempty and share F's dimension.
std::vector<LatticePoint> separate_translates(const std::vector<std::vector<LatticePoint>>& parts,
                                              const Configuration& F,
                                              uint64_t node_budget = ~0ull);

}  // namespace hjkit
