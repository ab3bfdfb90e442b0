#pragma once

#include <map>

#include "hjkit/hjcube.hpp"
#include "hjkit/hypergraph.hpp"
#include "hjkit/linesys.hpp"
#include "hjkit/verdict.hpp"

namespace hjkit {

// A picture over a k-uniform hypergraph G: a point set P inside [k]^m with a
// labeling psi: P -> V(G) such that every quasiline inside P is a line whose
// psi-image is an edge of G. Music line of a vertex x: psi^{-1}(x).
struct Picture {
  int k = 0;
  int m = 0;  // cube dimension; 0 only for the empty picture
  std::vector<Point> points;  // sorted, distinct
  std::map<Point, int> psi;   // total on points; values index G.vertex_ids
  Hypergraph G;

  void validate() const;
  std::vector<Point> music_line(int vertex) const;  // sorted
};

struct PictureZero {
  Picture pic;
  std::vector<Line> edge_lines;  // L_e per edge of G, in edge order
};

// The base picture in [k]^{2|E|}: edge e_i contributes the line moving in
// coordinate i with constant 2 at coordinate |E|+i and 1 elsewhere; psi maps
// its point at symbol s to the s-th vertex of e_i. These lines pairwise
// intersect in no point and are the only quasilines of P0. An edgeless G
// yields the empty picture in dimension 0.
PictureZero picture_zero(const Hypergraph& G);

struct StandardCopy {
  Line U;                     // line over the music alphabet
  CombEmbedding eta_plus;     // [k]^m -> [k]^{m n}
  std::vector<Point> points;  // image of the source points, sorted
};

struct AmalgamationResult {
  Picture sigma;
  int vertex = -1;     // amalgamation vertex
  LineSystem system;   // the line system over the music alphabet
  std::vector<StandardCopy> copies;  // parallel to system.lines
};

// Partite amalgamation of a picture along the line system S over the music
// line of `vertex`. Each line U of S contributes the standard copy
// eta_U^+[P]; labels agree on overlaps, every copy has music line U over
// `vertex`, and two copies meet exactly in the intersection of their lines.
// These facts are checked here and their failure throws std::logic_error.
AmalgamationResult amalgamate(const Picture& pic, int vertex, const LineSystem& S);

struct PictureCheck {
  VerdictKind status = VerdictKind::Unknown;
  std::vector<Point> witness;  // offending k-set when Refuted
  std::string reason;          // "quasiline-not-line" or "image-not-edge"
  uint64_t nodes = 0;
};

// Exhaustive quasiline enumeration (budgeted); Proven when every quasiline is
// a line whose psi-image is an edge of G.
PictureCheck is_picture(const Picture& pic, uint64_t node_budget = ~0ull);

// Music line as a point alphabet, for building line systems over it.
PointAlphabet music_alphabet(const Picture& pic, int vertex);

}  // namespace hjkit
