#include "hjkit/picture.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hjkit {

void Picture::validate() const {
  G.validate();
  if (k != G.k) throw std::invalid_argument("picture alphabet size != hypergraph uniformity");
  if (m < 0) throw std::invalid_argument("negative dimension");
  if (points.empty()) {
    if (!psi.empty()) throw std::invalid_argument("psi on an empty picture");
    return;
  }
  if (m < 1) throw std::invalid_argument("nonempty picture needs m >= 1");
  for (size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (p.dim() != m || p.k() != k) throw std::invalid_argument("picture point of wrong shape");
    if (i > 0 && !(points[i - 1] < p)) {
      throw std::invalid_argument("picture points must be sorted and distinct");
    }
    const auto it = psi.find(p);
    if (it == psi.end()) throw std::invalid_argument("psi not total on the picture");
    if (it->second < 0 || it->second >= G.n_vertices()) {
      throw std::invalid_argument("psi value out of range");
    }
  }
  if (psi.size() != points.size()) throw std::invalid_argument("psi defined off the picture");
}

std::vector<Point> Picture::music_line(int vertex) const {
  if (vertex < 0 || vertex >= G.n_vertices()) throw std::invalid_argument("vertex out of range");
  std::vector<Point> out;
  for (const auto& [p, v] : psi) {
    if (v == vertex) out.push_back(p);
  }
  return out;  // map iteration is already sorted
}

PictureZero picture_zero(const Hypergraph& G) {
  G.validate();
  PictureZero z;
  z.pic.k = G.k;
  z.pic.G = G;
  const int m = G.n_edges();
  z.pic.m = 2 * m;
  if (m == 0) return z;  // empty picture in dimension 0

  for (int e = 0; e < m; ++e) {
    CombEmbedding emb;
    emb.k = G.k;
    emb.source_dim = 1;
    emb.target_dim = 2 * m;
    emb.block.assign(static_cast<size_t>(2 * m), -1);
    emb.constant.assign(static_cast<size_t>(2 * m), 0);  // symbol 1 everywhere...
    emb.block[static_cast<size_t>(e)] = 0;               // ...except the moving coordinate e
    emb.constant[static_cast<size_t>(e)] = -1;
    emb.constant[static_cast<size_t>(m + e)] = 1;        // and the marker 2 at m+e
    emb.validate();
    const Line line{emb};
    for (int s = 0; s < G.k; ++s) {
      const Point p = line.point(s);
      z.pic.points.push_back(p);
      z.pic.psi[p] = G.edges[static_cast<size_t>(e)][static_cast<size_t>(s)];
    }
    z.edge_lines.push_back(line);
  }
  std::sort(z.pic.points.begin(), z.pic.points.end());
  z.pic.points.erase(std::unique(z.pic.points.begin(), z.pic.points.end()), z.pic.points.end());
  if (z.pic.points.size() != static_cast<size_t>(m) * static_cast<size_t>(G.k)) {
    throw std::logic_error("edge lines of the base picture must be disjoint");
  }
  z.pic.validate();
  return z;
}

PointAlphabet music_alphabet(const Picture& pic, int vertex) {
  PointAlphabet A;
  A.k = pic.k;
  A.m = pic.m;
  A.symbols = pic.music_line(vertex);
  A.validate();
  return A;
}

AmalgamationResult amalgamate(const Picture& pic, int vertex, const LineSystem& S) {
  pic.validate();
  S.validate();
  if (!S.alphabet) {
    throw std::invalid_argument("amalgamate needs a line system over a point alphabet");
  }
  const PointAlphabet& A = *S.alphabet;
  const std::vector<Point> music = pic.music_line(vertex);
  if (A.symbols != music) {
    throw std::invalid_argument("line system alphabet is not the music line of the vertex");
  }
  if (A.m != pic.m || A.k != pic.k) {
    throw std::invalid_argument("line system alphabet cube mismatch");
  }

  AmalgamationResult res;
  res.vertex = vertex;
  res.system = S;
  res.sigma.k = pic.k;
  res.sigma.m = pic.m * S.n;
  res.sigma.G = pic.G;

  std::map<Point, int> labels;
  for (const Line& U : S.lines) {
    StandardCopy copy;
    copy.U = U;
    copy.eta_plus = extend_embedding(U.emb, A);
    for (const Point& p : pic.points) {
      const Point q = copy.eta_plus.apply(p);
      copy.points.push_back(q);
      const int label = pic.psi.at(p);
      const auto [it, inserted] = labels.emplace(q, label);
      if (!inserted && it->second != label) {
        throw std::logic_error("standard copies disagree on a shared point");
      }
    }
    std::sort(copy.points.begin(), copy.points.end());
    res.copies.push_back(std::move(copy));
  }

  // Music line of each copy over the amalgamation vertex is exactly U.
  for (const StandardCopy& copy : res.copies) {
    std::vector<Point> expected = flatten_line_points(copy.U, A);
    std::sort(expected.begin(), expected.end());
    std::vector<Point> got;
    for (const Point& p : pic.points) {
      if (pic.psi.at(p) == vertex) got.push_back(copy.eta_plus.apply(p));
    }
    std::sort(got.begin(), got.end());
    if (got != expected) {
      throw std::logic_error("standard copy music line differs from its line");
    }
  }

  // Two copies meet exactly in the intersection of their lines.
  for (size_t i = 0; i < res.copies.size(); ++i) {
    for (size_t j = i + 1; j < res.copies.size(); ++j) {
      std::vector<Point> got;
      std::set_intersection(res.copies[i].points.begin(), res.copies[i].points.end(),
                            res.copies[j].points.begin(), res.copies[j].points.end(),
                            std::back_inserter(got));
      std::vector<Point> pi = flatten_line_points(res.copies[i].U, A);
      std::vector<Point> pj = flatten_line_points(res.copies[j].U, A);
      std::sort(pi.begin(), pi.end());
      std::sort(pj.begin(), pj.end());
      std::vector<Point> expected;
      std::set_intersection(pi.begin(), pi.end(), pj.begin(), pj.end(),
                            std::back_inserter(expected));
      if (got != expected) {
        throw std::logic_error("copies intersect outside their lines' intersection");
      }
    }
  }

  for (const auto& [p, label] : labels) {
    res.sigma.points.push_back(p);
    res.sigma.psi[p] = label;
  }
  res.sigma.validate();
  return res;
}

PictureCheck is_picture(const Picture& pic, uint64_t node_budget) {
  pic.validate();
  PictureCheck check;
  if (pic.points.size() < static_cast<size_t>(pic.k)) {
    check.status = VerdictKind::Proven;  // no k-subset, hence no quasiline
    return check;
  }
  const QuasilineScan scan = quasilines_within(pic.points, pic.k, node_budget);
  check.nodes = scan.nodes;
  for (const auto& q : scan.quasilines) {
    const KSetVerdict v = classify_kset(q, pic.k);
    if (v.kind != KSetKind::IsLine) {
      check.status = VerdictKind::Refuted;
      check.witness = q;
      check.reason = "quasiline-not-line";
      return check;
    }
    std::vector<int> image;
    for (const Point& p : q) image.push_back(pic.psi.at(p));
    std::sort(image.begin(), image.end());
    const bool distinct = std::adjacent_find(image.begin(), image.end()) == image.end();
    if (!distinct || !pic.G.has_edge(image)) {
      check.status = VerdictKind::Refuted;
      check.witness = q;
      check.reason = "image-not-edge";
      return check;
    }
  }
  check.status = scan.complete ? VerdictKind::Proven : VerdictKind::Unknown;
  return check;
}

}  // namespace hjkit
