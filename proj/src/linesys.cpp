#include "hjkit/linesys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hjkit {

void LineSystem::validate() const {
  if (k < 2) throw std::invalid_argument("line system needs k >= 2");
  if (n < 1) throw std::invalid_argument("line system needs n >= 1");
  std::set<Line> seen;
  for (const Line& l : lines) {
    l.emb.validate();
    if (l.emb.source_dim != 1) throw std::invalid_argument("line with more than one moving block");
    if (l.emb.k != k || l.emb.target_dim != n) {
      throw std::invalid_argument("line from a different cube");
    }
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate line in system");
  }
  if (alphabet) {
    alphabet->validate();
    if (alphabet->size() != k) {
      throw std::invalid_argument("point alphabet size != line system alphabet size");
    }
  }
}

std::vector<Point> LineSystem::covered_points() const {
  std::set<Point> pts;
  for (const Line& l : lines) {
    for (const Point& p : l.points()) pts.insert(p);
  }
  return std::vector<Point>(pts.begin(), pts.end());
}

namespace {

std::vector<Point> sorted_points(const Line& l) {
  auto pts = l.points();
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Point> intersect(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint_union_equals(const std::vector<int>& whole, const std::vector<int>& part1,
                           const std::vector<int>& part2) {
  if (whole.size() != part1.size() + part2.size()) return false;
  std::vector<int> merged;
  std::merge(part1.begin(), part1.end(), part2.begin(), part2.end(), std::back_inserter(merged));
  for (size_t i = 1; i < merged.size(); ++i) {
    if (merged[i - 1] == merged[i]) return false;  // parts overlap
  }
  return merged == whole;
}

}  // namespace

TripleVerdict classify_triple(const Line& a, const Line& b, const Line& c) {
  for (const Line* l : {&a, &b, &c}) l->emb.validate();
  if (a.emb.k != b.emb.k || a.emb.k != c.emb.k || a.dim() != b.dim() || a.dim() != c.dim()) {
    throw std::invalid_argument("classify_triple: lines from different cubes");
  }
  if (a == b || a == c || b == c) {
    throw std::invalid_argument("classify_triple: lines must be distinct");
  }

  const std::array<const Line*, 3> L = {&a, &b, &c};
  std::array<std::vector<Point>, 3> pts = {sorted_points(a), sorted_points(b), sorted_points(c)};

  const std::vector<Point> ab = intersect(pts[0], pts[1]);
  const std::vector<Point> ac = intersect(pts[0], pts[2]);
  const std::vector<Point> bc = intersect(pts[1], pts[2]);
  // Two distinct lines share at most one point: their embeddings differ, and a
  // second common point would force equal moving sets and equal constants.
  if (ab.size() > 1 || ac.size() > 1 || bc.size() > 1) {
    throw std::logic_error("distinct lines sharing two points");
  }

  std::vector<Point> common;
  if (!ab.empty() && !ac.empty() && ab[0] == ac[0]) {
    if (!bc.empty() && bc[0] == ab[0]) common = ab;
  }

  TripleVerdict v;
  if (!common.empty()) {
    // Tripod test: some line's moving set splits into the other two's.
    const std::array<std::array<int, 3>, 3> roles = {{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}}};
    for (const auto& role : roles) {
      const auto whole = L[static_cast<size_t>(role[0])]->moving();
      const auto p1 = L[static_cast<size_t>(role[1])]->moving();
      const auto p2 = L[static_cast<size_t>(role[2])]->moving();
      if (disjoint_union_equals(whole, p1, p2)) {
        v.kind = TripleKind::Tripod;
        v.common_point = common[0];
        v.tripod_roles = role;
        return v;
      }
    }
    v.kind = TripleKind::Neither;
    return v;
  }

  if (!ab.empty() && !ac.empty() && !bc.empty()) {
    v.kind = TripleKind::Triangle;
    v.pairwise_points = {ab[0], ac[0], bc[0]};
    // No common point forces the three intersection points apart.
    if (v.pairwise_points[0] == v.pairwise_points[1] ||
        v.pairwise_points[0] == v.pairwise_points[2] ||
        v.pairwise_points[1] == v.pairwise_points[2]) {
      throw std::logic_error("triangle with coincident intersection points");
    }
    return v;
  }

  v.kind = TripleKind::Neither;
  return v;
}

SuitabilityReport is_suitable(const LineSystem& S, std::optional<int> d) {
  S.validate();
  SuitabilityReport rep;

  if (d) {
    if (*d < 1) throw std::invalid_argument("degree bound must be >= 1");
    std::map<Point, std::vector<int>> at;
    for (size_t i = 0; i < S.lines.size(); ++i) {
      for (const Point& p : S.lines[i].points()) {
        auto& lines_here = at[p];
        lines_here.push_back(static_cast<int>(i));
        if (static_cast<int>(lines_here.size()) > *d) {
          rep.suitable = false;
          rep.degree_violation = {p, lines_here};
          return rep;
        }
      }
    }
  }

  for (size_t i = 0; i < S.lines.size(); ++i) {
    for (size_t j = i + 1; j < S.lines.size(); ++j) {
      for (size_t l = j + 1; l < S.lines.size(); ++l) {
        const TripleVerdict tv = classify_triple(S.lines[i], S.lines[j], S.lines[l]);
        if (tv.kind != TripleKind::Neither) {
          rep.suitable = false;
          rep.triple_violation = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(l)};
          rep.triple_kind = tv.kind;
          return rep;
        }
      }
    }
  }
  return rep;
}

GreedyOutcome greedy_build(int k, int n, std::optional<int> d, int target, Rng rng,
                           uint64_t max_consecutive_rejections) {
  if (target < 0) throw std::invalid_argument("negative target");
  GreedyOutcome out;
  out.system.k = k;
  out.system.n = n;
  out.system.validate();

  const uint64_t word_count = pow_u64(static_cast<uint64_t>(k) + 1, n);
  const uint64_t total_lines = line_count(k, n);
  std::set<Line> used;
  std::map<Point, int> degree;
  uint64_t consecutive = 0;

  while (static_cast<int>(out.system.lines.size()) < target &&
         used.size() < static_cast<size_t>(total_lines) &&
         consecutive < max_consecutive_rejections) {
    // Uniform over lines: draw words, skip star-free ones.
    std::optional<Line> cand;
    while (!cand) cand = line_from_word_index(k, n, rng.below(word_count));
    if (used.count(*cand)) {
      ++consecutive;
      continue;
    }
    ++out.proposals;

    bool ok = true;
    const auto cand_points = cand->points();
    if (d) {
      for (const Point& p : cand_points) {
        const auto it = degree.find(p);
        if (it != degree.end() && it->second + 1 > *d) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      const auto& lines = out.system.lines;
      for (size_t i = 0; i < lines.size() && ok; ++i) {
        for (size_t j = i + 1; j < lines.size() && ok; ++j) {
          if (classify_triple(*cand, lines[i], lines[j]).kind != TripleKind::Neither) ok = false;
        }
      }
    }

    if (ok) {
      used.insert(*cand);
      out.system.lines.push_back(*cand);
      for (const Point& p : cand_points) ++degree[p];
      consecutive = 0;
    } else {
      used.insert(*cand);  // rejected lines stay rejected: the obstruction persists
      ++out.rejections;
      ++consecutive;
    }
  }
  out.reached_target = static_cast<int>(out.system.lines.size()) >= target;
  return out;
}

MonoCensus mono_census(const LineSystem& S, const std::map<Point, int>& coloring) {
  S.validate();
  MonoCensus c;
  c.mono_by_moving.assign(static_cast<size_t>(S.n), 0);
  c.total_by_moving.assign(static_cast<size_t>(S.n), 0);
  for (const Line& l : S.lines) {
    const size_t cls = l.moving().size() - 1;
    ++c.total_by_moving[cls];
    ++c.total;
    bool mono = true;
    int col = 0;
    bool first = true;
    for (const Point& p : l.points()) {
      const auto it = coloring.find(p);
      if (it == coloring.end()) {
        throw std::invalid_argument("coloring missing point " + p.to_string());
      }
      if (first) {
        col = it->second;
        first = false;
      } else if (it->second != col) {
        mono = false;
      }
    }
    if (mono) {
      ++c.mono_by_moving[cls];
      ++c.mono_total;
    }
  }
  return c;
}

MonoCensus mono_census_full(int k, int n, const std::function<int(const Point&)>& coloring) {
  MonoCensus c;
  c.mono_by_moving.assign(static_cast<size_t>(n), 0);
  c.total_by_moving.assign(static_cast<size_t>(n), 0);
  for_each_line(k, n, std::nullopt, [&](const Line& l) {
    const size_t cls = l.moving().size() - 1;
    ++c.total_by_moving[cls];
    ++c.total;
    bool mono = true;
    int col = 0;
    bool first = true;
    for (const Point& p : l.points()) {
      const int here = coloring(p);
      if (first) {
        col = here;
        first = false;
      } else if (here != col) {
        mono = false;
      }
    }
    if (mono) {
      ++c.mono_by_moving[cls];
      ++c.mono_total;
    }
  });
  return c;
}

Hypergraph line_incidence_hypergraph(const LineSystem& S) {
  S.validate();
  const std::vector<Point> pts = S.covered_points();
  std::map<Point, int> idx;
  std::vector<std::string> ids;
  for (size_t i = 0; i < pts.size(); ++i) {
    idx[pts[i]] = static_cast<int>(i);
    ids.push_back(pts[i].to_string());
  }
  std::vector<std::vector<int>> edges;
  for (const Line& l : S.lines) {
    std::vector<int> e;
    for (const Point& p : l.points()) e.push_back(idx.at(p));
    edges.push_back(std::move(e));
  }
  return Hypergraph::make(S.k, std::move(ids), std::move(edges));
}

ColoringResult chromatic_exceeds(const LineSystem& S, int r, uint64_t node_budget) {
  if (r < 1) throw std::invalid_argument("colour count must be >= 1");
  if (S.lines.empty()) {
    // No line can be monochromatic; any coloring is proper.
    ColoringResult res;
    res.status = VerdictKind::Refuted;
    return res;
  }
  return proper_coloring_search(line_incidence_hypergraph(S), r, node_budget);
}

}  // namespace hjkit
