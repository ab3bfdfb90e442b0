#include "hjkit/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hjkit {

namespace {

struct MwisState {
  const Hypergraph* H;
  const std::vector<Rat>* w;
  uint64_t budget;
  uint64_t nodes = 0;
  bool complete = true;
  std::vector<char> in_set;
  Rat best_weight;
  std::vector<int> best_set;
  std::vector<Rat> suffix_weight;  // total weight of vertices >= i

  bool independent_with(int v) const {
    // Every edge whose largest vertex is v and whose other vertices are all
    // chosen would become fully contained.
    for (const auto& e : H->edges) {
      if (e.back() != v) continue;
      bool all = true;
      for (size_t i = 0; i + 1 < e.size(); ++i) {
        if (!in_set[static_cast<size_t>(e[i])]) {
          all = false;
          break;
        }
      }
      if (all) return false;
    }
    return true;
  }

  void record(const Rat& weight) {
    if (weight > best_weight) {
      best_weight = weight;
      best_set.clear();
      for (size_t i = 0; i < in_set.size(); ++i) {
        if (in_set[i]) best_set.push_back(static_cast<int>(i));
      }
    }
  }

  void run(int v, const Rat& weight) {
    if (!complete) return;
    if (nodes++ >= budget) {
      complete = false;
      return;
    }
    if (v == H->n_vertices()) {
      record(weight);
      return;
    }
    if (weight + suffix_weight[static_cast<size_t>(v)] <= best_weight) {
      return;  // even taking everything left cannot beat the incumbent
    }
    // Branch: include v when feasible, then exclude.
    if (independent_with(v)) {
      in_set[static_cast<size_t>(v)] = 1;
      run(v + 1, weight + (*w)[static_cast<size_t>(v)]);
      in_set[static_cast<size_t>(v)] = 0;
    }
    run(v + 1, weight);
  }
};

}  // namespace

MwisResult max_weight_independent_set(const Hypergraph& H, const std::vector<Rat>& w,
                                      uint64_t node_budget, int size_guard) {
  H.validate();
  if (w.size() != static_cast<size_t>(H.n_vertices())) {
    throw std::invalid_argument("weight vector size != vertex count");
  }
  for (const Rat& x : w) {
    if (x < 0) throw std::invalid_argument("negative weight");
  }
  if (H.n_vertices() > size_guard) {
    MwisResult r;
    r.status = VerdictKind::Unknown;
    return r;
  }
  MwisState st;
  st.H = &H;
  st.w = &w;
  st.budget = node_budget;
  st.in_set.assign(static_cast<size_t>(H.n_vertices()), 0);
  st.best_weight = Rat(0);  // the empty set is independent
  st.suffix_weight.assign(static_cast<size_t>(H.n_vertices()) + 1, Rat(0));
  for (int i = H.n_vertices() - 1; i >= 0; --i) {
    st.suffix_weight[static_cast<size_t>(i)] =
        st.suffix_weight[static_cast<size_t>(i) + 1] + w[static_cast<size_t>(i)];
  }
  st.run(0, Rat(0));

  MwisResult r;
  r.nodes = st.nodes;
  r.set = st.best_set;
  r.weight = st.best_weight;
  r.status = st.complete ? VerdictKind::Proven : VerdictKind::Unknown;
  return r;
}

namespace {

struct ColorState {
  const Hypergraph* H;
  int r;
  uint64_t budget;
  uint64_t nodes = 0;
  bool complete = true;
  std::vector<int> order;     // assignment order
  std::vector<int> color;     // vertex -> color or -1
  std::vector<std::vector<int>> edges_of;  // vertex -> edge indices
  bool found = false;

  bool consistent_after(int v) {
    for (int ei : edges_of[static_cast<size_t>(v)]) {
      const auto& e = H->edges[static_cast<size_t>(ei)];
      bool full = true, mono = true;
      const int c0 = color[static_cast<size_t>(e[0])];
      for (int u : e) {
        const int cu = color[static_cast<size_t>(u)];
        if (cu == -1) {
          full = false;
          break;
        }
        if (cu != c0) mono = false;
      }
      if (full && mono) return false;
    }
    return true;
  }

  void run(size_t pos) {
    if (!complete || found) return;
    if (nodes++ >= budget) {
      complete = false;
      return;
    }
    if (pos == order.size()) {
      found = true;
      return;
    }
    const int v = order[pos];
    for (int c = 0; c < r && !found && complete; ++c) {
      color[static_cast<size_t>(v)] = c;
      if (consistent_after(v)) run(pos + 1);
      if (!found) color[static_cast<size_t>(v)] = -1;
    }
  }
};

}  // namespace

ColoringResult proper_coloring_search(const Hypergraph& H, int r, uint64_t node_budget) {
  H.validate();
  if (r < 1) throw std::invalid_argument("need r >= 1 colors");
  ColoringResult res;
  if (H.n_vertices() == 0) {
    res.status = VerdictKind::Refuted;  // the empty coloring is proper
    return res;
  }
  ColorState st;
  st.H = &H;
  st.r = r;
  st.budget = node_budget;
  st.color.assign(static_cast<size_t>(H.n_vertices()), -1);
  st.edges_of.resize(static_cast<size_t>(H.n_vertices()));
  for (size_t ei = 0; ei < H.edges.size(); ++ei) {
    for (int v : H.edges[ei]) st.edges_of[static_cast<size_t>(v)].push_back(static_cast<int>(ei));
  }
  st.order.resize(static_cast<size_t>(H.n_vertices()));
  std::iota(st.order.begin(), st.order.end(), 0);
  const auto deg = H.degrees();
  std::stable_sort(st.order.begin(), st.order.end(),
                   [&deg](int a, int b) { return deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)]; });
  st.run(0);

  res.nodes = st.nodes;
  if (st.found) {
    res.status = VerdictKind::Refuted;
    res.coloring = st.color;
  } else if (st.complete) {
    res.status = VerdictKind::Proven;
  } else {
    res.status = VerdictKind::Unknown;
  }
  return res;
}

namespace {

struct PatternState {
  int n;
  int k;
  const std::function<bool(const std::vector<int>&)>* forbidden;
  uint64_t budget;
  uint64_t nodes = 0;
  bool complete = true;
  std::vector<int> chosen;
  std::vector<int> best;

  bool ok_with(int item) {
    // Check all k-subsets of chosen+item that contain item.
    if (static_cast<int>(chosen.size()) < k - 1) return true;
    std::vector<int> tuple(static_cast<size_t>(k));
    std::vector<int> pick(static_cast<size_t>(k - 1));
    // Iterate (k-1)-subsets of chosen via indices.
    const int m = static_cast<int>(chosen.size());
    for (int i = 0; i < k - 1; ++i) pick[static_cast<size_t>(i)] = i;
    for (;;) {
      for (int i = 0; i < k - 1; ++i) {
        tuple[static_cast<size_t>(i)] = chosen[static_cast<size_t>(pick[static_cast<size_t>(i)])];
      }
      tuple[static_cast<size_t>(k - 1)] = item;  // chosen ascending, item largest
      if ((*forbidden)(tuple)) return false;
      int i = k - 2;
      while (i >= 0 && pick[static_cast<size_t>(i)] == m - (k - 1) + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < k - 1; ++j) {
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
      }
    }
    return true;
  }

  void run(int item) {
    if (!complete) return;
    if (nodes++ >= budget) {
      complete = false;
      return;
    }
    if (item == n) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    if (chosen.size() + static_cast<size_t>(n - item) <= best.size()) return;
    if (ok_with(item)) {
      chosen.push_back(item);
      run(item + 1);
      chosen.pop_back();
    }
    run(item + 1);
  }
};

}  // namespace

PatternFreeResult max_pattern_free_subset(
    int n_items, int k, const std::function<bool(const std::vector<int>&)>& forbidden,
    uint64_t node_budget, int size_guard) {
  if (n_items < 0 || k < 2) throw std::invalid_argument("need n_items >= 0 and k >= 2");
  PatternFreeResult r;
  if (n_items > size_guard) {
    r.status = VerdictKind::Unknown;
    return r;
  }
  PatternState st;
  st.n = n_items;
  st.k = k;
  st.forbidden = &forbidden;
  st.budget = node_budget;
  st.run(0);
  r.nodes = st.nodes;
  r.subset = st.best;
  r.status = st.complete ? VerdictKind::Proven : VerdictKind::Unknown;
  return r;
}

BruteQuasilines brute_quasilines(const std::vector<Point>& P, int k, uint64_t subset_budget) {
  BruteQuasilines out;
  if (P.size() < static_cast<size_t>(k)) return out;
  std::vector<Point> pts(P);
  std::sort(pts.begin(), pts.end());
  for (size_t i = 1; i < pts.size(); ++i) {
    if (pts[i - 1] == pts[i]) throw std::invalid_argument("brute_quasilines: duplicate point");
  }
  const int m = static_cast<int>(pts.size());
  std::vector<int> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  for (;;) {
    if (out.subsets++ >= subset_budget) {
      out.complete = false;
      return out;
    }
    std::vector<Point> subset;
    subset.reserve(static_cast<size_t>(k));
    for (int idx : pick) subset.push_back(pts[static_cast<size_t>(idx)]);
    const KSetVerdict v = classify_kset(subset, k);
    if (v.kind != KSetKind::NotQuasiline) {
      out.quasilines.push_back(subset);
      if (v.kind == KSetKind::IsLine) out.lines.push_back(subset);
    }
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

Verdict<std::array<int, 4>> scan_k43minus(const Hypergraph& H, uint64_t subset_budget) {
  H.validate();
  if (H.k != 3) throw std::invalid_argument("scan_k43minus expects a 3-uniform hypergraph");
  const int n = H.n_vertices();
  uint64_t used = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          if (used++ >= subset_budget) {
            return Verdict<std::array<int, 4>>::unknown(used);
          }
          const int inside = static_cast<int>(H.has_edge({a, b, c})) +
                             static_cast<int>(H.has_edge({a, b, d})) +
                             static_cast<int>(H.has_edge({a, c, d})) +
                             static_cast<int>(H.has_edge({b, c, d}));
          if (inside >= 3) {
            return Verdict<std::array<int, 4>>::refuted({a, b, c, d}, used);
          }
        }
      }
    }
  }
  return Verdict<std::array<int, 4>>::proven(used);
}

}  // namespace hjkit
