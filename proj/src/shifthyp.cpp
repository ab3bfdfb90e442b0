#include "hjkit/shifthyp.hpp"

#include <algorithm>
#include <stdexcept>

namespace hjkit {

void ShiftParams::validate() const {
  if (k < 2) throw std::invalid_argument("shift hypergraph needs k >= 2");
  if (ell < 1) throw std::invalid_argument("shift hypergraph needs ell >= 1");
  if (n < ell) throw std::invalid_argument("shift hypergraph needs n >= ell");
  if (mu) {
    if (*mu <= 0) throw std::invalid_argument("mu must be positive");
    if (ell != ell_for(k, *mu)) {
      throw std::invalid_argument("ell inconsistent with mu: expected " +
                                  std::to_string(ell_for(k, *mu)));
    }
  }
}

int ell_for(int k, const Rat& mu) {
  if (k < 2) throw std::invalid_argument("ell_for needs k >= 2");
  if (mu <= 0) throw std::invalid_argument("mu must be positive");
  const Rat bound = Rat(k - 1, k);
  if (mu >= bound) {
    throw std::invalid_argument("mu must be below (k-1)/k = " + format_rational(bound));
  }
  const Rat denom = Rat(k - 1) - Rat(k) * mu;
  const Rat value = Rat(2 * (k - 1) * (k - 1)) / denom;
  const BigInt c = rat_ceil(value);
  if (c > 1000000) throw std::invalid_argument("mu too close to (k-1)/k: ell would exceed 10^6");
  return static_cast<int>(c);
}

ShiftHypergraph build_shift(const ShiftParams& params) {
  params.validate();
  const int n = params.n;
  const int ell = params.ell;
  const int k = params.k;

  ShiftHypergraph S;
  S.params = params;

  // Vertices: l-subsets of [1..n] in lexicographic order.
  std::vector<int> subset(static_cast<size_t>(ell));
  for (int i = 0; i < ell; ++i) subset[static_cast<size_t>(i)] = i + 1;
  std::map<std::vector<int>, int> index_of;
  std::vector<std::string> ids;
  for (;;) {
    std::string id;
    for (int i = 0; i < ell; ++i) {
      if (i) id.push_back(',');
      id += std::to_string(subset[static_cast<size_t>(i)]);
    }
    index_of[subset] = static_cast<int>(S.vertex_sets.size());
    S.vertex_sets.push_back(subset);
    ids.push_back(id);
    int i = ell - 1;
    while (i >= 0 && subset[static_cast<size_t>(i)] == n - ell + i + 1) --i;
    if (i < 0) break;
    ++subset[static_cast<size_t>(i)];
    for (int j = i + 1; j < ell; ++j) {
      subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
    }
  }

  // Edges: one per increasing (k+l-1)-sequence; consecutive windows are
  // pairwise distinct, so every edge has k distinct vertices.
  std::vector<std::vector<int>> edges;
  const int w = k + ell - 1;
  if (n >= w) {
    std::vector<int> seq(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) seq[static_cast<size_t>(i)] = i + 1;
    for (;;) {
      std::vector<int> edge;
      edge.reserve(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) {
        std::vector<int> window(seq.begin() + i, seq.begin() + i + ell);
        edge.push_back(index_of.at(window));
      }
      edges.push_back(std::move(edge));
      int i = w - 1;
      while (i >= 0 && seq[static_cast<size_t>(i)] == n - w + i + 1) --i;
      if (i < 0) break;
      ++seq[static_cast<size_t>(i)];
      for (int j = i + 1; j < w; ++j) {
        seq[static_cast<size_t>(j)] = seq[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }
  S.H = Hypergraph::make(k, std::move(ids), std::move(edges));
  return S;
}

std::vector<int> window_index_set(int k, int ell) {
  if (k < 2) throw std::invalid_argument("window_index_set needs k >= 2");
  if (ell < 2 * k - 1) {
    throw std::invalid_argument("window_index_set needs ell >= 2k-1");
  }
  std::vector<int> I;
  for (int i = k; i <= ell - k + 1; ++i) {
    if (i % k != k - 1) I.push_back(i);  // i != -1 (mod k)
  }
  return I;
}

namespace {

// 1-based position of the pi-maximal element within the sorted set x.
int pi_max_position(const std::vector<int>& x, const std::vector<int>& pi) {
  int best_pos = 1;
  int best_val = pi[static_cast<size_t>(x[0] - 1)];
  for (size_t j = 1; j < x.size(); ++j) {
    const int v = pi[static_cast<size_t>(x[j] - 1)];
    if (v > best_val) {
      best_val = v;
      best_pos = static_cast<int>(j) + 1;
    }
  }
  return best_pos;
}

}  // namespace

std::vector<int> window_independent_set(const ShiftHypergraph& S, const std::vector<int>& pi) {
  if (pi.size() != static_cast<size_t>(S.params.n)) {
    throw std::invalid_argument("permutation must have n entries");
  }
  std::vector<char> seen(pi.size() + 1, 0);
  for (int v : pi) {
    if (v < 1 || v > S.params.n || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [1..n]");
    }
    seen[static_cast<size_t>(v)] = 1;
  }
  const std::vector<int> I = window_index_set(S.params.k, S.params.ell);
  std::vector<int> Y;
  for (size_t idx = 0; idx < S.vertex_sets.size(); ++idx) {
    const int pos = pi_max_position(S.vertex_sets[idx], pi);
    if (std::binary_search(I.begin(), I.end(), pos)) Y.push_back(static_cast<int>(idx));
  }
  return Y;
}

HeavySearch heavy_independent_search(const ShiftHypergraph& S, const std::vector<Rat>& w,
                                     const Rat& mu, Rng rng, uint64_t max_trials) {
  if (w.size() != static_cast<size_t>(S.H.n_vertices())) {
    throw std::invalid_argument("weight vector size != vertex count");
  }
  HeavySearch out;
  for (const Rat& x : w) {
    if (x < 0) throw std::invalid_argument("negative weight");
    out.total += x;
  }
  if (out.total == 0) {
    out.found = true;  // the empty set meets the bound vacuously
    return out;
  }
  const Rat threshold = mu * out.total;
  for (uint64_t t = 0; t < max_trials; ++t) {
    Rng trial = rng.split(t);
    const std::vector<int> pi = trial.permutation(S.params.n);
    const std::vector<int> Y = window_independent_set(S, pi);
    Rat weight;
    for (int v : Y) weight += w[static_cast<size_t>(v)];
    ++out.trials;
    if (weight >= threshold) {
      out.found = true;
      out.vertices = Y;
      out.permutation = pi;
      out.weight = weight;
      return out;
    }
  }
  return out;
}

int shift_orientation(const std::vector<int>& x, const std::vector<int>& y) {
  if (x == y) throw std::invalid_argument("orientation needs distinct vertices");
  // Order the pair by (min, lexicographic); the lexicographic tiebreak only
  // matters for equal minima, which never happens inside an edge.
  const bool x_first = (x[0] != y[0]) ? (x[0] < y[0]) : (x < y);
  const std::vector<int>& a = x_first ? x : y;
  const std::vector<int>& b = x_first ? y : x;
  size_t diff = 0;  // |b \ a|
  for (int v : b) {
    if (!std::binary_search(a.begin(), a.end(), v)) ++diff;
  }
  const bool a_to_b = (diff % 2 == 0);
  return (a_to_b == x_first) ? 1 : -1;
}

OrientationCertificate certify_k43minus_free(const ShiftHypergraph& S) {
  OrientationCertificate cert;
  if (S.params.k != 3) {
    throw std::invalid_argument("orientation certificate applies to 3-uniform shift hypergraphs");
  }
  for (const auto& edge : S.H.edges) {
    // Sort the triple by minimum element; window minima are distinct.
    std::array<const std::vector<int>*, 3> v = {&S.vertex_sets[static_cast<size_t>(edge[0])],
                                                &S.vertex_sets[static_cast<size_t>(edge[1])],
                                                &S.vertex_sets[static_cast<size_t>(edge[2])]};
    std::sort(v.begin(), v.end(),
              [](const std::vector<int>* a, const std::vector<int>* b) { return (*a)[0] < (*b)[0]; });
    cert.pairs_checked += 3;
    const bool cyclic = shift_orientation(*v[2], *v[1]) == 1 &&  // z -> y
                        shift_orientation(*v[1], *v[0]) == 1 &&  // y -> x
                        shift_orientation(*v[0], *v[2]) == 1;    // x -> z
    if (!cyclic) {
      cert.k43_free = false;
      cert.bad_edge = edge;
      return cert;
    }
  }
  cert.k43_free = true;
  return cert;
}

}  // namespace hjkit
