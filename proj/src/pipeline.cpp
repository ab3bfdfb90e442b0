#include "hjkit/pipeline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hjkit {

ConstructionTrace run_construction(const Hypergraph& G, int k, const PipelineConfig& config,
                                   std::optional<ShiftParams> shift_origin) {
  G.validate();
  if (G.k != k) throw std::invalid_argument("hypergraph uniformity != k");
  if (config.r < 1) throw std::invalid_argument("need r >= 1");
  if (config.plan.n < 1) throw std::invalid_argument("stage n must be >= 1");

  ConstructionTrace trace;
  trace.k = k;
  trace.config = config;
  trace.G = G;

  if (k == 3) {
    if (shift_origin) {
      const ShiftHypergraph S = build_shift(*shift_origin);
      if (S.H.edges != G.edges || S.H.vertex_ids != G.vertex_ids) {
        throw std::invalid_argument("shift_origin does not rebuild the given hypergraph");
      }
      const OrientationCertificate cert = certify_k43minus_free(S);
      if (!cert.k43_free) throw std::logic_error("shift hypergraph failed orientation check");
      trace.k43 = Verdict<std::array<int, 4>>::proven(cert.pairs_checked);
    } else {
      trace.k43 = scan_k43minus(G, config.k43_budget);
      if (trace.k43.is_refuted()) {
        throw std::invalid_argument("hypergraph contains four vertices spanning three edges");
      }
    }
  }
  trace.mu_evidence.shift = shift_origin;
  trace.mu_evidence.oracle_small = G.n_vertices() <= 30;

  trace.base = picture_zero(G);
  if (trace.base.pic.points.empty()) {
    trace.stop_reason = "edgeless hypergraph";
    return trace;
  }

  const int requested = config.stages == 0 ? G.n_vertices() : config.stages;
  Picture current = trace.base.pic;
  for (int stage = 1; stage <= requested; ++stage) {
    if (stage > G.n_vertices()) {
      trace.stop_reason = "no vertices left";
      break;
    }
    const int vertex = stage - 1;
    const std::vector<Point> music = current.music_line(vertex);
    if (music.size() < 2) {
      trace.stop_reason = "degenerate music line at stage " + std::to_string(stage);
      break;
    }
    const long long next_dim =
        static_cast<long long>(current.m) * static_cast<long long>(config.plan.n);
    if (next_dim > config.dim_cap) {
      trace.stop_reason = "dimension cap at stage " + std::to_string(stage);
      break;
    }

    StageRecord rec;
    rec.index = stage;
    rec.vertex = vertex;
    rec.n = config.plan.n;

    const PointAlphabet A = music_alphabet(current, vertex);
    if (config.plan.policy == StagePolicy::Sparse) {
      Rng rng = Rng::stream(config.seed, "pipeline.stage." + std::to_string(stage));
      GreedyOutcome greedy =
          greedy_build(A.size(), config.plan.n, config.plan.d, config.plan.target, rng);
      rec.system = std::move(greedy.system);
    } else {
      rec.system.k = A.size();
      rec.system.n = config.plan.n;
      rec.system.lines = enumerate_lines(A.size(), config.plan.n);
    }
    rec.system.alphabet = A;
    rec.system.validate();
    if (rec.system.lines.empty()) {
      trace.stop_reason = "empty line system at stage " + std::to_string(stage);
      break;
    }
    rec.chromatic = chromatic_exceeds(rec.system, config.r, config.chromatic_budget);

    AmalgamationResult amal = amalgamate(current, vertex, rec.system);
    rec.copies = std::move(amal.copies);
    rec.picture = std::move(amal.sigma);
    rec.m = rec.picture.m;
    rec.picture_check = is_picture(rec.picture, config.picture_budget);

    current = rec.picture;
    trace.stages.push_back(std::move(rec));
  }
  return trace;
}

namespace {

int colour_of(const std::map<Point, int>& colouring, const Point& p) {
  const auto it = colouring.find(p);
  if (it == colouring.end()) {
    throw std::invalid_argument("colouring missing point " + p.to_string());
  }
  return it->second;
}

}  // namespace

RamseyOutcome ramsey_witness(const ConstructionTrace& trace,
                             const std::map<Point, int>& colouring) {
  const Picture& final_pic = trace.final_picture();
  if (final_pic.points.empty()) {
    return StageFailure{0, "empty final picture"};
  }
  for (const Point& p : final_pic.points) colour_of(colouring, p);  // totality

  // eta maps the current stage's cube into the final cube.
  CombEmbedding eta = CombEmbedding::identity(trace.k, final_pic.m);
  std::vector<int> stage_colours(trace.stages.size(), -1);

  for (size_t si = trace.stages.size(); si-- > 0;) {
    const StageRecord& rec = trace.stages[si];
    const PointAlphabet& A = *rec.system.alphabet;
    std::optional<size_t> found;
    int rho = -1;
    for (size_t ui = 0; ui < rec.system.lines.size() && !found; ++ui) {
      const std::vector<Point> pts = flatten_line_points(rec.system.lines[ui], A);
      int c = -1;
      bool mono = true;
      for (const Point& p : pts) {
        const int here = colour_of(colouring, eta.apply(p));
        if (c == -1) {
          c = here;
        } else if (here != c) {
          mono = false;
          break;
        }
      }
      if (mono) {
        found = ui;
        rho = c;
      }
    }
    if (!found) {
      return StageFailure{rec.index, "no monochromatic line in the stage system"};
    }
    stage_colours[si] = rho;
    eta = compose_embeddings(eta, rec.copies[*found].eta_plus);
  }

  // eta now maps the base cube into the final cube. Collapse colours per
  // vertex: defined when the vertex's base music line is nonempty and
  // monochromatic under the pulled-back colouring.
  const Picture& base = trace.base.pic;
  std::vector<int> collapsed(static_cast<size_t>(base.G.n_vertices()), -2);  // -2 = empty
  for (const auto& [p, v] : base.psi) {
    const int c = colour_of(colouring, eta.apply(p));
    int& slot = collapsed[static_cast<size_t>(v)];
    if (slot == -2) {
      slot = c;
    } else if (slot != c) {
      slot = -1;  // mixed
    }
  }
  // Stages guarantee collapse on their vertices; check the bookkeeping.
  for (const StageRecord& rec : trace.stages) {
    const int c = collapsed[static_cast<size_t>(rec.vertex)];
    if (c != stage_colours[static_cast<size_t>(rec.index - 1)]) {
      throw std::logic_error("stage colour disagrees with collapsed base colour");
    }
  }

  for (size_t ei = 0; ei < base.G.edges.size(); ++ei) {
    const auto& edge = base.G.edges[ei];
    const int c0 = collapsed[static_cast<size_t>(edge[0])];
    if (c0 < 0) continue;
    bool mono = true;
    for (int v : edge) {
      if (collapsed[static_cast<size_t>(v)] != c0) {
        mono = false;
        break;
      }
    }
    if (!mono) continue;

    RamseyWitness w;
    w.colour = c0;
    w.edge_index = static_cast<int>(ei);
    w.stage_colours = stage_colours;
    w.line = Line{compose_embeddings(eta, trace.base.edge_lines[ei].emb)};

    // Re-validate through independent paths before returning.
    const std::vector<Point> pts = w.line.points();
    const KSetVerdict kv = classify_kset(pts, trace.k);
    if (kv.kind != KSetKind::IsLine) throw std::logic_error("witness points are not a line");
    for (const Point& p : pts) {
      if (!std::binary_search(final_pic.points.begin(), final_pic.points.end(), p)) {
        throw std::logic_error("witness point outside the final picture");
      }
      if (colour_of(colouring, p) != w.colour) {
        throw std::logic_error("witness line is not monochromatic");
      }
    }
    return w;
  }
  return StageFailure{0, "no monochromatic edge after colour collapse"};
}

DenseFreeResult dense_free_subset(const ConstructionTrace& trace, const std::vector<Point>& Y,
                                  const std::map<Point, Rat>* weights) {
  const Picture& pic = trace.final_picture();
  if (!trace.config.mu) throw std::invalid_argument("trace carries no mu");
  const Rat mu = *trace.config.mu;
  if (mu <= 0 || mu >= 1) throw std::invalid_argument("mu must lie in (0,1)");
  if (!trace.mu_evidence.shift && !trace.mu_evidence.oracle_small) {
    throw std::invalid_argument("no usable density evidence for G");
  }

  std::set<Point> members(pic.points.begin(), pic.points.end());
  std::set<Point> seen;
  DenseFreeResult res;
  std::vector<Rat> pushed(static_cast<size_t>(pic.G.n_vertices()), Rat(0));
  for (const Point& y : Y) {
    if (!members.count(y)) throw std::invalid_argument("Y point outside the final picture");
    if (!seen.insert(y).second) throw std::invalid_argument("duplicate point in Y");
    Rat w(1);
    if (weights) {
      const auto it = weights->find(y);
      if (it == weights->end()) throw std::invalid_argument("weights not total on Y");
      if (it->second < 0) throw std::invalid_argument("negative weight");
      w = it->second;
    }
    pushed[static_cast<size_t>(pic.psi.at(y))] += w;
    res.total += w;
  }
  if (res.total == 0) {
    return res;  // empty Z meets weight(Z) >= mu * 0
  }

  std::vector<int> base_set;
  if (trace.mu_evidence.shift) {
    const ShiftHypergraph S = build_shift(*trace.mu_evidence.shift);
    Rng rng = Rng::stream(trace.config.seed, "pipeline.dense.window");
    const HeavySearch hs = heavy_independent_search(S, pushed, mu, rng);
    res.trials = hs.trials;
    res.via_shift_window = true;
    if (!hs.found) throw std::runtime_error("window sampling found no heavy independent set");
    base_set = hs.vertices;
  } else {
    const MwisResult mwis = max_weight_independent_set(trace.G, pushed);
    if (mwis.status != VerdictKind::Proven) {
      throw std::runtime_error("independence oracle exhausted its budget");
    }
    if (mwis.weight < mu * res.total) {
      throw std::runtime_error("G is not mu-fractional for these weights");
    }
    base_set = mwis.set;
  }

  std::vector<char> in_base(static_cast<size_t>(pic.G.n_vertices()), 0);
  for (int v : base_set) in_base[static_cast<size_t>(v)] = 1;
  res.base_set = base_set;

  std::vector<Point> sorted_y(Y);
  std::sort(sorted_y.begin(), sorted_y.end());
  for (const Point& y : sorted_y) {
    if (in_base[static_cast<size_t>(pic.psi.at(y))]) {
      res.Z.push_back(y);
      Rat w(1);
      if (weights) w = weights->at(y);
      res.weight += w;
    }
  }
  if (res.weight < mu * res.total) {
    throw std::logic_error("pulled-back set lost weight");
  }
  if (res.Z.size() <= 60) {
    const QuasilineScan scan = quasilines_within(res.Z, pic.k);
    if (!scan.quasilines.empty()) {
      throw std::logic_error("dense subset contains a quasiline");
    }
  }
  return res;
}

}  // namespace hjkit
