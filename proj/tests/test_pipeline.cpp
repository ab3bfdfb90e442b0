#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <variant>

#include "hjkit/oracles.hpp"
#include "hjkit/pipeline.hpp"
#include "hjkit/rng.hpp"

using namespace hjkit;

namespace {

PipelineConfig basic_config(uint64_t seed = 0) {
  PipelineConfig cfg;
  cfg.r = 2;
  cfg.mu = Rat(1, 2);
  cfg.seed = seed;
  cfg.stages = 1;
  return cfg;
}

}  // namespace

TEST_CASE("one stage over the 7-point plane") {
  const ConstructionTrace trace = run_construction(fano_plane(), 3, basic_config());
  CHECK(trace.k == 3);
  CHECK(trace.k43.is_proven());
  CHECK(trace.stop_reason.empty());
  CHECK(trace.base.pic.m == 14);
  REQUIRE(trace.stages.size() == 1);

  const StageRecord& st = trace.stages[0];
  CHECK(st.index == 1);
  CHECK(st.vertex == 0);
  CHECK(st.n == 2);
  CHECK(st.m == 28);
  CHECK(st.picture.m == 28);
  CHECK(st.system.lines.size() == st.copies.size());
  CHECK(!st.system.lines.empty());
  CHECK(st.picture_check.status == VerdictKind::Proven);
  CHECK(trace.final_picture().m == 28);
  CHECK(trace.mu_evidence.oracle_small);
  CHECK(!trace.mu_evidence.shift.has_value());
}

TEST_CASE("two stages multiply the dimension") {
  PipelineConfig cfg = basic_config();
  cfg.stages = 2;
  const ConstructionTrace trace = run_construction(fano_plane(), 3, cfg);
  REQUIRE(trace.stages.size() == 2);
  CHECK(trace.stages[1].vertex == 1);
  CHECK(trace.stages[1].m == 56);
  CHECK(trace.stages[1].picture_check.status == VerdictKind::Proven);
  CHECK(trace.stop_reason.empty());
}

TEST_CASE("a degree-one vertex stops the recursion") {
  // The first vertex of the two-edge path lies on one edge only, so its music
  // line cannot host a line system.
  const ConstructionTrace trace = run_construction(path_two_edges(), 3, basic_config());
  CHECK(trace.stages.empty());
  CHECK(trace.stop_reason == "degenerate music line at stage 1");
  CHECK(trace.final_picture().m == 4);
}

TEST_CASE("the four-point scan gates uniformity-3 inputs") {
  CHECK_THROWS_AS(run_construction(complete_3uniform(4), 3, basic_config()),
                  std::invalid_argument);
}

TEST_CASE("a shift origin must rebuild the hypergraph") {
  ShiftParams sp;
  sp.k = 3;
  sp.ell = 3;
  sp.n = 7;
  CHECK_THROWS_AS(run_construction(fano_plane(), 3, basic_config(), sp), std::invalid_argument);
}

TEST_CASE("shift-built traces certify via the orientation tournament") {
  ShiftParams sp;
  sp.k = 3;
  sp.mu = Rat(1, 2);
  sp.ell = ell_for(3, Rat(1, 2));
  REQUIRE(sp.ell == 16);
  sp.n = 18;
  const ShiftHypergraph S = build_shift(sp);
  PipelineConfig cfg = basic_config();
  const ConstructionTrace trace = run_construction(S.H, 3, cfg, sp);
  CHECK(trace.k43.is_proven());
  REQUIRE(trace.mu_evidence.shift.has_value());
  CHECK(trace.mu_evidence.shift->ell == 16);
}

TEST_CASE("a constant colouring always yields a witness line") {
  const ConstructionTrace trace = run_construction(fano_plane(), 3, basic_config());
  std::map<Point, int> colouring;
  for (const Point& p : trace.final_picture().points) colouring[p] = 0;

  const RamseyOutcome out = ramsey_witness(trace, colouring);
  REQUIRE(std::holds_alternative<RamseyWitness>(out));
  const RamseyWitness& w = std::get<RamseyWitness>(out);
  CHECK(w.colour == 0);
  CHECK(w.edge_index >= 0);
  CHECK(w.edge_index < trace.G.n_edges());
  CHECK(w.stage_colours.size() == 1);

  // Re-validate the witness from scratch.
  const std::vector<Point> pts = w.line.points();
  const KSetVerdict kv = classify_kset(pts, 3);
  CHECK(kv.kind == KSetKind::IsLine);
  const auto& fin = trace.final_picture().points;
  for (const Point& p : pts) {
    CHECK(std::binary_search(fin.begin(), fin.end(), p));
    CHECK(colouring.at(p) == w.colour);
  }
}

TEST_CASE("random colourings give a witness or an honest stage failure") {
  const ConstructionTrace trace = run_construction(fano_plane(), 3, basic_config(7));
  Rng rng(424242);
  int witnesses = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::map<Point, int> colouring;
    for (const Point& p : trace.final_picture().points) {
      colouring[p] = static_cast<int>(rng.below(2));
    }
    const RamseyOutcome out = ramsey_witness(trace, colouring);
    if (std::holds_alternative<RamseyWitness>(out)) {
      ++witnesses;
      const RamseyWitness& w = std::get<RamseyWitness>(out);
      const std::vector<Point> pts = w.line.points();
      CHECK(classify_kset(pts, 3).kind == KSetKind::IsLine);
      for (const Point& p : pts) CHECK(colouring.at(p) == w.colour);
    } else {
      const StageFailure& f = std::get<StageFailure>(out);
      CHECK(f.stage >= 0);
      CHECK(f.stage <= 1);
      CHECK(!f.detail.empty());
    }
  }
  INFO("witnesses found: " << witnesses);
  CHECK(witnesses >= 0);  // soundness only; success depends on the colouring
}

TEST_CASE("a colouring missing a point is rejected") {
  const ConstructionTrace trace = run_construction(fano_plane(), 3, basic_config());
  std::map<Point, int> colouring;
  const auto& pts = trace.final_picture().points;
  for (size_t i = 0; i + 1 < pts.size(); ++i) colouring[pts[i]] = 0;
  CHECK_THROWS_AS(ramsey_witness(trace, colouring), std::invalid_argument);
}

TEST_CASE("dense free subsets via the exact oracle") {
  const ConstructionTrace trace = run_construction(fano_plane(), 3, basic_config());
  const std::vector<Point>& Y = trace.final_picture().points;
  const DenseFreeResult res = dense_free_subset(trace, Y);

  CHECK(!res.via_shift_window);
  CHECK(res.trials == 0);
  CHECK(res.weight * Rat(2) >= res.total);
  CHECK(res.total == Rat(static_cast<long long>(Y.size())));

  // Z sits inside Y, is quasiline-free, and is labeled by base_set only.
  CHECK(std::includes(Y.begin(), Y.end(), res.Z.begin(), res.Z.end()));
  const std::set<int> base(res.base_set.begin(), res.base_set.end());
  for (const Point& p : res.Z) {
    CHECK(base.count(trace.final_picture().psi.at(p)) == 1);
  }
  for (const auto& e : trace.G.edges) {
    bool inside = true;
    for (int v : e) inside = inside && base.count(v) == 1;
    CHECK(!inside);
  }
  const QuasilineScan scan = quasilines_within(res.Z, 3, ~0ull);
  REQUIRE(scan.complete);
  CHECK(scan.quasilines.empty());
}

TEST_CASE("dense free subsets via window sampling on a shift trace") {
  ShiftParams sp;
  sp.k = 2;
  sp.mu = Rat(1, 4);
  sp.ell = ell_for(2, Rat(1, 4));
  REQUIRE(sp.ell == 4);
  sp.n = 5;
  const ShiftHypergraph S = build_shift(sp);
  PipelineConfig cfg = basic_config();
  cfg.mu = sp.mu;
  const ConstructionTrace trace = run_construction(S.H, 2, cfg, sp);

  const std::vector<Point>& Y = trace.final_picture().points;
  REQUIRE(!Y.empty());
  const DenseFreeResult res = dense_free_subset(trace, Y);
  CHECK(res.via_shift_window);
  CHECK(res.trials >= 1);
  CHECK(res.weight * Rat(4) >= res.total);
  for (const auto& e : trace.G.edges) {
    const std::set<int> base(res.base_set.begin(), res.base_set.end());
    bool inside = true;
    for (int v : e) inside = inside && base.count(v) == 1;
    CHECK(!inside);
  }
}

TEST_CASE("dense free subsets demand density evidence") {
  PipelineConfig cfg = basic_config();
  cfg.mu.reset();
  const ConstructionTrace trace = run_construction(fano_plane(), 3, cfg);
  CHECK_THROWS_AS(dense_free_subset(trace, trace.final_picture().points),
                  std::invalid_argument);

  PipelineConfig cfg2 = basic_config();
  cfg2.mu = Rat(2);  // not in (0,1)
  const ConstructionTrace t2 = run_construction(fano_plane(), 3, cfg2);
  CHECK_THROWS_AS(dense_free_subset(t2, t2.final_picture().points), std::invalid_argument);
}

TEST_CASE("explicit weights flow through the dense subset search") {
  const ConstructionTrace trace = run_construction(fano_plane(), 3, basic_config());
  const std::vector<Point>& Y = trace.final_picture().points;
  std::map<Point, Rat> weights;
  for (const Point& p : Y) weights[p] = Rat(1, 3);
  const DenseFreeResult res = dense_free_subset(trace, Y, &weights);
  CHECK(res.total == Rat(static_cast<long long>(Y.size()), 3));
  CHECK(res.weight * Rat(2) >= res.total);

  std::map<Point, Rat> negative = weights;
  negative[Y[0]] = Rat(-1);
  CHECK_THROWS_AS(dense_free_subset(trace, Y, &negative), std::invalid_argument);
}
