#pragma once

#include <optional>
#include <variant>

#include "hjkit/picture.hpp"
#include "hjkit/shifthyp.hpp"

namespace hjkit {

// Iterated partite amalgamation. Stage i works at vertex i of G (in vertex
// order): it builds a line system over the music line of that vertex in the
// previous picture and amalgamates, multiplying the dimension by the stage's
// n. Stage records keep everything needed to replay or audit the run.

enum class StagePolicy { Sparse, Full };

struct StagePlan {
  StagePolicy policy = StagePolicy::Sparse;
  int n = 2;
  std::optional<int> d = 3;  // degree cap for the greedy builder
  int target = 6;            // greedy target size
};

struct PipelineConfig {
  int r = 2;                  // colour count the trace is meant to defeat
  std::optional<Rat> mu;      // density parameter for dense_free_subset
  uint64_t seed = 0;
  int stages = 1;             // 0 = one stage per vertex of G
  StagePlan plan;
  uint64_t chromatic_budget = 1ull << 20;
  uint64_t picture_budget = ~0ull;
  uint64_t k43_budget = 1ull << 24;
  int dim_cap = 4096;         // stop before any picture dimension exceeds this
};

struct StageRecord {
  int index = 0;   // 1-based stage number
  int vertex = 0;  // 0-based vertex of G; equals index-1
  LineSystem system;
  std::vector<StandardCopy> copies;  // parallel to system.lines
  Picture picture;                   // the amalgam
  int m = 0;                         // its dimension
  int n = 0;                         // the stage's n
  ColoringResult chromatic;          // chromatic_exceeds(system, r)
  PictureCheck picture_check;
};

struct MuEvidence {
  std::optional<ShiftParams> shift;  // G was built as a shift hypergraph
  bool oracle_small = false;         // G small enough for the exact oracle
};

struct ConstructionTrace {
  int k = 0;
  PipelineConfig config;
  Hypergraph G;
  Verdict<std::array<int, 4>> k43;  // 4-point scan of G (k = 3 only)
  MuEvidence mu_evidence;
  PictureZero base;
  std::vector<StageRecord> stages;
  std::string stop_reason;  // empty when all requested stages ran

  const Picture& final_picture() const {
    return stages.empty() ? base.pic : stages.back().picture;
  }
};

// Builds the trace. For k = 3 the hypergraph must pass the 4-point scan (or,
// when shift_origin is given, the orientation certificate); other k are
// accepted as-is at desk scale. Stops early at the dimension cap or at a
// degenerate music line, recording the reason.
ConstructionTrace run_construction(const Hypergraph& G, int k, const PipelineConfig& config,
                                   std::optional<ShiftParams> shift_origin = std::nullopt);

struct RamseyWitness {
  Line line;                       // monochromatic line inside the final picture
  int colour = 0;
  int edge_index = -1;             // the edge of G whose base line embeds
  std::vector<int> stage_colours;  // rho_i per executed stage, stage order
};

struct StageFailure {
  int stage = -1;  // 0 = the base edge search failed
  std::string detail;
};

using RamseyOutcome = std::variant<RamseyWitness, StageFailure>;

// Walks the trace backwards: at each stage it needs a line of the stage
// system monochromatic under the colouring pulled back through the
// embeddings composed so far; at the base it needs an edge of G whose music
// lines all collapsed to one colour. The returned witness re-validates:
// its points lie in the final picture, classify as a line, and share one
// colour.
RamseyOutcome ramsey_witness(const ConstructionTrace& trace,
                             const std::map<Point, int>& colouring);

struct DenseFreeResult {
  std::vector<Point> Z;        // quasiline-free subset of Y, sorted
  Rat weight;                  // weight of Z
  Rat total;                   // weight of Y
  std::vector<int> base_set;   // the independent set in G it pulls back
  bool via_shift_window = false;
  uint64_t trials = 0;         // permutation trials when via_shift_window
};

// Pushes the weights of Y forward through psi, finds an independent set of G
// carrying at least mu of the total (shift-window sampling when G is a shift
// hypergraph, the exact oracle otherwise), and pulls it back. Requires mu
// evidence in the trace. Spot-checks quasiline-freeness for |Z| <= 60.
DenseFreeResult dense_free_subset(const ConstructionTrace& trace, const std::vector<Point>& Y,
                                  const std::map<Point, Rat>* weights = nullptr);

}  // namespace hjkit
