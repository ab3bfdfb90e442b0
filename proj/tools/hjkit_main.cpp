// hjkit: build and verify Hales-Jewett combinatorial objects from the command
// line. Single binary, subcommand style; all randomness flows from one master
// seed through labeled streams, and every run writes a manifest plus
// machine-readable JSON artifacts into --out.
//
// Exit codes: 0 success, 2 a certification expected to hold was refuted,
// 3 verdict unknown (budget exhausted), 4 input error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hjkit/hjcube.hpp"
#include "hjkit/hypergraph.hpp"
#include "hjkit/intembed.hpp"
#include "hjkit/linesys.hpp"
#include "hjkit/oracles.hpp"
#include "hjkit/picture.hpp"
#include "hjkit/pipeline.hpp"
#include "hjkit/rational.hpp"
#include "hjkit/rng.hpp"
#include "hjkit/serialize.hpp"
#include "hjkit/shifthyp.hpp"
#include "hjkit/verdict.hpp"

namespace fs = std::filesystem;
using namespace hjkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitInput = 4;

struct BudgetExceeded : std::exception {
  const char* what() const noexcept override { return "time budget exhausted"; }
};

std::chrono::steady_clock::time_point g_start;
double g_budget_secs = 0.0;

void check_time() {
  if (g_budget_secs <= 0.0) return;
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - g_start;
  if (elapsed.count() > g_budget_secs) throw BudgetExceeded{};
}

// Accumulates one run's outputs; everything lands in `dir`, manifest last.
struct Emitter {
  fs::path dir;
  Json manifest;
  Json verdicts = Json::object();
  Json artifacts = Json::array();

  explicit Emitter(const std::string& subcommand, const fs::path& out) : dir(out) {
    fs::create_directories(dir);
    manifest["tool"] = "hjkit";
    manifest["version"] = kToolVersion;
    manifest["schema"] = kSchemaVersion;
    manifest["subcommand"] = subcommand;
    manifest["inputs"] = Json::object();
  }

  void input(const std::string& key, const Json& value) { manifest["inputs"][key] = value; }

  void artifact(const std::string& name, const Json& j) {
    write_json_file(dir / name, j);
    artifacts.push_back(name);
  }

  void verdict(const std::string& name, VerdictKind kind) {
    verdicts[name] = verdict_name(kind);
  }

  void finish(const Json& extra = Json::object()) {
    for (const auto& [key, value] : extra.items()) manifest[key] = value;
    manifest["verdicts"] = verdicts;
    manifest["artifacts"] = artifacts;
    write_json_file(dir / "manifest.json", manifest);
  }
};

int exit_for(VerdictKind kind, bool proven_expected) {
  switch (kind) {
    case VerdictKind::Proven: return kExitOk;
    case VerdictKind::Refuted: return proven_expected ? kExitRefuted : kExitOk;
    case VerdictKind::Unknown: return kExitUnknown;
  }
  return kExitInput;
}

// --G accepts fixture names (fano, single-edge, path2, complete:<n>,
// shift:<n>) or a path to a hypergraph JSON file.
struct ResolvedG {
  Hypergraph H;
  std::optional<ShiftParams> shift;
};

ResolvedG resolve_hypergraph(const std::string& text, int k, std::optional<int> ell,
                             const std::optional<Rat>& mu) {
  ResolvedG out;
  if (text == "fano") {
    out.H = fano_plane();
  } else if (text == "single-edge") {
    out.H = single_edge(k);
  } else if (text == "path2") {
    out.H = path_two_edges();
  } else if (text.rfind("complete:", 0) == 0) {
    out.H = complete_3uniform(std::stoi(text.substr(9)));
  } else if (text.rfind("shift:", 0) == 0) {
    ShiftParams params;
    params.k = k;
    params.n = std::stoi(text.substr(6));
    if (mu) {
      params.mu = *mu;
      params.ell = ell.value_or(ell_for(k, *mu));
    } else if (ell) {
      params.ell = *ell;
    } else {
      throw std::invalid_argument("--G shift:<n> needs --ell or --mu");
    }
    params.validate();
    out.H = build_shift(params).H;
    out.shift = params;
  } else {
    out.H = hypergraph_from_json(read_json_file(text));
  }
  if (out.H.k != k) {
    throw std::invalid_argument("--G has uniformity " + std::to_string(out.H.k) +
                                " but --k is " + std::to_string(k));
  }
  return out;
}

std::vector<Point> points_of_artifact(const Json& j, int* k_out) {
  if (j.contains("psi")) {
    const Picture pic = picture_from_json(j);
    if (k_out) *k_out = pic.k;
    return pic.points;
  }
  const PointSet ps = point_set_from_json(j);
  if (k_out) *k_out = ps.k;
  return ps.points;
}

Configuration resolve_pattern(const std::string& text) {
  if (text == "square") return Configuration::unit_square();
  if (text.size() > 5 && text.substr(text.size() - 5) == ".json") {
    return configuration_from_json(read_json_file(text));
  }
  // Comma-separated integers: a one-dimensional pattern.
  Configuration F;
  F.d = 1;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (tok.empty()) throw std::invalid_argument("bad --F value \"" + text + "\"");
    F.points.push_back(LatticePoint{{parse_bigint(tok)}});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  F.validate();
  return F;
}

Json coloring_json(const ColoringResult& r) {
  Json j;
  j["status"] = verdict_name(r.status);
  j["nodes"] = r.nodes;
  if (r.status == VerdictKind::Refuted) j["coloring"] = r.coloring;
  return j;
}

Json picture_check_json(const PictureCheck& c) {
  Json j;
  j["status"] = verdict_name(c.status);
  j["nodes"] = c.nodes;
  if (c.status == VerdictKind::Refuted) {
    j["reason"] = c.reason;
    Json w = Json::array();
    for (const Point& p : c.witness) w.push_back(point_to_json(p));
    j["witness"] = std::move(w);
  }
  return j;
}

// ---------------------------------------------------------------------------

int run_shift(int k, int n, std::optional<int> ell_opt, const std::optional<Rat>& mu,
              const std::string& out) {
  ShiftParams params;
  params.k = k;
  params.n = n;
  if (mu) {
    params.mu = *mu;
    params.ell = ell_opt.value_or(ell_for(k, *mu));
  } else if (ell_opt) {
    params.ell = *ell_opt;
  } else {
    throw std::invalid_argument("shift needs --ell or --mu");
  }
  params.validate();
  const ShiftHypergraph S = build_shift(params);
  check_time();

  Emitter em("shift", out);
  em.input("k", k);
  em.input("n", n);
  em.input("ell", params.ell);
  if (mu) em.input("mu", format_rational(*mu));
  em.artifact("shift.json", hypergraph_to_json(S.H));

  Json extra;
  extra["vertices"] = S.H.n_vertices();
  extra["edges"] = S.H.n_edges();
  if (params.ell >= 2 * k - 1) {
    extra["window_index_set"] = window_index_set(k, params.ell);
  }

  int code = kExitOk;
  if (k == 3) {
    const OrientationCertificate cert = certify_k43minus_free(S);
    em.verdict("k43_minus_free", cert.k43_free ? VerdictKind::Proven : VerdictKind::Refuted);
    extra["orientation_pairs_checked"] = cert.pairs_checked;
    if (!cert.k43_free) code = kExitRefuted;
  }
  em.finish(extra);
  std::cout << "shift: " << S.H.n_vertices() << " vertices, " << S.H.n_edges() << " edges";
  if (k == 3) std::cout << "; k43-minus-free: " << em.verdicts["k43_minus_free"].get<std::string>();
  std::cout << "\n";
  return code;
}

int run_lines(int k, int n, int d, int target, uint64_t seed, int r, uint64_t budget,
              const std::string& out) {
  const std::optional<int> degree_cap = d > 0 ? std::optional<int>(d) : std::nullopt;
  const GreedyOutcome g = greedy_build(k, n, degree_cap, target, Rng::stream(seed, "lines.greedy"));
  check_time();
  const SuitabilityReport rep = is_suitable(g.system, degree_cap);
  const ColoringResult chrom = chromatic_exceeds(g.system, r, budget);
  check_time();

  Emitter em("lines", out);
  em.input("k", k);
  em.input("n", n);
  em.input("d", d);
  em.input("target", target);
  em.input("seed", seed);
  em.input("r", r);
  em.artifact("lines.json", line_system_to_json(g.system));
  em.verdict("suitable", rep.suitable ? VerdictKind::Proven : VerdictKind::Refuted);
  em.verdict("chromatic_exceeds_r", chrom.status);

  Json extra;
  extra["lines"] = g.system.lines.size();
  extra["reached_target"] = g.reached_target;
  extra["proposals"] = g.proposals;
  extra["rejections"] = g.rejections;
  extra["chromatic"] = coloring_json(chrom);
  em.finish(extra);

  std::cout << "lines: " << g.system.lines.size() << " suitable lines in [" << k << "]^" << n
            << "; chromatic_exceeds_" << r << ": " << verdict_name(chrom.status) << "\n";
  if (!rep.suitable) return kExitRefuted;  // greedy_build promises suitability
  return chrom.status == VerdictKind::Unknown ? kExitUnknown : kExitOk;
}

int run_picture_zero(int k, const std::string& gtext, uint64_t budget, const std::string& out) {
  const ResolvedG G = resolve_hypergraph(gtext, k, std::nullopt, std::nullopt);
  const PictureZero base = picture_zero(G.H);
  check_time();
  const PictureCheck check = is_picture(base.pic, budget);
  check_time();

  Emitter em("picture-zero", out);
  em.input("k", k);
  em.input("G", gtext);
  em.artifact("picture.json", picture_to_json(base.pic));
  em.verdict("is_picture", check.status);

  Json extra;
  extra["m"] = base.pic.m;
  extra["points"] = base.pic.points.size();
  Json lines = Json::array();
  for (const Line& L : base.edge_lines) lines.push_back(line_to_json(L));
  extra["edge_lines"] = std::move(lines);
  extra["picture_check"] = picture_check_json(check);
  em.finish(extra);

  std::cout << "picture-zero: " << base.pic.points.size() << " points in [" << k << "]^"
            << base.pic.m << "; is_picture: " << verdict_name(check.status) << "\n";
  return exit_for(check.status, /*proven_expected=*/true);
}

int run_amalgamate(int k, const std::string& gtext, const std::string& pic_path,
                   const std::string& vertex_id, const std::string& sys_path, int n, int d,
                   int target, uint64_t seed, bool seed_given, uint64_t budget,
                   const std::string& out) {
  Picture pic;
  if (!pic_path.empty()) {
    pic = picture_from_json(read_json_file(pic_path));
  } else {
    pic = picture_zero(resolve_hypergraph(gtext, k, std::nullopt, std::nullopt).H).pic;
  }
  if (pic.k != k) throw std::invalid_argument("picture uniformity differs from --k");

  int vertex = 0;
  if (!vertex_id.empty()) {
    vertex = pic.G.index_of(vertex_id);
    if (vertex < 0) throw std::invalid_argument("unknown vertex \"" + vertex_id + "\"");
  }
  const PointAlphabet A = music_alphabet(pic, vertex);
  if (A.size() < 2) {
    throw std::invalid_argument("music line of vertex \"" +
                                pic.G.vertex_ids[static_cast<size_t>(vertex)] +
                                "\" has fewer than 2 points; nothing to amalgamate over");
  }

  LineSystem S;
  if (!sys_path.empty()) {
    S = line_system_from_json(read_json_file(sys_path));
  } else {
    if (!seed_given) throw std::invalid_argument("building a line system needs --seed");
    const std::optional<int> cap = d > 0 ? std::optional<int>(d) : std::nullopt;
    S = greedy_build(A.size(), n, cap, target, Rng::stream(seed, "amalgamate.greedy")).system;
    S.alphabet = A;
    S.validate();
  }
  check_time();

  const AmalgamationResult res = amalgamate(pic, vertex, S);
  check_time();
  const PictureCheck check = is_picture(res.sigma, budget);
  check_time();

  Emitter em("amalgamate", out);
  em.input("k", k);
  if (!pic_path.empty()) em.input("P", pic_path);
  else em.input("G", gtext);
  em.input("vertex", pic.G.vertex_ids[static_cast<size_t>(vertex)]);
  if (!sys_path.empty()) em.input("S", sys_path);
  else {
    em.input("n", n);
    em.input("d", d);
    em.input("target", target);
    em.input("seed", seed);
  }
  em.artifact("system.json", line_system_to_json(res.system));
  em.artifact("amalgam.json", picture_to_json(res.sigma));
  em.verdict("is_picture", check.status);

  Json extra;
  extra["copies"] = res.copies.size();
  extra["m"] = res.sigma.m;
  extra["points"] = res.sigma.points.size();
  extra["picture_check"] = picture_check_json(check);
  em.finish(extra);

  std::cout << "amalgamate: " << res.copies.size() << " copies, amalgam has "
            << res.sigma.points.size() << " points in [" << k << "]^" << res.sigma.m
            << "; is_picture: " << verdict_name(check.status) << "\n";
  return exit_for(check.status, /*proven_expected=*/true);
}

int run_pipeline(int k, const std::string& gtext, int r, const std::optional<Rat>& mu,
                 uint64_t seed, int stages, const std::string& policy, int n, int d, int target,
                 uint64_t chromatic_budget, uint64_t picture_budget, uint64_t k43_budget,
                 int dim_cap, std::optional<int> ell, const std::string& out) {
  const ResolvedG G = resolve_hypergraph(gtext, k, ell, mu);

  PipelineConfig config;
  config.r = r;
  config.mu = mu;
  config.seed = seed;
  config.stages = stages;
  config.plan.policy = policy == "full" ? StagePolicy::Full : StagePolicy::Sparse;
  config.plan.n = n;
  config.plan.d = d > 0 ? std::optional<int>(d) : std::nullopt;
  config.plan.target = target;
  config.chromatic_budget = chromatic_budget;
  config.picture_budget = picture_budget;
  config.k43_budget = k43_budget;
  config.dim_cap = dim_cap;

  const ConstructionTrace trace = run_construction(G.H, k, config, G.shift);
  check_time();

  Emitter em("pipeline", out);
  em.input("k", k);
  em.input("G", gtext);
  em.input("r", r);
  if (mu) em.input("mu", format_rational(*mu));
  em.input("seed", seed);
  em.input("stages", stages);
  em.input("policy", policy);
  em.input("n", n);
  em.input("d", d);
  em.input("target", target);
  em.artifact("G.json", hypergraph_to_json(trace.G));
  em.artifact("base.json", picture_to_json(trace.base.pic));

  if (k == 3) em.verdict("k43_minus_free", trace.k43.kind);

  PictureCheck final_check;
  if (trace.stages.empty()) {
    final_check = is_picture(trace.base.pic, picture_budget);
  } else {
    final_check = trace.stages.back().picture_check;
  }
  em.verdict("final_is_picture", final_check.status);

  Json stage_list = Json::array();
  for (const StageRecord& st : trace.stages) {
    char dirname[32];
    std::snprintf(dirname, sizeof dirname, "stage-%02d", st.index);
    fs::create_directories(em.dir / dirname);
    const std::string prefix = std::string(dirname) + "/";
    em.artifact(prefix + "system.json", line_system_to_json(st.system));
    em.artifact(prefix + "picture.json", picture_to_json(st.picture));

    Json rec;
    rec["index"] = st.index;
    rec["vertex"] = trace.G.vertex_ids[static_cast<size_t>(st.vertex)];
    rec["m"] = st.m;
    rec["n"] = st.n;
    rec["lines"] = st.system.lines.size();
    rec["chromatic"] = coloring_json(st.chromatic);
    rec["picture_check"] = picture_check_json(st.picture_check);
    em.artifact(prefix + "record.json", rec);
    stage_list.push_back(dirname);
  }
  if (!trace.stages.empty()) {
    em.artifact("final.json", picture_to_json(trace.final_picture()));
  }

  Json extra;
  extra["stages_run"] = trace.stages.size();
  extra["stage_dirs"] = stage_list;
  extra["stop_reason"] = trace.stop_reason;
  extra["final_m"] = trace.final_picture().m;
  extra["final_points"] = trace.final_picture().points.size();
  extra["mu_evidence"] =
      Json{{"shift", trace.mu_evidence.shift.has_value()},
           {"oracle_small", trace.mu_evidence.oracle_small}};
  em.finish(extra);

  std::cout << "pipeline: " << trace.stages.size() << " stage(s), final picture has "
            << trace.final_picture().points.size() << " points in [" << k << "]^"
            << trace.final_picture().m
            << "; final is_picture: " << verdict_name(final_check.status);
  if (!trace.stop_reason.empty()) std::cout << "; stopped: " << trace.stop_reason;
  std::cout << "\n";
  return exit_for(final_check.status, /*proven_expected=*/true);
}

int run_embed(const std::string& p_path, const std::string& f_text, const std::string& t_str,
              bool auto_t, int max_doublings, uint64_t budget, const std::string& out) {
  int k_from_points = 0;
  const std::vector<Point> X = points_of_artifact(read_json_file(p_path), &k_from_points);
  if (X.empty()) throw std::invalid_argument("empty point artifact");
  const Configuration F = resolve_pattern(f_text);
  if (F.k() != k_from_points) {
    throw std::invalid_argument("pattern has " + std::to_string(F.k()) +
                                " points but the artifact alphabet is " +
                                std::to_string(k_from_points));
  }
  const int n = X.front().dim();

  Emitter em("embed", out);
  em.input("P", p_path);
  em.input("F", f_text);

  EmbedParams params;
  params.n = n;
  int doublings = -1;
  if (auto_t) {
    const ChooseTResult chosen = choose_T(X, F, n, max_doublings, budget);
    params = chosen.params;
    doublings = chosen.doublings;
    if (!chosen.ok) {
      em.verdict("pullback", VerdictKind::Unknown);
      Json extra;
      extra["T"] = params.T.str();
      extra["doublings"] = doublings;
      em.finish(extra);
      std::cout << "embed: no validated T found within " << max_doublings << " doublings\n";
      return kExitUnknown;
    }
  } else {
    if (t_str.empty()) throw std::invalid_argument("embed needs --T or --auto-T");
    params.T = parse_bigint(t_str);
  }
  em.input("T", params.T.str());
  em.input("auto_T", auto_t);

  PhiMap phi;
  try {
    phi = phi_embed(X, F, params);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).find("phi collision") == std::string::npos) throw;
    em.verdict("injective", VerdictKind::Refuted);
    em.finish(Json{{"detail", e.what()}});
    std::cout << "embed: " << e.what() << "\n";
    return kExitRefuted;
  }
  em.verdict("injective", VerdictKind::Proven);
  params.status = EmbedParams::Status::InjectivityChecked;
  check_time();

  const PullbackReport report = pullback_verify(X, F, params, budget);
  if (report.status == VerdictKind::Proven) params.status = EmbedParams::Status::PullbackChecked;
  phi.params = params;
  em.verdict("pullback", report.status);
  em.artifact("embedding.json", phi_map_to_json(phi));

  Json extra;
  if (doublings >= 0) extra["doublings"] = doublings;
  extra["scan_nodes"] = report.nodes;
  if (report.status == VerdictKind::Refuted && !report.witness.empty()) {
    Json w = Json::array();
    for (const Point& p : report.witness) w.push_back(point_to_json(p));
    extra["witness"] = std::move(w);
  }
  em.finish(extra);

  std::cout << "embed: T = " << params.T.str() << ", |X| = " << X.size()
            << "; pullback: " << verdict_name(report.status) << "\n";
  return exit_for(report.status, /*proven_expected=*/true);
}

int run_verify(const std::string& quasilines_path, const std::string& ispic_path,
               const std::string& chromatic_path, const std::string& suitable_path,
               const std::string& k43_path, const std::string& mwis_path,
               const std::string& weights_str, int r, int d, uint64_t budget, int size_guard,
               const std::string& out) {
  Emitter em("verify", out);
  Json extra;
  int code = kExitOk;

  const int modes = !quasilines_path.empty() + !ispic_path.empty() + !chromatic_path.empty() +
                    !suitable_path.empty() + !k43_path.empty() + !mwis_path.empty();
  if (modes != 1) {
    throw std::invalid_argument(
        "verify needs exactly one of --quasilines, --is-picture, --chromatic, --suitable, "
        "--k43, --mwis");
  }

  if (!quasilines_path.empty()) {
    em.input("quasilines", quasilines_path);
    int k = 0;
    const std::vector<Point> pts = points_of_artifact(read_json_file(quasilines_path), &k);
    const BruteQuasilines scan = brute_quasilines(pts, k, budget);
    em.verdict("scan_complete", scan.complete ? VerdictKind::Proven : VerdictKind::Unknown);
    extra["quasilines"] = scan.quasilines.size();
    extra["lines"] = scan.lines.size();
    extra["subsets"] = scan.subsets;
    std::cout << "verify: " << scan.lines.size() << " line(s), " << scan.quasilines.size()
              << " quasiline(s) among " << pts.size() << " points\n";
    if (!scan.complete) code = kExitUnknown;
  } else if (!ispic_path.empty()) {
    em.input("is_picture", ispic_path);
    const Picture pic = picture_from_json(read_json_file(ispic_path));
    const PictureCheck check = is_picture(pic, budget);
    em.verdict("is_picture", check.status);
    extra["picture_check"] = picture_check_json(check);
    std::cout << "verify: is_picture: " << verdict_name(check.status) << "\n";
    code = check.status == VerdictKind::Unknown ? kExitUnknown : kExitOk;
  } else if (!chromatic_path.empty()) {
    em.input("chromatic", chromatic_path);
    em.input("r", r);
    const LineSystem S = line_system_from_json(read_json_file(chromatic_path));
    const ColoringResult res = chromatic_exceeds(S, r, budget);
    em.verdict("chromatic_exceeds_r", res.status);
    extra["chromatic"] = coloring_json(res);
    std::cout << "verify: chromatic_exceeds_" << r << ": " << verdict_name(res.status) << "\n";
    code = res.status == VerdictKind::Unknown ? kExitUnknown : kExitOk;
  } else if (!suitable_path.empty()) {
    em.input("suitable", suitable_path);
    if (d > 0) em.input("d", d);
    const LineSystem S = line_system_from_json(read_json_file(suitable_path));
    const SuitabilityReport rep = is_suitable(S, d > 0 ? std::optional<int>(d) : std::nullopt);
    em.verdict("suitable", rep.suitable ? VerdictKind::Proven : VerdictKind::Refuted);
    if (rep.triple_violation) {
      extra["triple_violation"] = std::vector<int>(rep.triple_violation->begin(),
                                                   rep.triple_violation->end());
      extra["triple_kind"] = rep.triple_kind == TripleKind::Triangle ? "triangle" : "tripod";
    }
    if (rep.degree_violation) {
      extra["degree_violation_point"] = point_to_json(rep.degree_violation->first);
      extra["degree_violation_lines"] = rep.degree_violation->second;
    }
    std::cout << "verify: suitable: " << (rep.suitable ? "yes" : "no") << "\n";
  } else if (!k43_path.empty()) {
    em.input("k43", k43_path);
    const Hypergraph H = hypergraph_from_json(read_json_file(k43_path));
    const auto verdict = scan_k43minus(H, budget);
    em.verdict("k43_minus_free", verdict.kind);
    if (verdict.is_refuted() && verdict.witness) {
      extra["witness"] = std::vector<int>(verdict.witness->begin(), verdict.witness->end());
    }
    extra["scan_nodes"] = verdict.budget_spent;
    std::cout << "verify: k43-minus-free: " << verdict_name(verdict.kind) << "\n";
    code = verdict.kind == VerdictKind::Unknown ? kExitUnknown : kExitOk;
  } else {
    em.input("mwis", mwis_path);
    const Hypergraph H = hypergraph_from_json(read_json_file(mwis_path));
    std::vector<Rat> w;
    if (weights_str.empty()) {
      w.assign(static_cast<size_t>(H.n_vertices()), Rat(1));
    } else {
      size_t start = 0;
      while (start <= weights_str.size()) {
        const size_t comma = weights_str.find(',', start);
        const std::string tok =
            weights_str.substr(start, comma == std::string::npos ? comma : comma - start);
        w.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (w.size() != static_cast<size_t>(H.n_vertices())) {
        throw std::invalid_argument("--weights count differs from vertex count");
      }
    }
    const MwisResult res = max_weight_independent_set(H, w, budget, size_guard);
    em.verdict("mwis_exact", res.status);
    Json set = Json::array();
    for (int v : res.set) set.push_back(H.vertex_ids[static_cast<size_t>(v)]);
    extra["set"] = std::move(set);
    extra["weight"] = format_rational(res.weight);
    extra["nodes"] = res.nodes;
    std::cout << "verify: max independent weight " << format_rational(res.weight) << " ("
              << verdict_name(res.status) << ")\n";
    code = res.status == VerdictKind::Unknown ? kExitUnknown : kExitOk;
  }

  em.finish(extra);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  g_start = std::chrono::steady_clock::now();

  CLI::App app{"hjkit: construct and verify Hales-Jewett cube objects, shift hypergraphs, "
               "line systems, pictures, amalgamation pipelines, and integer embeddings"};
  app.require_subcommand(1);

  // Shared option storage.
  int k = 3, n = 2, r = 2, d = 3, target = 6, stages = 1, dim_cap = 4096, max_doublings = 40;
  std::optional<int> ell_opt;
  std::string mu_str, out, gtext = "fano", pic_path, vertex_id, sys_path, policy = "sparse";
  std::string embed_p, embed_f = "1,2,3", t_str;
  std::string q_path, ispic_path, chrom_path, suit_path, k43_path, mwis_path, weights_str;
  uint64_t seed = 0;
  bool seed_given = false, auto_t = false;
  uint64_t budget_nodes = 1ull << 22;
  uint64_t picture_budget = ~0ull, k43_budget = 1ull << 24;
  int ell_value = 0;

  auto add_common = [&](CLI::App* sub, const std::string& default_out) {
    out = "";
    sub->add_option("--out", out, "output directory (default: " + default_out + ")");
    sub->add_option("--budget-nodes", budget_nodes, "search node budget");
    sub->add_option("--budget-secs", g_budget_secs, "wall-clock budget in seconds");
  };

  CLI::App* shift = app.add_subcommand("shift", "build a shift hypergraph and certify it");
  shift->add_option("--k", k, "uniformity")->required();
  shift->add_option("--n", n, "ground set size")->required();
  shift->add_option("--ell", ell_value, "window length");
  shift->add_option("--mu", mu_str, "density parameter p/q; sets ell");
  add_common(shift, "out-shift");

  CLI::App* lines = app.add_subcommand("lines", "greedy-build a suitable line system");
  lines->add_option("--k", k, "alphabet size")->required();
  lines->add_option("--n", n, "cube dimension")->required();
  lines->add_option("--d", d, "degree cap (0 = unbounded)");
  lines->add_option("--target", target, "target number of lines");
  lines->add_option("--seed", seed, "master seed")->required();
  lines->add_option("--r", r, "colour count for the chromatic verdict");
  add_common(lines, "out-lines");

  CLI::App* pz = app.add_subcommand("picture-zero", "build the base picture of a hypergraph");
  pz->add_option("--k", k, "uniformity");
  pz->add_option("--G", gtext, "hypergraph: fano, single-edge, path2, complete:<n>, or JSON path");
  add_common(pz, "out-picture-zero");

  CLI::App* am = app.add_subcommand("amalgamate", "amalgamate a picture along a line system");
  am->add_option("--k", k, "uniformity");
  am->add_option("--P", pic_path, "picture JSON (default: picture-zero of --G)");
  am->add_option("--G", gtext, "hypergraph fixture when --P absent");
  am->add_option("--vertex", vertex_id, "amalgamation vertex id (default: first)");
  am->add_option("--S", sys_path, "line system JSON (default: greedy build)");
  am->add_option("--n", n, "line system dimension");
  am->add_option("--d", d, "degree cap (0 = unbounded)");
  am->add_option("--target", target, "greedy target size");
  am->add_option("--seed", seed, "master seed");
  add_common(am, "out-amalgamate");

  CLI::App* pl = app.add_subcommand("pipeline", "run the staged amalgamation pipeline");
  pl->add_option("--k", k, "uniformity");
  pl->add_option("--G", gtext, "hypergraph: fixture, shift:<n>, or JSON path");
  pl->add_option("--r", r, "colour count");
  pl->add_option("--mu", mu_str, "density parameter p/q");
  pl->add_option("--seed", seed, "master seed")->required();
  pl->add_option("--stages", stages, "stage count (0 = one per vertex)");
  pl->add_option("--policy", policy, "sparse | full")
      ->check(CLI::IsMember({"sparse", "full"}));
  pl->add_option("--n", n, "per-stage line system dimension");
  pl->add_option("--d", d, "degree cap (0 = unbounded)");
  pl->add_option("--target", target, "greedy target size");
  pl->add_option("--ell", ell_value, "window length for --G shift:<n>");
  pl->add_option("--picture-budget", picture_budget, "is_picture node budget");
  pl->add_option("--k43-budget", k43_budget, "4-point scan budget");
  pl->add_option("--dim-cap", dim_cap, "stop before exceeding this dimension");
  add_common(pl, "out-pipeline");

  CLI::App* embed = app.add_subcommand("embed", "embed a point artifact into the integers");
  embed->add_option("--P", embed_p, "point set or picture JSON")->required();
  embed->add_option("--F", embed_f, "pattern: comma integers, square, or JSON path");
  embed->add_option("--T", t_str, "tower base (decimal)");
  embed->add_flag("--auto-T", auto_t, "search for a validated T");
  embed->add_option("--max-doublings", max_doublings, "auto-T attempt cap");
  add_common(embed, "out-embed");

  CLI::App* verify = app.add_subcommand("verify", "run a reference oracle on a JSON artifact");
  verify->add_option("--quasilines", q_path, "point set or picture JSON");
  verify->add_option("--is-picture", ispic_path, "picture JSON");
  verify->add_option("--chromatic", chrom_path, "line system JSON");
  verify->add_option("--suitable", suit_path, "line system JSON");
  verify->add_option("--k43", k43_path, "hypergraph JSON");
  verify->add_option("--mwis", mwis_path, "hypergraph JSON");
  verify->add_option("--weights", weights_str, "comma-separated rational weights");
  verify->add_option("--r", r, "colour count for --chromatic");
  verify->add_option("--d", d, "degree cap for --suitable (0 = unbounded)");
  int size_guard = 30;
  verify->add_option("--size-guard", size_guard, "vertex-count cap for --mwis");
  add_common(verify, "out-verify");

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<Rat> mu;
    if (!mu_str.empty()) mu = parse_rational(mu_str);
    if (shift->parsed() || pl->parsed()) {
      if (shift->count("--ell") || pl->count("--ell")) ell_opt = ell_value;
    }

    if (shift->parsed()) {
      return run_shift(k, n, ell_opt, mu, out.empty() ? "out-shift" : out);
    }
    if (lines->parsed()) {
      return run_lines(k, n, d, target, seed, r, budget_nodes,
                       out.empty() ? "out-lines" : out);
    }
    if (pz->parsed()) {
      return run_picture_zero(k, gtext, budget_nodes, out.empty() ? "out-picture-zero" : out);
    }
    if (am->parsed()) {
      seed_given = am->count("--seed") > 0;
      return run_amalgamate(k, gtext, pic_path, vertex_id, sys_path, n, d, target, seed,
                            seed_given, budget_nodes, out.empty() ? "out-amalgamate" : out);
    }
    if (pl->parsed()) {
      return run_pipeline(k, gtext, r, mu, seed, stages, policy, n, d, target, budget_nodes,
                          picture_budget, k43_budget, dim_cap, ell_opt,
                          out.empty() ? "out-pipeline" : out);
    }
    if (embed->parsed()) {
      return run_embed(embed_p, embed_f, t_str, auto_t, max_doublings, budget_nodes,
                       out.empty() ? "out-embed" : out);
    }
    if (verify->parsed()) {
      return run_verify(q_path, ispic_path, chrom_path, suit_path, k43_path, mwis_path,
                        weights_str, r, d, budget_nodes, size_guard,
                        out.empty() ? "out-verify" : out);
    }
    std::cerr << "error: no subcommand\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitRefuted;
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    return what.find("budget") != std::string::npos ? kExitUnknown : kExitInput;
  }
}
