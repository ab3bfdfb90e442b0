#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "hjkit/hjcube.hpp"
#include "hjkit/hypergraph.hpp"
#include "hjkit/intembed.hpp"
#include "hjkit/linesys.hpp"
#include "hjkit/picture.hpp"
#include "hjkit/rational.hpp"
#include "hjkit/verdict.hpp"

namespace hjkit {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// ---- scalar helpers -------------------------------------------------------

std::string verdict_name(VerdictKind kind);
VerdictKind verdict_from_name(const std::string& name);

// ---- points and point sets ------------------------------------------------

// Points are written as digit strings ("121") for k <= 9 and as arrays of
// 1-based integers otherwise.
Json point_to_json(const Point& p);
Point point_from_json(const Json& j, int k, int n);

// {"k": int, "n": int, "points": [...]} with points sorted.
Json point_set_to_json(int k, int n, const std::vector<Point>& pts);
struct PointSet {
  int k = 0;
  int n = 0;
  std::vector<Point> points;
};
PointSet point_set_from_json(const Json& j);

// ---- hypergraphs -----------------------------------------------------------

// {"k": int, "vertices": [id...], "edges": [[id...]...]}
Json hypergraph_to_json(const Hypergraph& H);
Hypergraph hypergraph_from_json(const Json& j);

// ---- line systems -----------------------------------------------------------

// Lines are star-words for k <= 9, otherwise {"blocks": [[coord...]...],
// "constants": [[coord, symbol]...]} with 0-based coordinates and symbols.
Json line_to_json(const Line& line);
Line line_from_json(const Json& j, int k, int n);

// {"k", "n", "lines": [...], "alphabet": [...]?, "alphabet_cube": {"k","m"}?}
Json line_system_to_json(const LineSystem& S);
LineSystem line_system_from_json(const Json& j);

// ---- pictures ---------------------------------------------------------------

// {"k", "m", "points": [...], "psi": {point: vertex-id}, "G": hypergraph}
Json picture_to_json(const Picture& pic);
Picture picture_from_json(const Json& j);

// ---- lattice objects --------------------------------------------------------

// Lattice coordinates are decimal strings; big integers exceed the native
// JSON number range.
Json lattice_point_to_json(const LatticePoint& p);
LatticePoint lattice_point_from_json(const Json& j);

// {"d": int, "points": [["x","y"]...]}
Json configuration_to_json(const Configuration& F);
Configuration configuration_from_json(const Json& j);

// {"T": "...", "n": int, "status": "unvalidated"|"injectivity-checked"|"pullback-checked"}
Json embed_params_to_json(const EmbedParams& p);
EmbedParams embed_params_from_json(const Json& j);

// {"F": ..., "params": ..., "domain": point-set, "image": [lattice points]}
Json phi_map_to_json(const PhiMap& phi);

// ---- files ------------------------------------------------------------------

// Deterministic rendering: two-space indent, trailing newline.
std::string render_json(const Json& j);
void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path);

}  // namespace hjkit
