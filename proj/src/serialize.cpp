#include "hjkit/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace hjkit {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw std::invalid_argument("schema error: " + what);
}

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    schema_error(std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

const Json& get_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
    schema_error(std::string("missing array field \"") + key + "\"");
  }
  return j[key];
}

Point point_from_string(const std::string& s, int k, int n) {
  if (k <= 9) {
    const Point p = Point::from_digits(k, s);
    if (p.dim() != n) schema_error("point \"" + s + "\" has wrong dimension");
    return p;
  }
  std::vector<uint8_t> entries;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    const std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
    if (tok.empty()) schema_error("bad point string \"" + s + "\"");
    const int value = std::stoi(tok);
    if (value < 1 || value > k) schema_error("point entry out of range in \"" + s + "\"");
    entries.push_back(static_cast<uint8_t>(value - 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(entries.size()) != n) schema_error("point \"" + s + "\" has wrong dimension");
  return Point(k, entries);
}

}  // namespace

std::string verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Proven: return "proven";
    case VerdictKind::Refuted: return "refuted";
    case VerdictKind::Unknown: return "unknown";
  }
  throw std::logic_error("bad verdict kind");
}

VerdictKind verdict_from_name(const std::string& name) {
  if (name == "proven") return VerdictKind::Proven;
  if (name == "refuted") return VerdictKind::Refuted;
  if (name == "unknown") return VerdictKind::Unknown;
  schema_error("unknown verdict \"" + name + "\"");
}

Json point_to_json(const Point& p) {
  if (p.k() <= 9) return Json(p.to_string());
  Json arr = Json::array();
  for (int i = 0; i < p.dim(); ++i) arr.push_back(p.at(i) + 1);
  return arr;
}

Point point_from_json(const Json& j, int k, int n) {
  if (j.is_string()) return point_from_string(j.get<std::string>(), k, n);
  if (!j.is_array()) schema_error("point must be a digit string or an integer array");
  std::vector<uint8_t> entries;
  for (const auto& e : j) {
    if (!e.is_number_integer()) schema_error("point array entry must be an integer");
    const int value = e.get<int>();
    if (value < 1 || value > k) schema_error("point array entry out of range");
    entries.push_back(static_cast<uint8_t>(value - 1));
  }
  if (static_cast<int>(entries.size()) != n) schema_error("point has wrong dimension");
  return Point(k, entries);
}

Json point_set_to_json(int k, int n, const std::vector<Point>& pts) {
  std::vector<Point> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  Json j;
  j["k"] = k;
  j["n"] = n;
  Json arr = Json::array();
  for (const Point& p : sorted) {
    if (p.k() != k || p.dim() != n) throw std::invalid_argument("point set entry outside [k]^n");
    arr.push_back(point_to_json(p));
  }
  j["points"] = std::move(arr);
  return j;
}

PointSet point_set_from_json(const Json& j) {
  PointSet ps;
  ps.k = get_int(j, "k");
  ps.n = get_int(j, "n");
  for (const auto& e : get_array(j, "points")) ps.points.push_back(point_from_json(e, ps.k, ps.n));
  return ps;
}

Json hypergraph_to_json(const Hypergraph& H) {
  Json j;
  j["k"] = H.k;
  j["vertices"] = H.vertex_ids;
  Json edges = Json::array();
  for (const auto& e : H.edges) {
    Json edge = Json::array();
    for (int v : e) edge.push_back(H.vertex_ids[static_cast<size_t>(v)]);
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  const int k = get_int(j, "k");
  std::vector<std::string> ids;
  for (const auto& v : get_array(j, "vertices")) {
    if (!v.is_string()) schema_error("vertex id must be a string");
    ids.push_back(v.get<std::string>());
  }
  Hypergraph H;
  H.k = k;
  H.vertex_ids = ids;
  std::vector<std::vector<int>> edges;
  for (const auto& e : get_array(j, "edges")) {
    if (!e.is_array()) schema_error("edge must be an array of vertex ids");
    std::vector<int> edge;
    for (const auto& v : e) {
      if (!v.is_string()) schema_error("edge entry must be a vertex id string");
      const int idx = H.index_of(v.get<std::string>());
      if (idx < 0) schema_error("edge references unknown vertex \"" + v.get<std::string>() + "\"");
      edge.push_back(idx);
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph::make(k, ids, edges);
}

Json line_to_json(const Line& line) {
  if (line.k() <= 9) return Json(line.star_word());
  Json j;
  Json blocks = Json::array();
  blocks.push_back(line.moving());
  j["blocks"] = std::move(blocks);
  Json constants = Json::array();
  for (int c = 0; c < line.dim(); ++c) {
    if (line.emb.block[static_cast<size_t>(c)] < 0) {
      constants.push_back(Json::array({c, line.emb.constant[static_cast<size_t>(c)]}));
    }
  }
  j["constants"] = std::move(constants);
  return j;
}

Line line_from_json(const Json& j, int k, int n) {
  if (j.is_string()) {
    const Line line = Line::from_star_word(k, j.get<std::string>());
    if (line.dim() != n) schema_error("line has wrong dimension");
    return line;
  }
  if (!j.is_object()) schema_error("line must be a star-word or a block object");
  CombEmbedding emb;
  emb.k = k;
  emb.source_dim = 1;
  emb.target_dim = n;
  emb.block.assign(static_cast<size_t>(n), -1);
  emb.constant.assign(static_cast<size_t>(n), -1);
  const Json& blocks = get_array(j, "blocks");
  if (blocks.size() != 1) schema_error("a line has exactly one moving block");
  for (const auto& c : blocks[0]) {
    const int coord = c.get<int>();
    if (coord < 0 || coord >= n) schema_error("moving coordinate out of range");
    emb.block[static_cast<size_t>(coord)] = 0;
  }
  for (const auto& pair : get_array(j, "constants")) {
    if (!pair.is_array() || pair.size() != 2) schema_error("constant entry must be [coord, symbol]");
    const int coord = pair[0].get<int>();
    const int sym = pair[1].get<int>();
    if (coord < 0 || coord >= n) schema_error("constant coordinate out of range");
    emb.constant[static_cast<size_t>(coord)] = sym;
  }
  emb.validate();
  Line line;
  line.emb = emb;
  return line;
}

Json line_system_to_json(const LineSystem& S) {
  Json j;
  j["k"] = S.k;
  j["n"] = S.n;
  Json lines = Json::array();
  for (const Line& line : S.lines) lines.push_back(line_to_json(line));
  j["lines"] = std::move(lines);
  if (S.alphabet) {
    Json alpha = Json::array();
    for (const Point& p : S.alphabet->symbols) alpha.push_back(point_to_json(p));
    j["alphabet"] = std::move(alpha);
    j["alphabet_cube"] = Json{{"k", S.alphabet->k}, {"m", S.alphabet->m}};
  }
  return j;
}

LineSystem line_system_from_json(const Json& j) {
  LineSystem S;
  S.k = get_int(j, "k");
  S.n = get_int(j, "n");
  for (const auto& e : get_array(j, "lines")) S.lines.push_back(line_from_json(e, S.k, S.n));
  if (j.contains("alphabet")) {
    if (!j.contains("alphabet_cube")) schema_error("alphabet without alphabet_cube");
    PointAlphabet A;
    A.k = get_int(j["alphabet_cube"], "k");
    A.m = get_int(j["alphabet_cube"], "m");
    for (const auto& e : get_array(j, "alphabet")) A.symbols.push_back(point_from_json(e, A.k, A.m));
    S.alphabet = std::move(A);
  }
  S.validate();
  return S;
}

Json picture_to_json(const Picture& pic) {
  Json j;
  j["k"] = pic.k;
  j["m"] = pic.m;
  Json pts = Json::array();
  for (const Point& p : pic.points) pts.push_back(point_to_json(p));
  j["points"] = std::move(pts);
  Json psi = Json::object();
  for (const Point& p : pic.points) {
    const auto it = pic.psi.find(p);
    if (it == pic.psi.end()) throw std::invalid_argument("picture point without a label");
    psi[p.to_string()] = pic.G.vertex_ids[static_cast<size_t>(it->second)];
  }
  j["psi"] = std::move(psi);
  j["G"] = hypergraph_to_json(pic.G);
  return j;
}

Picture picture_from_json(const Json& j) {
  Picture pic;
  pic.k = get_int(j, "k");
  pic.m = get_int(j, "m");
  pic.G = hypergraph_from_json(j.contains("G") ? j["G"] : Json());
  for (const auto& e : get_array(j, "points")) {
    pic.points.push_back(point_from_json(e, pic.k, pic.m));
  }
  std::sort(pic.points.begin(), pic.points.end());
  if (!j.contains("psi") || !j["psi"].is_object()) schema_error("missing object field \"psi\"");
  for (const auto& [key, value] : j["psi"].items()) {
    const Point p = point_from_string(key, pic.k, pic.m);
    if (!value.is_string()) schema_error("psi value must be a vertex id string");
    const int v = pic.G.index_of(value.get<std::string>());
    if (v < 0) schema_error("psi references unknown vertex \"" + value.get<std::string>() + "\"");
    pic.psi[p] = v;
  }
  pic.validate();
  return pic;
}

Json lattice_point_to_json(const LatticePoint& p) {
  Json arr = Json::array();
  for (const BigInt& c : p.x) arr.push_back(c.str());
  return arr;
}

LatticePoint lattice_point_from_json(const Json& j) {
  if (!j.is_array()) schema_error("lattice point must be an array of decimal strings");
  LatticePoint p;
  for (const auto& c : j) {
    if (!c.is_string()) schema_error("lattice coordinate must be a decimal string");
    p.x.push_back(parse_bigint(c.get<std::string>()));
  }
  return p;
}

Json configuration_to_json(const Configuration& F) {
  Json j;
  j["d"] = F.d;
  Json pts = Json::array();
  for (const LatticePoint& p : F.points) pts.push_back(lattice_point_to_json(p));
  j["points"] = std::move(pts);
  return j;
}

Configuration configuration_from_json(const Json& j) {
  Configuration F;
  F.d = get_int(j, "d");
  for (const auto& e : get_array(j, "points")) F.points.push_back(lattice_point_from_json(e));
  F.validate();
  return F;
}

namespace {

std::string embed_status_name(EmbedParams::Status s) {
  switch (s) {
    case EmbedParams::Status::Unvalidated: return "unvalidated";
    case EmbedParams::Status::InjectivityChecked: return "injectivity-checked";
    case EmbedParams::Status::PullbackChecked: return "pullback-checked";
  }
  throw std::logic_error("bad embed status");
}

EmbedParams::Status embed_status_from_name(const std::string& s) {
  if (s == "unvalidated") return EmbedParams::Status::Unvalidated;
  if (s == "injectivity-checked") return EmbedParams::Status::InjectivityChecked;
  if (s == "pullback-checked") return EmbedParams::Status::PullbackChecked;
  schema_error("unknown embed status \"" + s + "\"");
}

}  // namespace

Json embed_params_to_json(const EmbedParams& p) {
  Json j;
  j["T"] = p.T.str();
  j["n"] = p.n;
  j["status"] = embed_status_name(p.status);
  return j;
}

EmbedParams embed_params_from_json(const Json& j) {
  EmbedParams p;
  if (!j.is_object() || !j.contains("T") || !j["T"].is_string()) {
    schema_error("missing string field \"T\"");
  }
  p.T = parse_bigint(j["T"].get<std::string>());
  p.n = get_int(j, "n");
  if (!j.contains("status") || !j["status"].is_string()) schema_error("missing field \"status\"");
  p.status = embed_status_from_name(j["status"].get<std::string>());
  return p;
}

Json phi_map_to_json(const PhiMap& phi) {
  Json j;
  j["F"] = configuration_to_json(phi.F);
  j["params"] = embed_params_to_json(phi.params);
  const int k = phi.F.k();
  const int n = phi.params.n;
  j["domain"] = point_set_to_json(k, n, phi.domain);
  Json image = Json::array();
  for (const LatticePoint& y : phi.image) image.push_back(lattice_point_to_json(y));
  j["image"] = std::move(image);
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << render_json(j);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("schema error: cannot parse " + path.string() + ": " + e.what());
  }
  return j;
}

}  // namespace hjkit
