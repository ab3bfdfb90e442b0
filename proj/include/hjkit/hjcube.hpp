#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hjkit {

// A point of the cube [k]^n. Symbols are 0-based internally; display and
// serialization are 1-based. Entries pack into one 62-bit word whenever
// n * ceil(log2 k) fits, with explicit byte storage as the fallback; equality,
// ordering and hashing use the packed code when available. Ordering is
// lexicographic by entries (after dim, then k).
class Point {
 public:
  Point() = default;
  Point(int k, const std::vector<uint8_t>& entries);

  // Parses 1-based digits, e.g. "121" -> entries {0,1,0}. Requires k <= 9.
  static Point from_digits(int k, const std::string& digits);

  int k() const { return k_; }
  int dim() const { return dim_; }
  uint8_t at(int i) const;  // 0-based coordinate; 0-based symbol
  std::vector<uint8_t> entries() const;

  // 1-based digit string for k <= 9, else comma-separated 1-based values.
  std::string to_string() const;

  bool operator==(const Point& o) const;
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const;
  size_t hash() const;

 private:
  uint64_t code_ = 0;          // packed form; entry i occupies bits (dim-1-i)*bits_
  std::vector<uint8_t> ext_;   // fallback entries when not packed
  uint16_t dim_ = 0;
  uint8_t k_ = 0;
  uint8_t bits_ = 0;           // bits per entry when packed, 0 otherwise
};

struct PointHash {
  size_t operator()(const Point& p) const { return p.hash(); }
};

// Concatenates entry sequences; all slots must share the same k.
// Identifies ([k]^m)^n with [k]^{m n}.
Point flatten(const std::vector<Point>& slots);

// Combinatorial embedding eta: A^m -> A^n over an alphabet of size k, given by
// a partition of the n target coordinates into constants (fixed symbol) and m
// nonempty moving blocks: coordinate i of eta(a) is constant[i] when block[i]
// is -1 and a[block[i]] otherwise. Embeddings are injective and send
// combinatorial lines to combinatorial lines.
struct CombEmbedding {
  int k = 0;
  int source_dim = 0;              // m
  int target_dim = 0;              // n
  std::vector<int> block;          // size n; -1 = constant coordinate
  std::vector<int> constant;       // size n; 0-based symbol, -1 on moving coordinates

  static CombEmbedding identity(int k, int n);
  void validate() const;           // throws std::invalid_argument
  Point apply(const Point& p) const;
  std::vector<int> moving_block(int j) const;  // coordinates of block j, ascending
  bool operator==(const CombEmbedding&) const;
};

// outer: A^n -> A^N after inner: A^m -> A^n; result applies as outer o inner.
CombEmbedding compose_embeddings(const CombEmbedding& outer, const CombEmbedding& inner);

// Combinatorial line: the image of an embedding with one moving block. The
// embedding of a line is unique, so lines compare via their embeddings.
struct Line {
  CombEmbedding emb;  // source_dim == 1

  int k() const { return emb.k; }
  int dim() const { return emb.target_dim; }
  std::vector<int> moving() const { return emb.moving_block(0); }
  std::vector<Point> points() const;  // k points in symbol order
  Point point(int symbol) const;

  // "1*1" form; requires k <= 9. Moving coordinates print '*'.
  std::string star_word() const;
  static Line from_star_word(int k, const std::string& word);

  bool operator==(const Line& o) const { return emb == o.emb; }
  bool operator<(const Line& o) const;
};

// Verdict for a k-point subset of [k]^n. A quasiline is a k-set in which every
// coordinate is constant or takes all k values; every line is a quasiline.
enum class KSetKind { NotQuasiline, QuasilineOnly, IsLine };

struct KSetVerdict {
  KSetKind kind = KSetKind::NotQuasiline;
  std::optional<Line> line;      // set when kind == IsLine
  std::optional<int> bad_coord;  // a coordinate violating the pattern, when NotQuasiline
};

// pts must hold exactly k distinct points of a common cube.
KSetVerdict classify_kset(const std::vector<Point>& pts, int k);

// Lines of [k]^n grouped by moving-set size: sum over i of C(n,i) k^{n-i}
// = (k+1)^n - k^n lines in total.
uint64_t line_count(int k, int n, std::optional<int> moving_size = std::nullopt);

// Streams lines in a fixed order: words over {1..k, *} in lexicographic order
// with '*' sorted after the symbols, skipping star-free words.
void for_each_line(int k, int n, std::optional<int> moving_size,
                   const std::function<void(const Line&)>& fn);
std::vector<Line> enumerate_lines(int k, int n, std::optional<int> moving_size = std::nullopt);

// Decodes word index u in [0, (k+1)^n): digit k means '*'. Returns nullopt for
// star-free words. Uniform sampling over line indices uses rejection on this.
std::optional<Line> line_from_word_index(int k, int n, uint64_t u);

// All lines whose k points lie inside P. Two points lie on at most one common
// line; candidates are generated from point pairs and deduplicated.
std::vector<Line> lines_within(const std::vector<Point>& P, int k);

struct QuasilineScan {
  std::vector<std::vector<Point>> quasilines;  // sorted k-sets, lines included
  bool complete = true;                        // false when the node budget ran out
  uint64_t nodes = 0;
};

// Exhaustive backtracking over k-subsets of P, pruning any prefix in which
// some coordinate is already neither constant nor injective.
QuasilineScan quasilines_within(const std::vector<Point>& P, int k,
                                uint64_t node_budget = ~0ull);

// An alphabet whose symbols are points of an underlying cube [k]^m
// (music lines of a picture, for instance). Symbols are sorted and distinct.
struct PointAlphabet {
  int k = 0;
  int m = 0;
  std::vector<Point> symbols;

  int size() const { return static_cast<int>(symbols.size()); }
  void validate() const;
  int index_of(const Point& p) const;  // -1 when absent
};

// Extension of eta: A^s -> A^n over a point alphabet A inside [k]^m to a
// combinatorial embedding [k]^{m s} -> [k]^{m n}, identifying ([k]^m)^n with
// [k]^{m n} slot by slot. Restricted to A^s it agrees with eta followed by
// flattening, and compositions of extensions are again embeddings over [k].
CombEmbedding extend_embedding(const CombEmbedding& eta, const PointAlphabet& A);

// Flattens the points of a line over a point alphabet into [k]^{m n}.
std::vector<Point> flatten_line_points(const Line& line, const PointAlphabet& A);

uint64_t pow_u64(uint64_t base, int exp);  // throws on overflow
uint64_t binomial(int n, int r);

}  // namespace hjkit
