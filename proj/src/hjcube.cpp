#include "hjkit/hjcube.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace hjkit {

namespace {

constexpr int kMaxAlphabet = 200;
constexpr int kMaxDim = 60000;

void check_alphabet(int k) {
  if (k < 2 || k > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in [2, " +
                                std::to_string(kMaxAlphabet) + "], got " + std::to_string(k));
  }
}

}  // namespace

uint64_t pow_u64(uint64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > ~0ull / base) throw std::overflow_error("pow_u64 overflow");
    r *= base;
  }
  return r;
}

uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  uint64_t res = 1;
  for (int i = 1; i <= r; ++i) {
    const uint64_t num = static_cast<uint64_t>(n - r + i);
    if (res > ~0ull / num) throw std::overflow_error("binomial overflow");
    res = res * num / static_cast<uint64_t>(i);  // divisible at every step
  }
  return res;
}

// ---------------------------------------------------------------------------
// Point

Point::Point(int k, const std::vector<uint8_t>& entries) {
  check_alphabet(k);
  if (entries.size() > static_cast<size_t>(kMaxDim)) {
    throw std::invalid_argument("dimension too large");
  }
  for (uint8_t e : entries) {
    if (e >= k) throw std::invalid_argument("entry out of range for alphabet");
  }
  k_ = static_cast<uint8_t>(k);
  dim_ = static_cast<uint16_t>(entries.size());
  const int bits = std::bit_width(static_cast<unsigned>(k - 1));
  if (static_cast<int>(entries.size()) * bits <= 62) {
    bits_ = static_cast<uint8_t>(bits);
    code_ = 0;
    for (uint8_t e : entries) code_ = (code_ << bits) | e;
  } else {
    bits_ = 0;
    ext_ = entries;
  }
}

Point Point::from_digits(int k, const std::string& digits) {
  if (k > 9) throw std::invalid_argument("digit form requires k <= 9");
  std::vector<uint8_t> e;
  e.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '0' + k) {
      throw std::invalid_argument("bad digit '" + std::string(1, c) + "' for alphabet [" +
                                  std::to_string(k) + "]");
    }
    e.push_back(static_cast<uint8_t>(c - '1'));
  }
  return Point(k, e);
}

uint8_t Point::at(int i) const {
  if (i < 0 || i >= dim_) throw std::out_of_range("point coordinate out of range");
  if (bits_ != 0) {
    const int shift = (dim_ - 1 - i) * bits_;
    return static_cast<uint8_t>((code_ >> shift) & ((1ull << bits_) - 1));
  }
  return ext_[static_cast<size_t>(i)];
}

std::vector<uint8_t> Point::entries() const {
  if (bits_ == 0) return ext_;
  std::vector<uint8_t> e(dim_);
  for (int i = 0; i < dim_; ++i) e[static_cast<size_t>(i)] = at(i);
  return e;
}

std::string Point::to_string() const {
  std::string s;
  if (k_ <= 9) {
    s.reserve(dim_);
    for (int i = 0; i < dim_; ++i) s.push_back(static_cast<char>('1' + at(i)));
  } else {
    for (int i = 0; i < dim_; ++i) {
      if (i) s.push_back(',');
      s += std::to_string(at(i) + 1);
    }
  }
  return s;
}

bool Point::operator==(const Point& o) const {
  if (dim_ != o.dim_ || k_ != o.k_) return false;
  if (bits_ != 0 && o.bits_ != 0) return code_ == o.code_;
  return entries() == o.entries();
}

bool Point::operator<(const Point& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  if (k_ != o.k_) return k_ < o.k_;
  if (bits_ != 0 && o.bits_ != 0) return code_ < o.code_;  // MSB-first pack: lexicographic
  const auto a = entries();
  const auto b = o.entries();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

size_t Point::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto feed = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  feed((static_cast<uint64_t>(dim_) << 16) | k_);
  if (bits_ != 0) {
    feed(code_);
  } else {
    for (uint8_t e : ext_) {
      h ^= e;
      h *= 1099511628211ull;
    }
  }
  return static_cast<size_t>(h);
}

Point flatten(const std::vector<Point>& slots) {
  if (slots.empty()) throw std::invalid_argument("flatten requires at least one slot");
  const int k = slots[0].k();
  std::vector<uint8_t> e;
  for (const Point& p : slots) {
    if (p.k() != k) throw std::invalid_argument("flatten: mixed alphabets");
    const auto pe = p.entries();
    e.insert(e.end(), pe.begin(), pe.end());
  }
  return Point(k, e);
}

// ---------------------------------------------------------------------------
// CombEmbedding

CombEmbedding CombEmbedding::identity(int k, int n) {
  check_alphabet(k);
  CombEmbedding e;
  e.k = k;
  e.source_dim = n;
  e.target_dim = n;
  e.block.resize(static_cast<size_t>(n));
  e.constant.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) e.block[static_cast<size_t>(i)] = i;
  return e;
}

void CombEmbedding::validate() const {
  check_alphabet(k);
  if (source_dim < 1) throw std::invalid_argument("embedding needs source_dim >= 1");
  if (target_dim < source_dim) throw std::invalid_argument("embedding needs target_dim >= source_dim");
  if (block.size() != static_cast<size_t>(target_dim) ||
      constant.size() != static_cast<size_t>(target_dim)) {
    throw std::invalid_argument("embedding arrays must have target_dim entries");
  }
  std::vector<char> seen(static_cast<size_t>(source_dim), 0);
  for (int i = 0; i < target_dim; ++i) {
    const int b = block[static_cast<size_t>(i)];
    const int c = constant[static_cast<size_t>(i)];
    if (b == -1) {
      if (c < 0 || c >= k) throw std::invalid_argument("constant symbol out of range");
    } else {
      if (b < 0 || b >= source_dim) throw std::invalid_argument("block index out of range");
      if (c != -1) throw std::invalid_argument("moving coordinate carries a constant");
      seen[static_cast<size_t>(b)] = 1;
    }
  }
  for (int j = 0; j < source_dim; ++j) {
    if (!seen[static_cast<size_t>(j)]) {
      throw std::invalid_argument("moving block " + std::to_string(j + 1) + " is empty");
    }
  }
}

Point CombEmbedding::apply(const Point& p) const {
  if (p.dim() != source_dim || p.k() != k) {
    throw std::invalid_argument("embedding applied to point of wrong shape");
  }
  std::vector<uint8_t> e(static_cast<size_t>(target_dim));
  for (int i = 0; i < target_dim; ++i) {
    const int b = block[static_cast<size_t>(i)];
    e[static_cast<size_t>(i)] =
        (b == -1) ? static_cast<uint8_t>(constant[static_cast<size_t>(i)]) : p.at(b);
  }
  return Point(k, e);
}

std::vector<int> CombEmbedding::moving_block(int j) const {
  std::vector<int> coords;
  for (int i = 0; i < target_dim; ++i) {
    if (block[static_cast<size_t>(i)] == j) coords.push_back(i);
  }
  return coords;
}

bool CombEmbedding::operator==(const CombEmbedding& o) const {
  return k == o.k && source_dim == o.source_dim && target_dim == o.target_dim &&
         block == o.block && constant == o.constant;
}

CombEmbedding compose_embeddings(const CombEmbedding& outer, const CombEmbedding& inner) {
  if (outer.k != inner.k) throw std::invalid_argument("compose: alphabet mismatch");
  if (outer.source_dim != inner.target_dim) {
    throw std::invalid_argument("compose: outer source dimension != inner target dimension");
  }
  CombEmbedding r;
  r.k = outer.k;
  r.source_dim = inner.source_dim;
  r.target_dim = outer.target_dim;
  r.block.resize(static_cast<size_t>(r.target_dim));
  r.constant.resize(static_cast<size_t>(r.target_dim));
  for (int i = 0; i < outer.target_dim; ++i) {
    const int ob = outer.block[static_cast<size_t>(i)];
    if (ob == -1) {
      r.block[static_cast<size_t>(i)] = -1;
      r.constant[static_cast<size_t>(i)] = outer.constant[static_cast<size_t>(i)];
    } else {
      r.block[static_cast<size_t>(i)] = inner.block[static_cast<size_t>(ob)];
      r.constant[static_cast<size_t>(i)] = inner.constant[static_cast<size_t>(ob)];
    }
  }
  r.validate();
  return r;
}

// ---------------------------------------------------------------------------
// Line

std::vector<Point> Line::points() const {
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(emb.k));
  for (int s = 0; s < emb.k; ++s) pts.push_back(point(s));
  return pts;
}

Point Line::point(int symbol) const {
  if (symbol < 0 || symbol >= emb.k) throw std::invalid_argument("line symbol out of range");
  return emb.apply(Point(emb.k, {static_cast<uint8_t>(symbol)}));
}

std::string Line::star_word() const {
  if (emb.k > 9) throw std::invalid_argument("star word requires k <= 9");
  std::string w;
  w.reserve(static_cast<size_t>(emb.target_dim));
  for (int i = 0; i < emb.target_dim; ++i) {
    const int b = emb.block[static_cast<size_t>(i)];
    w.push_back(b == -1 ? static_cast<char>('1' + emb.constant[static_cast<size_t>(i)]) : '*');
  }
  return w;
}

Line Line::from_star_word(int k, const std::string& word) {
  check_alphabet(k);
  if (k > 9) throw std::invalid_argument("star word requires k <= 9");
  CombEmbedding e;
  e.k = k;
  e.source_dim = 1;
  e.target_dim = static_cast<int>(word.size());
  e.block.resize(word.size());
  e.constant.resize(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (c == '*') {
      e.block[i] = 0;
      e.constant[i] = -1;
    } else if (c >= '1' && c <= '0' + k) {
      e.block[i] = -1;
      e.constant[i] = c - '1';
    } else {
      throw std::invalid_argument("bad star-word character '" + std::string(1, c) + "'");
    }
  }
  e.validate();
  return Line{e};
}

bool Line::operator<(const Line& o) const {
  if (emb.target_dim != o.emb.target_dim) return emb.target_dim < o.emb.target_dim;
  if (emb.k != o.emb.k) return emb.k < o.emb.k;
  // Word order with '*' sorted after the symbols; matches enumeration order.
  for (int i = 0; i < emb.target_dim; ++i) {
    const int a = emb.block[static_cast<size_t>(i)] == -1 ? emb.constant[static_cast<size_t>(i)]
                                                          : emb.k;
    const int b = o.emb.block[static_cast<size_t>(i)] == -1
                      ? o.emb.constant[static_cast<size_t>(i)]
                      : o.emb.k;
    if (a != b) return a < b;
  }
  return false;
}

// ---------------------------------------------------------------------------
// k-set classification

KSetVerdict classify_kset(const std::vector<Point>& pts, int k) {
  check_alphabet(k);
  if (pts.size() != static_cast<size_t>(k)) {
    throw std::invalid_argument("classify_kset requires exactly k points");
  }
  const int n = pts[0].dim();
  for (const Point& p : pts) {
    if (p.dim() != n || p.k() != k) {
      throw std::invalid_argument("classify_kset: points from different cubes");
    }
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) throw std::invalid_argument("classify_kset: duplicate point");
    }
  }

  // Pattern per coordinate: constant, or all k values (a bijection onto [k]).
  std::vector<char> is_const(static_cast<size_t>(n), 0);
  int first_distinct = -1;
  for (int c = 0; c < n; ++c) {
    bool all_eq = true;
    uint64_t used = 0;
    bool all_distinct = true;
    for (const Point& p : pts) {
      const uint8_t v = p.at(c);
      if (v != pts[0].at(c)) all_eq = false;
      const uint64_t bit = 1ull << v;
      if (used & bit) all_distinct = false;
      used |= bit;
    }
    if (all_eq) {
      is_const[static_cast<size_t>(c)] = 1;
    } else if (all_distinct) {
      if (first_distinct == -1) first_distinct = c;
    } else {
      KSetVerdict v;
      v.kind = KSetKind::NotQuasiline;
      v.bad_coord = c;
      return v;
    }
  }
  // k >= 2 distinct points cannot be constant everywhere.
  if (first_distinct == -1) throw std::logic_error("distinct points constant in every coordinate");

  // A line orders its points by the value on any moving coordinate; use the
  // first all-distinct coordinate as the candidate order and test the rest.
  std::vector<const Point*> ordered(static_cast<size_t>(k), nullptr);
  for (const Point& p : pts) ordered[p.at(first_distinct)] = &p;
  bool line_ok = true;
  for (int c = 0; c < n && line_ok; ++c) {
    if (is_const[static_cast<size_t>(c)]) continue;
    for (int s = 0; s < k; ++s) {
      if (ordered[static_cast<size_t>(s)]->at(c) != s) {
        line_ok = false;
        break;
      }
    }
  }

  KSetVerdict v;
  if (!line_ok) {
    v.kind = KSetKind::QuasilineOnly;
    return v;
  }
  v.kind = KSetKind::IsLine;
  CombEmbedding e;
  e.k = k;
  e.source_dim = 1;
  e.target_dim = n;
  e.block.resize(static_cast<size_t>(n));
  e.constant.resize(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    if (is_const[static_cast<size_t>(c)]) {
      e.block[static_cast<size_t>(c)] = -1;
      e.constant[static_cast<size_t>(c)] = pts[0].at(c);
    } else {
      e.block[static_cast<size_t>(c)] = 0;
      e.constant[static_cast<size_t>(c)] = -1;
    }
  }
  e.validate();
  v.line = Line{e};
  return v;
}

// ---------------------------------------------------------------------------
// Line enumeration

uint64_t line_count(int k, int n, std::optional<int> moving_size) {
  check_alphabet(k);
  if (n < 1) throw std::invalid_argument("line_count requires n >= 1");
  if (moving_size) {
    const int i = *moving_size;
    if (i < 1 || i > n) return 0;
    const uint64_t c = binomial(n, i);
    const uint64_t p = pow_u64(static_cast<uint64_t>(k), n - i);
    if (c != 0 && p > ~0ull / c) throw std::overflow_error("line_count overflow");
    return c * p;
  }
  return pow_u64(static_cast<uint64_t>(k) + 1, n) - pow_u64(static_cast<uint64_t>(k), n);
}

std::optional<Line> line_from_word_index(int k, int n, uint64_t u) {
  check_alphabet(k);
  const uint64_t total = pow_u64(static_cast<uint64_t>(k) + 1, n);
  if (u >= total) throw std::invalid_argument("word index out of range");
  CombEmbedding e;
  e.k = k;
  e.source_dim = 1;
  e.target_dim = n;
  e.block.resize(static_cast<size_t>(n));
  e.constant.resize(static_cast<size_t>(n));
  bool has_star = false;
  for (int i = n - 1; i >= 0; --i) {
    const int digit = static_cast<int>(u % static_cast<uint64_t>(k + 1));
    u /= static_cast<uint64_t>(k + 1);
    if (digit == k) {
      e.block[static_cast<size_t>(i)] = 0;
      e.constant[static_cast<size_t>(i)] = -1;
      has_star = true;
    } else {
      e.block[static_cast<size_t>(i)] = -1;
      e.constant[static_cast<size_t>(i)] = digit;
    }
  }
  if (!has_star) return std::nullopt;
  return Line{e};
}

void for_each_line(int k, int n, std::optional<int> moving_size,
                   const std::function<void(const Line&)>& fn) {
  check_alphabet(k);
  if (n < 1) throw std::invalid_argument("for_each_line requires n >= 1");
  const uint64_t total = pow_u64(static_cast<uint64_t>(k) + 1, n);
  for (uint64_t u = 0; u < total; ++u) {
    auto line = line_from_word_index(k, n, u);
    if (!line) continue;
    if (moving_size && static_cast<int>(line->moving().size()) != *moving_size) continue;
    fn(*line);
  }
}

std::vector<Line> enumerate_lines(int k, int n, std::optional<int> moving_size) {
  std::vector<Line> out;
  for_each_line(k, n, moving_size, [&out](const Line& l) { out.push_back(l); });
  return out;
}

// ---------------------------------------------------------------------------
// Lines and quasilines inside a point set

std::vector<Line> lines_within(const std::vector<Point>& P, int k) {
  check_alphabet(k);
  if (P.empty()) return {};
  const int n = P[0].dim();
  std::set<Point> members;
  for (const Point& p : P) {
    if (p.dim() != n || p.k() != k) throw std::invalid_argument("lines_within: mixed cubes");
    if (!members.insert(p).second) throw std::invalid_argument("lines_within: duplicate point");
  }
  std::vector<Point> pts(members.begin(), members.end());

  // Two points determine at most one line: the moving set must be exactly the
  // set of differing coordinates and the two symbol values must agree across
  // it, which pins the embedding.
  std::set<Line> found;
  for (size_t a = 0; a < pts.size(); ++a) {
    for (size_t b = a + 1; b < pts.size(); ++b) {
      int sym_a = -1, sym_b = -1;
      bool consistent = true;
      for (int c = 0; c < n && consistent; ++c) {
        const uint8_t va = pts[a].at(c);
        const uint8_t vb = pts[b].at(c);
        if (va == vb) continue;
        if (sym_a == -1) {
          sym_a = va;
          sym_b = vb;
        } else if (va != sym_a || vb != sym_b) {
          consistent = false;
        }
      }
      if (!consistent || sym_a == -1) continue;
      CombEmbedding e;
      e.k = k;
      e.source_dim = 1;
      e.target_dim = n;
      e.block.resize(static_cast<size_t>(n));
      e.constant.resize(static_cast<size_t>(n));
      for (int c = 0; c < n; ++c) {
        if (pts[a].at(c) != pts[b].at(c)) {
          e.block[static_cast<size_t>(c)] = 0;
          e.constant[static_cast<size_t>(c)] = -1;
        } else {
          e.block[static_cast<size_t>(c)] = -1;
          e.constant[static_cast<size_t>(c)] = pts[a].at(c);
        }
      }
      const Line cand{e};
      bool inside = true;
      for (int s = 0; s < k && inside; ++s) {
        if (!members.count(cand.point(s))) inside = false;
      }
      if (inside) found.insert(cand);
    }
  }
  return std::vector<Line>(found.begin(), found.end());
}

namespace {

struct QuasiState {
  const std::vector<Point>* pts;
  int k = 0;
  int n = 0;
  uint64_t budget = 0;
  uint64_t nodes = 0;
  bool complete = true;
  std::vector<int> chosen;
  // Per-coordinate pattern: still possibly constant / still injective.
  std::vector<char> eq_ok;
  std::vector<char> dist_ok;
  std::vector<uint64_t> used;
  std::vector<std::vector<Point>>* out;

  void run(size_t start) {
    if (!complete) return;
    if (nodes >= budget) {
      complete = false;
      return;
    }
    ++nodes;
    if (static_cast<int>(chosen.size()) == k) {
      std::vector<Point> set;
      set.reserve(static_cast<size_t>(k));
      for (int idx : chosen) set.push_back((*pts)[static_cast<size_t>(idx)]);
      out->push_back(std::move(set));
      return;
    }
    const int remaining = k - static_cast<int>(chosen.size());
    for (size_t i = start; i + static_cast<size_t>(remaining) <= pts->size(); ++i) {
      const Point& p = (*pts)[i];
      bool feasible = true;
      for (int c = 0; c < n && feasible; ++c) {
        const uint8_t v = p.at(c);
        const bool eq = eq_ok[static_cast<size_t>(c)] &&
                        (chosen.empty() || (*pts)[static_cast<size_t>(chosen[0])].at(c) == v);
        const bool dist =
            dist_ok[static_cast<size_t>(c)] && !(used[static_cast<size_t>(c)] & (1ull << v));
        if (!eq && !dist) feasible = false;
      }
      if (!feasible) continue;
      auto saved_eq = eq_ok;
      auto saved_dist = dist_ok;
      auto saved_used = used;
      for (int c = 0; c < n; ++c) {
        const uint8_t v = p.at(c);
        if (!chosen.empty() && (*pts)[static_cast<size_t>(chosen[0])].at(c) != v) {
          eq_ok[static_cast<size_t>(c)] = 0;
        }
        if (used[static_cast<size_t>(c)] & (1ull << v)) {
          dist_ok[static_cast<size_t>(c)] = 0;
        }
        used[static_cast<size_t>(c)] |= 1ull << v;
      }
      chosen.push_back(static_cast<int>(i));
      run(i + 1);
      chosen.pop_back();
      eq_ok = std::move(saved_eq);
      dist_ok = std::move(saved_dist);
      used = std::move(saved_used);
      if (!complete) return;
    }
  }
};

}  // namespace

QuasilineScan quasilines_within(const std::vector<Point>& P, int k, uint64_t node_budget) {
  check_alphabet(k);
  if (k > 62) throw std::invalid_argument("quasiline scan supports alphabets up to 62 symbols");
  QuasilineScan scan;
  if (P.size() < static_cast<size_t>(k)) return scan;
  const int n = P[0].dim();
  std::set<Point> members;
  for (const Point& p : P) {
    if (p.dim() != n || p.k() != k) throw std::invalid_argument("quasilines_within: mixed cubes");
    if (!members.insert(p).second) {
      throw std::invalid_argument("quasilines_within: duplicate point");
    }
  }
  std::vector<Point> pts(members.begin(), members.end());

  QuasiState st;
  st.pts = &pts;
  st.k = k;
  st.n = n;
  st.budget = node_budget;
  st.eq_ok.assign(static_cast<size_t>(n), 1);
  st.dist_ok.assign(static_cast<size_t>(n), 1);
  st.used.assign(static_cast<size_t>(n), 0);
  st.out = &scan.quasilines;
  st.run(0);
  scan.complete = st.complete;
  scan.nodes = st.nodes;
  return scan;
}

// ---------------------------------------------------------------------------
// Point alphabets and extension

void PointAlphabet::validate() const {
  check_alphabet(k);
  if (symbols.empty()) throw std::invalid_argument("point alphabet is empty");
  if (m < 1) throw std::invalid_argument("point alphabet needs m >= 1");
  for (const Point& p : symbols) {
    if (p.dim() != m || p.k() != k) {
      throw std::invalid_argument("point alphabet symbol of wrong shape");
    }
  }
  for (size_t i = 1; i < symbols.size(); ++i) {
    if (!(symbols[i - 1] < symbols[i])) {
      throw std::invalid_argument("point alphabet symbols must be sorted and distinct");
    }
  }
}

int PointAlphabet::index_of(const Point& p) const {
  const auto it = std::lower_bound(symbols.begin(), symbols.end(), p);
  if (it != symbols.end() && *it == p) return static_cast<int>(it - symbols.begin());
  return -1;
}

CombEmbedding extend_embedding(const CombEmbedding& eta, const PointAlphabet& A) {
  eta.validate();
  A.validate();
  if (eta.k != A.size()) {
    throw std::invalid_argument("extend_embedding: embedding alphabet size != |A|");
  }
  const int m = A.m;
  CombEmbedding r;
  r.k = A.k;
  r.source_dim = m * eta.source_dim;
  r.target_dim = m * eta.target_dim;
  r.block.resize(static_cast<size_t>(r.target_dim));
  r.constant.resize(static_cast<size_t>(r.target_dim));
  for (int slot = 0; slot < eta.target_dim; ++slot) {
    const int b = eta.block[static_cast<size_t>(slot)];
    for (int j = 0; j < m; ++j) {
      const size_t t = static_cast<size_t>(slot * m + j);
      if (b == -1) {
        const Point& g = A.symbols[static_cast<size_t>(eta.constant[static_cast<size_t>(slot)])];
        r.block[t] = -1;
        r.constant[t] = g.at(j);
      } else {
        r.block[t] = b * m + j;
        r.constant[t] = -1;
      }
    }
  }
  r.validate();
  return r;
}

std::vector<Point> flatten_line_points(const Line& line, const PointAlphabet& A) {
  A.validate();
  if (line.k() != A.size()) {
    throw std::invalid_argument("flatten_line_points: line alphabet size != |A|");
  }
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(line.k()));
  for (const Point& symbolic : line.points()) {
    std::vector<Point> slots;
    slots.reserve(static_cast<size_t>(symbolic.dim()));
    for (int i = 0; i < symbolic.dim(); ++i) {
      slots.push_back(A.symbols[symbolic.at(i)]);
    }
    out.push_back(flatten(slots));
  }
  return out;
}

}  // namespace hjkit
