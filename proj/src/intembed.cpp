#include "hjkit/intembed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hjkit {

bool LatticePoint::operator<(const LatticePoint& o) const {
  if (x.size() != o.x.size()) return x.size() < o.x.size();
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] != o.x[i]) return x[i] < o.x[i];
  }
  return false;
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x[i].str();
  }
  return s + ")";
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  if (a.x.size() != b.x.size()) throw std::invalid_argument("dimension mismatch");
  LatticePoint r = a;
  for (size_t i = 0; i < r.x.size(); ++i) r.x[i] += b.x[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  if (a.x.size() != b.x.size()) throw std::invalid_argument("dimension mismatch");
  LatticePoint r = a;
  for (size_t i = 0; i < r.x.size(); ++i) r.x[i] -= b.x[i];
  return r;
}

LatticePoint operator*(const BigInt& s, const LatticePoint& p) {
  LatticePoint r = p;
  for (auto& c : r.x) c *= s;
  return r;
}

BigInt dot(const LatticePoint& a, const LatticePoint& b) {
  if (a.x.size() != b.x.size()) throw std::invalid_argument("dimension mismatch");
  BigInt s = 0;
  for (size_t i = 0; i < a.x.size(); ++i) s += a.x[i] * b.x[i];
  return s;
}

void Configuration::validate() const {
  if (d < 1) throw std::invalid_argument("pattern dimension must be >= 1");
  if (points.size() < 2) throw std::invalid_argument("pattern needs at least 2 points");
  for (const auto& p : points) {
    if (p.d() != d) throw std::invalid_argument("pattern point of wrong dimension");
  }
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw std::invalid_argument("pattern points must be distinct");
    }
  }
}

BigInt Configuration::dist2(int i, int j) const {
  const LatticePoint diff = points[static_cast<size_t>(i)] - points[static_cast<size_t>(j)];
  return dot(diff, diff);
}

BigInt Configuration::diameter2() const {
  BigInt best = 0;
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, dist2(static_cast<int>(i), static_cast<int>(j)));
    }
  }
  return best;
}

Configuration Configuration::ap_pattern(int k) {
  if (k < 2) throw std::invalid_argument("ap_pattern needs k >= 2");
  Configuration F;
  F.d = 1;
  for (int i = 1; i <= k; ++i) F.points.push_back(LatticePoint{{BigInt(i)}});
  F.validate();
  return F;
}

Configuration Configuration::unit_square() {
  Configuration F;
  F.d = 2;
  F.points = {LatticePoint{{0, 0}}, LatticePoint{{0, 1}}, LatticePoint{{1, 0}},
              LatticePoint{{1, 1}}};
  F.validate();
  return F;
}

const LatticePoint& PhiMap::image_of(const Point& p) const {
  const auto it = std::lower_bound(domain.begin(), domain.end(), p);
  if (it == domain.end() || !(*it == p)) throw std::invalid_argument("point not in the domain");
  return image[static_cast<size_t>(it - domain.begin())];
}

std::optional<Point> PhiMap::preimage_of(const LatticePoint& y) const {
  for (size_t i = 0; i < image.size(); ++i) {
    if (image[i] == y) return domain[i];
  }
  return std::nullopt;
}

PhiMap phi_embed(const std::vector<Point>& X, const Configuration& F, const EmbedParams& params) {
  F.validate();
  if (params.T < 2) throw std::invalid_argument("T must be >= 2");
  if (params.n < 1) throw std::invalid_argument("n must be >= 1");
  if (X.empty()) throw std::invalid_argument("empty domain");

  PhiMap phi;
  phi.F = F;
  phi.params = params;
  phi.domain = X;
  std::sort(phi.domain.begin(), phi.domain.end());
  phi.domain.erase(std::unique(phi.domain.begin(), phi.domain.end()), phi.domain.end());
  if (phi.domain.size() != X.size()) throw std::invalid_argument("duplicate domain point");

  const int k = F.k();
  const int n = params.n;
  for (const Point& p : phi.domain) {
    if (p.dim() != n || p.k() != k) {
      throw std::invalid_argument("domain point not in [k]^n for the pattern size");
    }
  }

  // The largest tower power is T^(2^n): its bit count doubles with every
  // coordinate, so refuse up front when a coordinate would cost more than
  // 2^22 bits instead of grinding on numbers that cannot fit a desk.
  const uint64_t t_bits = boost::multiprecision::msb(params.T) + 1;
  if (n > 40 || t_bits * (1ull << n) > (1ull << 22)) {
    throw std::runtime_error("tower budget: T^(2^n) for T=" + params.T.str() + ", n=" +
                             std::to_string(n) + " exceeds the 4194304-bit cap");
  }

  // tower[i] = T^(2^(i+1)) for 0-based coordinate i.
  std::vector<BigInt> tower(static_cast<size_t>(n));
  BigInt t = params.T * params.T;
  for (int i = 0; i < n; ++i) {
    tower[static_cast<size_t>(i)] = t;
    if (i + 1 < n) t = t * t;
  }

  std::map<LatticePoint, const Point*> seen;
  for (const Point& a : phi.domain) {
    LatticePoint y;
    y.x.assign(static_cast<size_t>(F.d), BigInt(0));
    for (int i = 0; i < n; ++i) {
      const LatticePoint& f = F.points[a.at(i)];
      for (int c = 0; c < F.d; ++c) {
        y.x[static_cast<size_t>(c)] += tower[static_cast<size_t>(i)] * f.x[static_cast<size_t>(c)];
      }
    }
    const auto [it, inserted] = seen.emplace(y, &a);
    if (!inserted) {
      throw std::invalid_argument("phi collision: " + it->second->to_string() + " and " +
                                  a.to_string() + " map to " + y.to_string());
    }
    phi.image.push_back(std::move(y));
  }
  return phi;
}

bool HomotheticCopy::operator<(const HomotheticCopy& o) const {
  if (!(v == o.v)) return v < o.v;
  return lambda < o.lambda;
}

std::vector<HomotheticCopy> homothetic_copies(const std::vector<LatticePoint>& Y,
                                              const Configuration& F) {
  F.validate();
  std::set<LatticePoint> members(Y.begin(), Y.end());
  if (members.size() != Y.size()) throw std::invalid_argument("duplicate point in Y");
  for (const auto& y : Y) {
    if (y.d() != F.d) throw std::invalid_argument("Y point of wrong dimension");
  }

  const LatticePoint delta = F.points[1] - F.points[0];
  int pivot = -1;
  for (int c = 0; c < F.d; ++c) {
    if (delta.x[static_cast<size_t>(c)] != 0) {
      pivot = c;
      break;
    }
  }
  // F has distinct points, so f_2 - f_1 != 0.

  std::set<HomotheticCopy> found;
  for (const auto& ya : members) {
    for (const auto& yb : members) {
      if (ya == yb) continue;
      const LatticePoint diff = yb - ya;
      const BigInt num = diff.x[static_cast<size_t>(pivot)];
      const BigInt den = delta.x[static_cast<size_t>(pivot)];
      const BigInt lambda = num / den;
      if (lambda < 1 || lambda * den != num) continue;
      if (!(diff == lambda * delta)) continue;
      // v + lambda f_1 = ya.
      const LatticePoint v = ya - (lambda * F.points[0]);
      bool all = true;
      for (const auto& f : F.points) {
        if (!members.count(v + (lambda * f))) {
          all = false;
          break;
        }
      }
      if (all) found.insert(HomotheticCopy{v, lambda});
    }
  }
  return std::vector<HomotheticCopy>(found.begin(), found.end());
}

namespace {

struct CongruentState {
  const std::vector<LatticePoint>* Z;
  const Configuration* F;
  uint64_t budget;
  uint64_t nodes = 0;
  bool complete = true;
  std::vector<int> idx;
  std::vector<char> used;
  Rat lambda2;
  std::vector<std::vector<BigInt>> zdist2;  // cached pairwise squared distances
  std::vector<CongruentCopy>* out;

  BigInt zd2(int a, int b) const { return zdist2[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

  void run() {
    if (!complete) return;
    if (nodes++ >= budget) {
      complete = false;
      return;
    }
    const int pos = static_cast<int>(idx.size());
    const int k = F->k();
    if (pos == k) {
      out->push_back(CongruentCopy{idx, lambda2});
      return;
    }
    for (int cand = 0; cand < static_cast<int>(Z->size()); ++cand) {
      if (used[static_cast<size_t>(cand)]) continue;
      bool ok = true;
      Rat new_lambda2 = lambda2;
      for (int prev = 0; prev < pos && ok; ++prev) {
        const BigInt fz = F->dist2(pos, prev);
        const BigInt dz = zd2(idx[static_cast<size_t>(prev)], cand);
        if (fz == 0) throw std::logic_error("pattern with coincident points");
        const Rat ratio = Rat(dz, fz);
        if (pos == 1 && prev == 0) {
          if (ratio <= 0) {
            ok = false;  // distinct indices, but coincident points are excluded upstream
          } else {
            new_lambda2 = ratio;
          }
        } else if (ratio != new_lambda2) {
          ok = false;
        }
      }
      if (!ok) continue;
      used[static_cast<size_t>(cand)] = 1;
      idx.push_back(cand);
      const Rat saved = lambda2;
      lambda2 = new_lambda2;
      run();
      lambda2 = saved;
      idx.pop_back();
      used[static_cast<size_t>(cand)] = 0;
      if (!complete) return;
    }
  }
};

}  // namespace

CongruentScan scaled_congruent_copies(const std::vector<LatticePoint>& Z,
                                      const Configuration& F, uint64_t node_budget) {
  F.validate();
  std::set<LatticePoint> members(Z.begin(), Z.end());
  if (members.size() != Z.size()) throw std::invalid_argument("duplicate point in Z");
  for (const auto& z : Z) {
    if (z.d() != F.d) throw std::invalid_argument("Z point of wrong dimension");
  }
  CongruentScan scan;
  if (Z.size() < static_cast<size_t>(F.k())) return scan;

  CongruentState st;
  st.Z = &Z;
  st.F = &F;
  st.budget = node_budget;
  st.used.assign(Z.size(), 0);
  st.zdist2.assign(Z.size(), std::vector<BigInt>(Z.size(), BigInt(0)));
  for (size_t a = 0; a < Z.size(); ++a) {
    for (size_t b = a + 1; b < Z.size(); ++b) {
      const LatticePoint diff = Z[a] - Z[b];
      const BigInt d2 = dot(diff, diff);
      st.zdist2[a][b] = d2;
      st.zdist2[b][a] = d2;
    }
  }
  st.out = &scan.copies;
  st.run();
  scan.complete = st.complete;
  scan.nodes = st.nodes;
  return scan;
}

PullbackReport pullback_verify(const std::vector<Point>& X, const Configuration& F,
                               const EmbedParams& params, uint64_t node_budget) {
  const PhiMap phi = phi_embed(X, F, params);
  PullbackReport report;

  const CongruentScan scan = scaled_congruent_copies(phi.image, F, node_budget);
  report.nodes = scan.nodes;

  std::set<std::vector<Point>> checked;
  for (const CongruentCopy& copy : scan.copies) {
    std::vector<Point> pre;
    pre.reserve(copy.idx.size());
    for (int zi : copy.idx) pre.push_back(phi.domain[static_cast<size_t>(zi)]);
    std::sort(pre.begin(), pre.end());
    if (!checked.insert(pre).second) continue;
    const KSetVerdict v = classify_kset(pre, F.k());
    if (v.kind == KSetKind::NotQuasiline) {
      report.status = VerdictKind::Refuted;
      report.witness = pre;
      return report;
    }
  }
  report.status = scan.complete ? VerdictKind::Proven : VerdictKind::Unknown;
  return report;
}

namespace {

BigInt isqrt_ceil(const BigInt& v) {
  if (v <= 0) return 0;
  BigInt r = boost::multiprecision::sqrt(v);  // floor
  if (r * r < v) ++r;
  return r;
}

}  // namespace

ChooseTResult choose_T(const std::vector<Point>& X, const Configuration& F, int n,
                       int max_doublings, uint64_t node_budget) {
  F.validate();
  BigInt max_norm2 = 0;
  for (const auto& f : F.points) max_norm2 = std::max(max_norm2, dot(f, f));
  const BigInt s = std::max(BigInt(1), isqrt_ceil(max_norm2));

  ChooseTResult res;
  res.params.n = n;
  res.params.T = 2 * (BigInt(F.k()) * s * n + 1);
  for (int attempt = 0; attempt <= max_doublings; ++attempt) {
    res.doublings = attempt;
    res.params.status = EmbedParams::Status::Unvalidated;
    bool injective = true;
    try {
      phi_embed(X, F, res.params);
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      if (what.find("phi collision") == std::string::npos) throw;
      injective = false;
    }
    if (injective) {
      res.params.status = EmbedParams::Status::InjectivityChecked;
      const PullbackReport report = pullback_verify(X, F, res.params, node_budget);
      if (report.status == VerdictKind::Proven) {
        res.params.status = EmbedParams::Status::PullbackChecked;
        res.ok = true;
        return res;
      }
      if (report.status == VerdictKind::Unknown) {
        // A bigger T cannot fix an exhausted scan budget.
        return res;
      }
    }
    res.params.T *= 2;
  }
  return res;
}

std::vector<LatticePoint> separate_translates(const std::vector<std::vector<LatticePoint>>& parts,
                                              const Configuration& F, uint64_t node_budget) {
  F.validate();
  if (parts.empty()) return {};
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty part");
    for (const auto& p : part) {
      if (p.d() != F.d) throw std::invalid_argument("part point of wrong dimension");
    }
  }
  const int k = F.k();

  std::vector<LatticePoint> offsets;
  std::vector<LatticePoint> placed;          // the union so far
  std::vector<int> part_of;                  // part index per placed point

  auto crossing_copy = [&]() -> bool {
    const CongruentScan scan = scaled_congruent_copies(placed, F, node_budget);
    if (!scan.complete) throw std::runtime_error("separate_translates: certification budget exhausted");
    for (const CongruentCopy& copy : scan.copies) {
      const int first = part_of[static_cast<size_t>(copy.idx[0])];
      for (int zi : copy.idx) {
        if (part_of[static_cast<size_t>(zi)] != first) return true;
      }
    }
    return false;
  };

  for (size_t r = 0; r < parts.size(); ++r) {
    if (r == 0) {
      LatticePoint zero;
      zero.x.assign(static_cast<size_t>(F.d), BigInt(0));
      offsets.push_back(zero);
      for (const auto& p : parts[0]) {
        placed.push_back(p);
        part_of.push_back(0);
      }
      continue;
    }
    // Gap along the first axis: clear the union's maximum by more than
    // k * diameter(union), then certify and double on failure.
    BigInt axis_max = placed[0].x[0];
    for (const auto& p : placed) axis_max = std::max(axis_max, p.x[0]);
    BigInt diam2 = 0;
    for (size_t a = 0; a < placed.size(); ++a) {
      for (size_t b = a + 1; b < placed.size(); ++b) {
        const LatticePoint diff = placed[a] - placed[b];
        diam2 = std::max(diam2, dot(diff, diff));
      }
    }
    const BigInt diam = isqrt_ceil(diam2);
    BigInt part_min = parts[r][0].x[0];
    for (const auto& p : parts[r]) part_min = std::min(part_min, p.x[0]);

    BigInt gap = BigInt(k) * diam + 1;
    const size_t placed_before = placed.size();
    for (int retry = 0;; ++retry) {
      if (retry > 64) throw std::runtime_error("separate_translates: gap search did not settle");
      LatticePoint offset;
      offset.x.assign(static_cast<size_t>(F.d), BigInt(0));
      offset.x[0] = axis_max + gap - part_min;
      placed.resize(placed_before);
      part_of.resize(placed_before);
      for (const auto& p : parts[r]) {
        placed.push_back(offset + p);
        part_of.push_back(static_cast<int>(r));
      }
      if (!crossing_copy()) {
        offsets.push_back(offset);
        break;
      }
      gap *= 2;
    }
  }
  return offsets;
}

}  // namespace hjkit
