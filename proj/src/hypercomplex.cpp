#include "foldhilb/hypercomplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "foldhilb/combinat.hpp"
#include "foldhilb/errors.hpp"

namespace foldhilb {

namespace {

int sum(const Lattice& v) { return std::accumulate(v.begin(), v.end(), 0); }

// lower corner, free mask and free sum: identifies the point set of a valid face
struct FaceKey {
  Lattice lo;
  std::vector<bool> free;
  int s;
  bool operator<(const FaceKey& o) const {
    return std::tie(lo, free, s) < std::tie(o.lo, o.free, o.s);
  }
};

Face canonical(Face f) {
  int fc = f.free_count(), s = f.free_sum();
  if (s != 0 && s != fc) return f;
  std::vector<bool> fixed(f.n, false);
  for (int i : f.S1) fixed[i] = true;
  for (int i : f.S2) fixed[i] = true;
  for (int i = 0; i < f.n; ++i)
    if (!fixed[i]) (s == 0 ? f.S1 : f.S2).push_back(i);
  std::sort(f.S1.begin(), f.S1.end());
  std::sort(f.S2.begin(), f.S2.end());
  return f;
}

FaceKey key_of(const Face& raw) {
  Face f = canonical(raw);
  FaceKey k{f.u, std::vector<bool>(f.n, true), f.free_sum()};
  for (int i : f.S1) k.free[i] = false;
  for (int i : f.S2) {
    k.free[i] = false;
    k.lo[i] += 1;
  }
  return k;
}

}  // namespace

// ---- cells and faces ----

int HyperCell::level() const { return l + sum(shift); }

std::vector<Lattice> HyperCell::vertices() const { return cell_face(*this).vertices(); }

bool HyperCell::operator<(const HyperCell& o) const {
  return std::tie(n, l, shift) < std::tie(o.n, o.l, o.shift);
}

int Face::free_count() const { return n - static_cast<int>(S1.size() + S2.size()); }
int Face::free_sum() const { return l - static_cast<int>(S2.size()); }

bool Face::valid() const {
  std::vector<int> seen(n, 0);
  for (int i : S1) {
    if (i < 0 || i >= n || seen[i]++) return false;
  }
  for (int i : S2) {
    if (i < 0 || i >= n || seen[i]++) return false;
  }
  int s = free_sum();
  return s >= 0 && s <= free_count();
}

int Face::dim() const {
  int f = free_count(), s = free_sum();
  return (s > 0 && s < f) ? f - 1 : 0;
}

std::vector<Lattice> Face::vertices() const {
  std::vector<int> freeidx;
  std::vector<bool> fixed(n, false);
  for (int i : S1) fixed[i] = true;
  for (int i : S2) fixed[i] = true;
  for (int i = 0; i < n; ++i)
    if (!fixed[i]) freeidx.push_back(i);
  Lattice base = u;
  for (int i : S2) base[i] += 1;
  std::vector<Lattice> out;
  for (const auto& pick : subsets_of_size(static_cast<int>(freeidx.size()), free_sum())) {
    Lattice v = base;
    for (int p : pick) v[freeidx[p]] += 1;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RatPoint Face::barycenter() const {
  auto vs = vertices();
  RatPoint c(n, 0);
  for (const auto& v : vs)
    for (int i = 0; i < n; ++i) c[i] += v[i];
  for (auto& x : c) x /= static_cast<long>(vs.size());
  return c;
}

bool Face::same_as(const Face& o) const {
  if (n != o.n) return false;
  auto a = key_of(*this), b = key_of(o);
  return !(a < b) && !(b < a);
}

Face cell_face(const HyperCell& c) { return Face{c.n, {}, {}, c.l, c.shift}; }

// ---- the complex ----

long long cell_count_formula(int n, int m) {
  long long total = 0;
  for (int l = 1; l <= std::min(n - 1, m - 1); ++l) total += binom(m + n - l - 2, n - 1);
  return total;
}

std::optional<Face> intersect_cells(const HyperCell& a, const HyperCell& b) {
  if (a.n != b.n || a.level() != b.level())
    throw HilbError(ErrorKind::AmbientMismatch, "cells live in different simplices");
  Face f{a.n, {}, {}, a.l, a.shift};
  for (int i = 0; i < a.n; ++i) {
    int d = a.shift[i] - b.shift[i];
    if (d == 1) {
      f.S1.push_back(i);
    } else if (d == -1) {
      f.S2.push_back(i);
    } else if (d != 0) {
      return std::nullopt;
    }
  }
  if (!f.valid()) return std::nullopt;
  return f;
}

namespace {

void fill_faces(ComplexKnm& K) {
  K.faces.clear();
  K.adjacency.clear();
  std::map<FaceKey, int> index;
  for (std::size_t i = 0; i < K.cells.size(); ++i)
    for (std::size_t j = i + 1; j < K.cells.size(); ++j) {
      auto f = intersect_cells(K.cells[i], K.cells[j]);
      if (!f) continue;
      auto [it, fresh] = index.emplace(key_of(*f), static_cast<int>(K.faces.size()));
      if (fresh) K.faces.push_back(canonical(*f));
      K.adjacency.push_back({static_cast<int>(i), static_cast<int>(j), it->second});
    }
}

}  // namespace

ComplexKnm build_complex(int n, int m) {
  if (n < 1 || m < 1) throw HilbError(ErrorKind::Validation, "need n >= 1 and m >= 1");
  ComplexKnm K;
  K.n = n;
  K.m = m;
  if (n == 1 || m == 1) return K;
  for (int l = 1; l <= std::min(n - 1, m - 1); ++l)
    for (auto& u : compositions(m - 1 - l, n, 0)) K.cells.push_back({n, l, std::move(u)});
  std::sort(K.cells.begin(), K.cells.end());
  fill_faces(K);
  return K;
}

std::vector<Face> faces_of(const HyperCell& c, int r) {
  std::vector<Face> out;
  std::set<FaceKey> seen;
  const int n = c.n;
  if (r < 0 || r > n - 1) return out;
  // each axis goes to S1, S2 or stays free
  std::vector<int> pick(n, 0);
  while (true) {
    Face f{n, {}, {}, c.l, c.shift};
    for (int i = 0; i < n; ++i) {
      if (pick[i] == 1) f.S1.push_back(i);
      if (pick[i] == 2) f.S2.push_back(i);
    }
    if (static_cast<int>(f.S1.size() + f.S2.size()) == r && f.valid() && f.dim() == n - 1 - r &&
        seen.insert(key_of(f)).second)
      out.push_back(f);
    int i = 0;
    while (i < n && pick[i] == 2) pick[i++] = 0;
    if (i == n) break;
    ++pick[i];
  }
  return out;
}

std::vector<int> cells_containing(const ComplexKnm& K, const RatPoint& p) {
  std::vector<int> out;
  for (std::size_t c = 0; c < K.cells.size(); ++c) {
    bool in = true;
    for (int i = 0; i < K.n && in; ++i)
      in = p[i] >= K.cells[c].shift[i] && p[i] <= K.cells[c].shift[i] + 1;
    if (in) out.push_back(static_cast<int>(c));
  }
  return out;
}

int cells_at_vertex(const ComplexKnm& K, const Lattice& v) {
  bool ok = static_cast<int>(v.size()) == K.n && sum(v) == K.m - 1 &&
            std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
  if (!ok) throw HilbError(ErrorKind::NotAVertex, "not a lattice point of (m-1) * simplex");
  RatPoint p(v.begin(), v.end());
  return static_cast<int>(cells_containing(K, p).size());
}

// ---- smoothable and singular faces ----

bool is_smoothable_face_closed(const Face& raw) {
  Face f = canonical(raw);
  return f.dim() <= 1 || f.free_sum() == f.free_count() - 1;
}

namespace {

bool smoothable_points(const std::vector<Lattice>& pts, int n, int m) {
  if (n <= 2) return true;
  // containment in Delta_{n-1,n} + u with |u| = m - n
  int lo_sum = 0, hi_sum = 0;
  bool box = m >= n;
  std::vector<int> constant;
  for (int i = 0; i < n && box; ++i) {
    int mn = pts[0][i], mx = pts[0][i];
    for (const auto& p : pts) {
      mn = std::min(mn, p[i]);
      mx = std::max(mx, p[i]);
    }
    int lo = std::max(0, mx - 1), hi = mn;
    if (lo > hi) box = false;
    lo_sum += lo;
    hi_sum += hi;
  }
  if (box && lo_sum <= m - n && m - n <= hi_sum) return true;
  for (int i = 0; i < n; ++i) {
    bool c = std::all_of(pts.begin(), pts.end(), [&](const Lattice& p) { return p[i] == pts[0][i]; });
    if (c) constant.push_back(i);
  }
  for (const auto& pick : subsets(static_cast<int>(constant.size()))) {
    if (pick.empty()) continue;
    std::vector<bool> drop(n, false);
    int a = 0;
    for (int p : pick) {
      drop[constant[p]] = true;
      a += pts[0][constant[p]];
    }
    std::vector<Lattice> proj;
    for (const auto& p : pts) {
      Lattice q;
      for (int i = 0; i < n; ++i)
        if (!drop[i]) q.push_back(p[i]);
      proj.push_back(std::move(q));
    }
    if (smoothable_points(proj, n - static_cast<int>(pick.size()), m - a)) return true;
  }
  return false;
}

}  // namespace

bool is_smoothable_face_recursive(const Face& f, int m) {
  return smoothable_points(f.vertices(), f.n, m);
}

bool is_smoothable_face(const Face& f, int m) {
  bool closed = is_smoothable_face_closed(f);
  if (closed != is_smoothable_face_recursive(f, m))
    throw HilbError(ErrorKind::Diagnostic, "smoothable face criteria disagree");
  return closed;
}

bool is_singular_face(const ComplexKnm& K, const Face& f) {
  if (cells_containing(K, f.barycenter()).size() >= 2) return true;
  return is_smoothable_face(f, K.m) && f.dim() <= K.n - 2;
}

// ---- volumes ----

long long hypersimplex_volume(int l, int n) {
  static std::map<std::pair<int, int>, long long> memo;
  if (l <= 0 || l >= n || n <= 2) return 1;
  auto key = std::make_pair(l, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // pull from the vertex e_1 + ... + e_l; only facets missing it contribute
  long long v = 0;
  for (int i = 0; i < n; ++i) {
    int vi = i < l ? 1 : 0;
    if (l < n - 1) v += vi * hypersimplex_volume(l, n - 1);          // lambda_i = 0
    if (l > 1) v += (1 - vi) * hypersimplex_volume(l - 1, n - 1);    // lambda_i = 1
  }
  memo[key] = v;
  return v;
}

bool volume_check(const ComplexKnm& K) {
  if (K.is_point()) return true;
  long long total = 0, expect = 1;
  for (const auto& c : K.cells) total += hypersimplex_volume(c.l, c.n);
  for (int i = 0; i < K.n - 1; ++i) expect *= K.m - 1;
  return total == expect;
}

// ---- slicing ----

ComplexKnm slice(const ComplexKnm& K, const std::vector<int>& S, const std::vector<int>& a) {
  if (S.size() != a.size()) throw HilbError(ErrorKind::Validation, "S and a differ in length");
  int asum = sum(a);
  if (asum > K.m - 1) throw HilbError(ErrorKind::Validation, "|a| exceeds m - 1");
  if (S.empty()) return K;
  int n2 = K.n - static_cast<int>(S.size()), m2 = K.m - asum;
  ComplexKnm out;
  out.n = n2;
  out.m = m2;
  if (n2 < 1) return out;
  std::vector<int> where(K.n, -1);
  for (std::size_t t = 0; t < S.size(); ++t) where[S[t]] = static_cast<int>(t);
  std::set<HyperCell> found;
  for (const auto& c : K.cells) {
    Face f{K.n, {}, {}, c.l, c.shift};
    bool hit = true;
    for (std::size_t t = 0; t < S.size() && hit; ++t) {
      int d = a[t] - c.shift[S[t]];
      if (d == 0) {
        f.S1.push_back(S[t]);
      } else if (d == 1) {
        f.S2.push_back(S[t]);
      } else {
        hit = false;
      }
    }
    if (!hit || !f.valid()) continue;
    int s = f.free_sum();
    if (s <= 0 || s >= n2) continue;  // lower-dimensional piece
    Lattice u;
    for (int i = 0; i < K.n; ++i)
      if (where[i] < 0) u.push_back(c.shift[i]);
    found.insert({n2, s, u});
  }
  out.cells.assign(found.begin(), found.end());
  fill_faces(out);
  return out;
}

bool same_cells(const ComplexKnm& a, const ComplexKnm& b) {
  return a.n == b.n && a.m == b.m && a.cells == b.cells;
}

}  // namespace foldhilb
