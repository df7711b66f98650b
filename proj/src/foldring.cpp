#include "foldhilb/foldring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "foldhilb/combinat.hpp"
#include "foldhilb/errors.hpp"

namespace foldhilb {

FoldRingCtx::FoldRingCtx(int n_) : n(n_) {
  if (n < 1) throw HilbError(ErrorKind::Validation, "n must be >= 1");
}

// ---- SeparatedPoly ----

SeparatedPoly SeparatedPoly::monomial(int n, int axis, int power, const GaussRational& c) {
  SeparatedPoly p(n);
  p.add_term(axis, power, c);
  p.trim();
  return p;
}

GaussRational SeparatedPoly::coeff(int axis, int power) const {
  if (power == 0) return constant;
  const Vec& b = branches.at(axis);
  if (power > static_cast<int>(b.size())) return GaussRational();
  return b[power - 1];
}

void SeparatedPoly::add_term(int axis, int power, const GaussRational& c) {
  if (power == 0) {
    constant += c;
    return;
  }
  Vec& b = branches.at(axis);
  if (static_cast<int>(b.size()) < power) b.resize(power);
  b[power - 1] += c;
}

void SeparatedPoly::trim() {
  for (auto& b : branches)
    while (!b.empty() && b.back().is_zero()) b.pop_back();
}

int SeparatedPoly::degree() const {
  int d = constant.is_zero() ? -1 : 0;
  for (const auto& b : branches)
    for (int s = static_cast<int>(b.size()); s >= 1; --s)
      if (!b[s - 1].is_zero()) {
        d = std::max(d, s);
        break;
      }
  return d;
}

bool SeparatedPoly::is_zero() const { return degree() < 0; }

Vec SeparatedPoly::restriction(int axis) const {
  Vec r(1, constant);
  const Vec& b = branches.at(axis);
  r.insert(r.end(), b.begin(), b.end());
  return poly_trim(r);
}

bool SeparatedPoly::operator==(const SeparatedPoly& o) const {
  SeparatedPoly d = *this - o;
  return d.is_zero();
}

SeparatedPoly operator+(const SeparatedPoly& a, const SeparatedPoly& b) {
  SeparatedPoly r = a;
  r.branches.resize(std::max(a.n(), b.n()));
  r.constant += b.constant;
  for (int i = 0; i < b.n(); ++i)
    for (std::size_t s = 0; s < b.branches[i].size(); ++s) r.add_term(i, s + 1, b.branches[i][s]);
  r.trim();
  return r;
}

SeparatedPoly operator*(const GaussRational& c, const SeparatedPoly& a) {
  SeparatedPoly r = a;
  r.constant *= c;
  for (auto& b : r.branches)
    for (auto& x : b) x *= c;
  r.trim();
  return r;
}

SeparatedPoly operator-(const SeparatedPoly& a, const SeparatedPoly& b) {
  return a + GaussRational(-1) * b;
}

// (c + sum p_i)(d + sum q_i) = cd + sum (c q_i + d p_i + p_i q_i)
SeparatedPoly operator*(const SeparatedPoly& a, const SeparatedPoly& b) {
  int n = std::max(a.n(), b.n());
  SeparatedPoly r(n);
  r.constant = a.constant * b.constant;
  for (int i = 0; i < n; ++i) {
    const Vec empty;
    const Vec& p = i < a.n() ? a.branches[i] : empty;
    const Vec& q = i < b.n() ? b.branches[i] : empty;
    for (std::size_t s = 0; s < q.size(); ++s) r.add_term(i, s + 1, a.constant * q[s]);
    for (std::size_t s = 0; s < p.size(); ++s) r.add_term(i, s + 1, b.constant * p[s]);
    for (std::size_t s = 0; s < p.size(); ++s)
      for (std::size_t t = 0; t < q.size(); ++t)
        if (!p[s].is_zero() && !q[t].is_zero()) r.add_term(i, s + t + 2, p[s] * q[t]);
  }
  r.trim();
  return r;
}

std::string to_string(const SeparatedPoly& p) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const GaussRational& c, const std::string& mono) {
    if (c.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    if (mono.empty()) {
      os << c;
    } else if (c == GaussRational(1)) {
      os << mono;
    } else {
      os << c << "*" << mono;
    }
  };
  term(p.constant, "");
  for (int i = 0; i < p.n(); ++i)
    for (std::size_t s = 0; s < p.branches[i].size(); ++s) {
      std::string mono = "x" + std::to_string(i + 1);
      if (s > 0) mono += "^" + std::to_string(s + 1);
      term(p.branches[i][s], mono);
    }
  if (first) os << "0";
  return os.str();
}

// ---- univariate polynomials over Q(i) ----

Vec poly_trim(Vec p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

static Vec poly_mod(Vec a, const Vec& b) {
  a = poly_trim(std::move(a));
  GaussRational lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    GaussRational f = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    a = poly_trim(std::move(a));
  }
  return a;
}

Vec poly_gcd(Vec a, Vec b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Vec r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    GaussRational inv = a.back().inverse();
    for (auto& x : a) x *= inv;
  }
  return a;
}

// ---- truncated span of an ideal ----

namespace {

// J + m^{D+1} inside R / m^{D+1}, with coordinates 1, x_i^s (1 <= s <= D)
class TruncatedSpan {
 public:
  TruncatedSpan(int n, int D, const std::vector<SeparatedPoly>& gens) : n_(n), D_(D) {
    ExactMatrix M(0, dim_space());
    for (const auto& g : gens) {
      M.append_row(to_vec(g));
      for (int i = 0; i < n_; ++i) {
        SeparatedPoly xs = g;
        for (int s = 1; s <= D_; ++s) {
          xs = SeparatedPoly::monomial(n_, i, 1) * xs;
          Vec v = to_vec(xs);
          if (std::all_of(v.begin(), v.end(), [](const GaussRational& x) { return x.is_zero(); }))
            break;
          M.append_row(v);
        }
      }
    }
    r_ = rref(M);
  }

  int dim_space() const { return 1 + n_ * D_; }
  int dim() const { return static_cast<int>(r_.pivots.size()); }
  int index(int axis, int power) const { return power == 0 ? 0 : 1 + axis * D_ + (power - 1); }
  int D() const { return D_; }

  Vec to_vec(const SeparatedPoly& p) const {
    Vec v(dim_space());
    v[0] = p.constant;
    for (int i = 0; i < std::min(n_, p.n()); ++i)
      for (int s = 1; s <= std::min<int>(D_, p.branches[i].size()); ++s)
        v[index(i, s)] = p.branches[i][s - 1];
    return v;
  }

  bool contains(const Vec& v) const { return in_row_space(r_, v); }
  bool contains_power(int axis, int power) const {
    if (power > D_) return true;  // valid once m^{D+1} lies in J
    Vec v(dim_space());
    v[index(axis, power)] = 1;
    return contains(v);
  }
  const Rref& basis() const { return r_; }
  Vec residual(const Vec& v) const { return reduce_by(r_, v); }

 private:
  int n_, D_;
  Rref r_;
};

int max_degree(const std::vector<SeparatedPoly>& gens) {
  int d = 0;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return std::max(d, 1);
}

bool branch_meets(const std::vector<SeparatedPoly>& gens, int axis) {
  for (const auto& g : gens)
    if (!g.restriction(axis).empty()) return true;
  return false;
}

}  // namespace

std::optional<int> colength(const FoldRingCtx& ctx, const std::vector<SeparatedPoly>& gens) {
  // each branch needs a generator not vanishing on it, otherwise C[x_i] survives in R/J
  for (int i = 0; i < ctx.n; ++i)
    if (!branch_meets(gens, i)) return std::nullopt;
  // then x_i^{d+1} lies in J locally for every i, so m^{d+1} is inside J
  int d = max_degree(gens);
  TruncatedSpan W(ctx.n, d, gens);
  return W.dim_space() - W.dim();
}

// ---- PunctualIdeal ----

int PunctualIdeal::colength() const {
  return std::accumulate(u.begin(), u.end(), 0) + 1 - l;
}

std::vector<SeparatedPoly> PunctualIdeal::generators() const {
  std::vector<SeparatedPoly> g;
  for (int r = 0; r < l; ++r) {
    SeparatedPoly f(n);
    for (int i = 0; i < n; ++i)
      if (!A.at(r, i).is_zero()) f.add_term(i, u[i], A.at(r, i));
    f.trim();
    g.push_back(std::move(f));
  }
  for (int i : forced) g.push_back(SeparatedPoly::monomial(n, i, u[i] + 1));
  return g;
}

PunctualIdeal make_punctual(int n, std::vector<int> u, ExactMatrix A, std::vector<int> forced) {
  auto bad = [](const std::string& w) { return HilbError(ErrorKind::Validation, w); };
  if (n < 1) throw bad("n must be >= 1");
  if (static_cast<int>(u.size()) != n) throw bad("u must have length n");
  for (int x : u)
    if (x < 1) throw bad("u entries must be >= 1");
  int l = static_cast<int>(A.rows());
  if (static_cast<int>(A.cols()) != n) throw bad("A must have n columns");
  if (l < 1 || l > n) throw bad("need 1 <= l <= n");
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
  std::vector<bool> is_forced(n, false);
  for (int i : forced) {
    if (i < 0 || i >= n) throw bad("forced axis out of range");
    is_forced[i] = true;
  }
  if (static_cast<int>(forced.size()) == n) throw bad("forced set cannot be all axes");
  if (static_cast<int>(rank(A)) != l) throw bad("A must have full row rank");
  for (int i = 0; i < n; ++i) {
    bool zero = true;
    for (int r = 0; r < l; ++r) zero = zero && A.at(r, i).is_zero();
    if (is_forced[i] && !zero) throw bad("forced column of A must vanish");
    if (!is_forced[i] && zero) throw bad("A has a zero column outside the forced set");
  }
  PunctualIdeal J;
  J.n = n;
  J.l = l;
  J.u = std::move(u);
  J.A = std::move(A);
  J.forced = std::move(forced);
  return J;
}

PunctualIdeal normalize_punctual(const FoldRingCtx& ctx, const std::vector<SeparatedPoly>& gens) {
  const int n = ctx.n;
  for (const auto& g : gens)
    if (g.n() > n) throw HilbError(ErrorKind::Validation, "generator has more branches than n");
  for (const auto& g : gens)
    if (!g.constant.is_zero())
      throw HilbError(ErrorKind::NotOriginSupported, "a generator does not vanish at the origin");
  for (int i = 0; i < n; ++i) {
    if (!branch_meets(gens, i))
      throw HilbError(ErrorKind::NotFiniteColength,
                      "axis " + std::to_string(i + 1) + " is contained in V(J)");
    Vec h;
    for (const auto& g : gens) h = poly_gcd(h, g.restriction(i));
    std::size_t z = 0;
    while (z < h.size() && h[z].is_zero()) ++z;
    if (h.size() - z > 1)
      throw HilbError(ErrorKind::NotOriginSupported,
                      "axis " + std::to_string(i + 1) + " carries a root away from 0");
  }

  int d = max_degree(gens);
  TruncatedSpan W(n, d, gens);

  std::vector<int> e(n, d + 1);
  for (int i = 0; i < n; ++i)
    for (int s = 1; s <= d; ++s)
      if (W.contains_power(i, s)) {
        e[i] = s;
        break;
      }

  // J = span{x_i^s : s >= e_i} + N with N inside span{x_i^{e_i - 1}}
  ExactMatrix low(0, n);
  for (std::size_t r = 0; r < W.basis().m.rows(); ++r) {
    Vec v = W.basis().m.row(r);
    Vec top(n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
      for (int s = 1; s < e[i] && s <= d; ++s) {
        const auto& c = v[W.index(i, s)];
        if (c.is_zero()) continue;
        if (s != e[i] - 1)
          throw HilbError(ErrorKind::Diagnostic, "ideal is not of separated top-degree form");
        top[i] = c;
        nonzero = true;
      }
    if (!v[0].is_zero()) throw HilbError(ErrorKind::Diagnostic, "unit in the truncated ideal");
    if (nonzero) low.append_row(top);
  }
  Rref N = rref(low);

  std::vector<bool> involved(n, false);
  for (std::size_t r = 0; r < N.m.rows(); ++r)
    for (int i = 0; i < n; ++i)
      if (!N.m.at(r, i).is_zero()) involved[i] = true;

  std::vector<int> u(n);
  ExactMatrix A = N.m;
  for (int i = 0; i < n; ++i) {
    if (involved[i]) {
      u[i] = e[i] - 1;
    } else {
      u[i] = e[i];
      Vec unit(n);
      unit[i] = 1;
      A.append_row(unit);
    }
  }
  PunctualIdeal J = make_punctual(n, u, rref(A).m, {});
  auto len = colength(ctx, gens);
  if (!len || *len != J.colength())
    throw HilbError(ErrorKind::Diagnostic, "canonical form changed the colength");
  return J;
}

PunctualIdeal normalize(const PunctualIdeal& J) {
  return normalize_punctual(FoldRingCtx(J.n), J.generators());
}

PunctualIdeal unforced(const PunctualIdeal& J) {
  if (J.forced.empty()) return J;
  std::vector<int> u = J.u;
  ExactMatrix A = J.A;
  for (int i : J.forced) {
    u[i] += 1;
    Vec unit(J.n);
    unit[i] = 1;
    A.append_row(unit);
  }
  return make_punctual(J.n, u, rref(A).m, {});
}

IdealShape shape_of(const PunctualIdeal& J) {
  PunctualIdeal c = normalize(J);
  Rref r = rref(c.A);
  IdealShape s;
  s.e.resize(c.n);
  s.involved.assign(c.n, false);
  int units = 0;
  for (int i = 0; i < c.n; ++i) {
    Vec unit(c.n);
    unit[i] = 1;
    bool is_unit = in_row_space(r, unit);
    s.involved[i] = !is_unit;
    s.e[i] = c.u[i] + (is_unit ? 0 : 1);
    units += is_unit;
  }
  s.dim_n = c.l - units;
  return s;
}

// ---- syzygies ----

std::vector<Syzygy> syzygies(const PunctualIdeal& J) {
  std::vector<Syzygy> out;
  for (int i = 0; i < J.n; ++i)
    for (int j = 0; j < J.l; ++j)
      for (int k = j + 1; k < J.l; ++k) out.push_back({i, j, k, J.A.at(k, i), -J.A.at(j, i)});
  return out;
}

SeparatedPoly apply_syzygy(const PunctualIdeal& J, const Syzygy& s) {
  auto g = J.generators();
  SeparatedPoly xi = SeparatedPoly::monomial(J.n, s.i, 1);
  return s.cj * (xi * g[s.j]) + s.ck * (xi * g[s.k]);
}

// ---- R/J ----

QuotientRing::QuotientRing(const PunctualIdeal& J) : J_(unforced(J)) {
  Rref r = rref(J_.A);
  J_.A = r.m;
  pivot_row_.assign(J_.n, -1);
  for (std::size_t row = 0; row < r.pivots.size(); ++row) pivot_row_[r.pivots[row]] = row;
  basis_.push_back({0, 0});
  for (int i = 0; i < J_.n; ++i)
    for (int s = 1; s < J_.u[i]; ++s) basis_.push_back({i, s});
  for (int i = 0; i < J_.n; ++i)
    if (pivot_row_[i] < 0) basis_.push_back({i, J_.u[i]});
}

Vec QuotientRing::reduce(const SeparatedPoly& p) const {
  Vec out(dim());
  auto pos = [&](int axis, int power) {
    for (int b = 0; b < dim(); ++b)
      if (basis_[b].second == power && (power == 0 || basis_[b].first == axis)) return b;
    return -1;
  };
  out[0] = p.constant;
  for (int i = 0; i < std::min(J_.n, p.n()); ++i)
    for (int s = 1; s <= static_cast<int>(p.branches[i].size()); ++s) {
      const auto& c = p.branches[i][s - 1];
      if (c.is_zero() || s > J_.u[i]) continue;  // x_i^{u_i+1} lies in J
      if (s < J_.u[i] || pivot_row_[i] < 0) {
        out[pos(i, s)] += c;
        continue;
      }
      // x_p^{u_p} = - sum over free columns of the pivot row
      int row = pivot_row_[i];
      for (int j = 0; j < J_.n; ++j) {
        if (j == i || J_.A.at(row, j).is_zero()) continue;
        out[pos(j, J_.u[j])] -= c * J_.A.at(row, j);
      }
    }
  return out;
}

Vec QuotientRing::mul_x(int axis, int b) const {
  auto [ax, pw] = basis_[b];
  if (pw != 0 && ax != axis) return Vec(dim());
  return reduce(SeparatedPoly::monomial(J_.n, axis, pw + 1));
}

int tangent_dim(const PunctualIdeal& Jin, int m) {
  PunctualIdeal J = unforced(Jin);
  J.A = rref(J.A).m;
  if (J.colength() != m)
    throw HilbError(ErrorKind::ColengthMismatch,
                    "ideal has colength " + std::to_string(J.colength()) + ", not " + std::to_string(m));
  QuotientRing Q(J);
  const int l = J.l;
  std::vector<ExactMatrix> X;
  for (int i = 0; i < J.n; ++i) {
    ExactMatrix Xi(m, m);
    for (int b = 0; b < m; ++b) {
      Vec c = Q.mul_x(i, b);
      for (int a = 0; a < m; ++a) Xi.at(a, b) = c[a];
    }
    X.push_back(std::move(Xi));
  }
  ExactMatrix C(0, l * m);
  for (const auto& s : syzygies(J)) {
    if (s.cj.is_zero() && s.ck.is_zero()) continue;
    const ExactMatrix& Xi = X[s.i];
    for (int a = 0; a < m; ++a) {
      Vec row(l * m);
      bool any = false;
      for (int b = 0; b < m; ++b) {
        if (Xi.at(a, b).is_zero()) continue;
        row[s.j * m + b] += s.cj * Xi.at(a, b);
        row[s.k * m + b] += s.ck * Xi.at(a, b);
        any = true;
      }
      if (any) C.append_row(row);
    }
  }
  return l * m - static_cast<int>(C.rows() ? rank(C) : 0);
}

int SchemePoint::length() const {
  int len = punctual ? punctual->colength() : 0;
  for (const auto& p : smooth) len += p.multiplicity;
  return len;
}

int tangent_dim_scheme(const SchemePoint& Z) {
  int t = 0;
  if (Z.punctual) t += tangent_dim(*Z.punctual, Z.punctual->colength());
  for (const auto& p : Z.smooth) {
    if (p.value.is_zero())
      throw HilbError(ErrorKind::Validation, "smooth point coordinate must be nonzero");
    if (p.multiplicity < 1) throw HilbError(ErrorKind::Validation, "multiplicity must be >= 1");
    t += p.multiplicity;
  }
  return t;
}

int component_dim(int n, int l, int m) {
  if (l == 1) return m;  // smoothable component
  // Gr(l, n) times the symmetric power carrying the remaining m - (n + 1 - l) points
  return l * (n - l) + (m - (n + 1 - l));
}

// ---- component membership ----

std::optional<PunctualIdeal> represent_in(const PunctualIdeal& J, int l, const std::vector<int>& u) {
  const int n = J.n;
  if (static_cast<int>(u.size()) != n) return std::nullopt;
  if (std::accumulate(u.begin(), u.end(), 0) + 1 - l != J.colength()) return std::nullopt;
  auto gens = J.generators();
  int D = std::max(max_degree(gens), *std::max_element(u.begin(), u.end()) + 1);
  TruncatedSpan W(n, D, gens);
  for (int i = 0; i < n; ++i)
    if (!W.contains_power(i, u[i] + 1)) return std::nullopt;
  // kernel of the residuals of x_i^{u_i} modulo J is J intersected with Lambda_u
  ExactMatrix R(W.dim_space(), n);
  for (int i = 0; i < n; ++i) {
    Vec v(W.dim_space());
    v[W.index(i, u[i])] = 1;
    Vec res = W.residual(v);
    for (int a = 0; a < W.dim_space(); ++a) R.at(a, i) = res[a];
  }
  auto ker = kernel_basis(R);
  if (static_cast<int>(ker.size()) != l) return std::nullopt;
  ExactMatrix A = rref(ExactMatrix::from_rows(ker, n)).m;
  std::vector<int> forced;
  for (int i = 0; i < n; ++i) {
    bool zero = true;
    for (int r = 0; r < l; ++r) zero = zero && A.at(r, i).is_zero();
    if (zero) forced.push_back(i);
  }
  if (static_cast<int>(forced.size()) == n) return std::nullopt;
  return make_punctual(n, u, A, forced);
}

std::vector<Membership> containing_grassmannians(const PunctualIdeal& J, int lmin, int lmax) {
  std::vector<Membership> out;
  int m = J.colength();
  for (int l = std::max(1, lmin); l <= std::min(lmax, J.n); ++l)
    for (const auto& u : compositions(m + l - 1, J.n, 1))
      if (auto rep = represent_in(J, l, u)) out.push_back({l, u, *rep});
  return out;
}

// ---- singularity ----

SingularVerdict is_singular_point(const PunctualIdeal& Jin, int m) {
  if (Jin.colength() != m)
    throw HilbError(ErrorKind::ColengthMismatch, "ideal colength differs from m");
  PunctualIdeal J = normalize(Jin);
  const int n = J.n;
  IdealShape sh = shape_of(J);
  SingularVerdict v;

  // (a) generator shape
  bool mono_high = false, has_linear = false;
  for (int i = 0; i < n; ++i) {
    if (sh.involved[i]) continue;
    if (sh.e[i] >= 2) mono_high = true;
    if (sh.e[i] == 1) has_linear = true;
  }
  if (n == 1) {
    v.syntactic = false;
  } else if (m == 1) {
    v.syntactic = true;
    v.condition = "reduced origin of a curve with embedding dimension n";
  } else if (mono_high) {
    v.syntactic = true;
    v.condition = "monomial generator exponent ≥ 2";
  } else if (sh.dim_n == 1 && has_linear) {
    v.syntactic = true;
    v.condition = "generated by one form and axis variables";
  }

  // (b) tangent space against the global components through J: the smoothable one
  // and one non-smoothable component for every Sigma(m, l, u) with l >= 2 containing J
  v.tangent = tangent_dim(J, m);
  int higher = 0, lone_l = 1;
  for (const auto& mb : containing_grassmannians(J, 2, n - 1)) {
    ++higher;
    lone_l = mb.l;
  }
  v.components = higher + (smoothable_by_form(J) ? 1 : 0);
  if (v.components == 0) throw HilbError(ErrorKind::Diagnostic, "ideal lies on no component");
  if (v.components == 1) v.component_dim = component_dim(n, lone_l, m);
  v.tangent_based = v.components >= 2 || v.tangent > v.component_dim;
  v.singular = v.syntactic;
  v.agree = v.syntactic == v.tangent_based;
  return v;
}

bool smoothable_by_form(const PunctualIdeal& J) { return shape_of(J).dim_n <= 1; }

}  // namespace foldhilb
