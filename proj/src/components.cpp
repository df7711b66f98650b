#include "foldhilb/components.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "foldhilb/combinat.hpp"
#include "foldhilb/errors.hpp"
#include "foldhilb/momentmap.hpp"

namespace foldhilb {

bool GrassComponent::operator<(const GrassComponent& o) const {
  return std::tie(n, m, l, u) < std::tie(o.n, o.m, o.l, o.u);
}

HyperCell cell_of(const GrassComponent& c) {
  HyperCell h{c.n, c.n - c.l, c.u};
  for (auto& x : h.shift) x -= 1;
  return h;
}

GrassComponent component_of(const HyperCell& c, int m) {
  GrassComponent g{c.n, m, c.n - c.l, c.shift};
  for (auto& x : g.u) x += 1;
  return g;
}

std::vector<GrassComponent> punctual_components(int n, int m) {
  if (n < 2 || m < 2) throw HilbError(ErrorKind::Validation, "need n >= 2 and m >= 2");
  std::vector<GrassComponent> out;
  for (int l = std::max(1, n + 1 - m); l <= n - 1; ++l)
    for (auto& u : compositions(m + l - 1, n, 1)) out.push_back({n, m, l, std::move(u)});
  std::sort(out.begin(), out.end());
  return out;
}

PunctualCount punctual_count(int n, int m) {
  PunctualCount c;
  for (int l = std::max(1, n + 1 - m); l <= n - 1; ++l) c.direct += binom(l + m - 2, n - 1);
  mpq_class b(static_cast<long>(binom(m + n - 2, n - 1)));
  c.closed_form = mpq_class(m - 1, n) * b;
  if (n < m) c.closed_form += mpq_class(n - m, n) * b;
  c.closed_form.canonicalize();
  c.match = c.closed_form == mpq_class(static_cast<long>(c.direct));
  return c;
}

std::optional<IntersectionLabel> intersect_components(const GrassComponent& a, const GrassComponent& b) {
  if (a.n != b.n || a.m != b.m)
    throw HilbError(ErrorKind::AmbientMismatch, "components of different Hilbert schemes");
  IntersectionLabel lab;
  for (int i = 0; i < a.n; ++i) {
    int d = a.u[i] - b.u[i];
    if (d == 1) lab.k1.push_back(i);
    else if (d == -1) lab.km1.push_back(i);
    else if (d == 0) lab.k0.push_back(i);
    else return std::nullopt;
  }
  if (lab.k0.empty() && (lab.k1.empty() || lab.km1.empty())) return std::nullopt;  // u - v = +-1
  lab.gr_l = a.l - static_cast<int>(lab.k1.size());
  lab.gr_n = static_cast<int>(lab.k0.size());
  if (lab.gr_l < 0 || lab.gr_l > lab.gr_n) return std::nullopt;
  return lab;
}

PunctualIdeal intersection_ideal(const GrassComponent& a, const GrassComponent& b, const ExactMatrix& F) {
  auto lab = intersect_components(a, b);
  if (!lab) throw HilbError(ErrorKind::Validation, "components do not meet");
  if (static_cast<int>(F.rows()) != lab->gr_l || static_cast<int>(F.cols()) != lab->gr_n)
    throw HilbError(ErrorKind::Validation, "coefficient matrix has the wrong shape");
  const int n = a.n;
  std::vector<SeparatedPoly> gens;
  for (std::size_t r = 0; r < F.rows(); ++r) {
    SeparatedPoly f(n);
    for (int c = 0; c < lab->gr_n; ++c) {
      int i = lab->k0[c];
      f.add_term(i, a.u[i], F.at(r, c));
    }
    f.trim();
    gens.push_back(f);
  }
  for (int i : lab->k1) gens.push_back(SeparatedPoly::monomial(n, i, a.u[i]));
  for (int i : lab->km1) gens.push_back(SeparatedPoly::monomial(n, i, a.u[i] + 1));
  // x_i * f already gives these when column i of F is nonzero; with r = 0 they must be explicit
  for (int i : lab->k0) gens.push_back(SeparatedPoly::monomial(n, i, a.u[i] + 1));
  return normalize_punctual(FoldRingCtx(n), gens);
}

std::vector<GlobalComponent> global_components(int n, int m) {
  if (n < 1 || m < 1) throw HilbError(ErrorKind::Validation, "need n >= 1 and m >= 1");
  std::vector<GlobalComponent> out;
  for (auto& u : compositions(m, n, 0)) out.push_back({true, 0, std::move(u)});
  for (int mp = 2; mp <= std::min(m, n - 1); ++mp)
    for (auto& u : compositions(m - mp, n, 0)) out.push_back({false, mp, std::move(u)});
  return out;
}

PunctualIdeal random_member(const GrassComponent& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    ExactMatrix A(c.l, c.n);
    for (int r = 0; r < c.l; ++r)
      for (int i = 0; i < c.n; ++i) A.at(r, i) = coeff(rng);
    if (static_cast<int>(rank(A)) != c.l) continue;
    Rref R = rref(A);
    bool ok = true;
    for (int i = 0; i < c.n && ok; ++i) {
      Vec e(c.n);
      e[i] = 1;
      bool zero_col = true;
      for (int r = 0; r < c.l; ++r) zero_col = zero_col && A.at(r, i).is_zero();
      ok = !zero_col && (c.l == c.n || !in_row_space(R, e));
    }
    if (ok) return make_punctual(c.n, c.u, R.m);
  }
  throw HilbError(ErrorKind::Diagnostic, "no random member found");
}

long long global_count_formula(int n, int m) {
  long long c = binom(m + n - 1, m);
  for (int mp = 2; mp <= std::min(m, n - 1); ++mp) c += binom(m - mp + n - 1, m - mp);
  return c;
}

long long curve_count(int n, int m) {
  if (n < 2 || m < 1) throw HilbError(ErrorKind::Validation, "need n >= 2 and m >= 1");
  return std::min(n - 1, m);
}

MultiSingCount multi_sing_count(int m, const std::vector<int>& ns) {
  const int k = static_cast<int>(ns.size());
  if (k < 1) throw HilbError(ErrorKind::Validation, "need at least one singular point");
  for (int x : ns)
    if (x < 2) throw HilbError(ErrorKind::Validation, "every n_i must be >= 2");
  MultiSingCount r;
  // brute force over the box
  std::vector<int> v(k, 0);
  while (true) {
    int total = std::accumulate(v.begin(), v.end(), 0);
    bool ok = total <= m;
    for (int i = 0; i < k && ok; ++i) ok = v[i] != 1 && v[i] <= std::min(m, ns[i] - 1);
    if (ok) r.vectors.push_back(v);
    int i = 0;
    while (i < k && v[i] == m) v[i++] = 0;
    if (i == k) break;
    ++v[i];
  }
  std::sort(r.vectors.begin(), r.vectors.end());
  r.brute = static_cast<long long>(r.vectors.size());
  // m_i >= 2 exactly on J; shift by 2 and bound by n_i - 3
  for (const auto& J : subsets(k)) {
    const int j = static_cast<int>(J.size());
    for (const auto& Ip : subsets(j)) {
      long long top = m - j, top_printed = m - 2 + j;
      for (int p : Ip) {
        top -= ns[J[p]] - 2;
        top_printed -= ns[J[p]] - 1;
      }
      long long sign = Ip.size() % 2 ? -1 : 1;
      r.inclusion_exclusion += sign * binom(top, j);
      r.printed_formula += sign * binom(top_printed, j);
    }
  }
  r.match = r.brute == r.inclusion_exclusion;
  return r;
}

GluingGraph build_gluing_graph(int n, int m) {
  GluingGraph g;
  g.n = n;
  g.m = m;
  g.nodes = punctual_components(n, m);
  for (std::size_t a = 0; a < g.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < g.nodes.size(); ++b)
      if (auto lab = intersect_components(g.nodes[a], g.nodes[b]))
        g.edges.push_back({static_cast<int>(a), static_cast<int>(b), *lab});
  return g;
}

PunctualIdeal phi_shift(const PunctualIdeal& J, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != J.n) throw HilbError(ErrorKind::Validation, "shift has wrong length");
  for (int x : J.u)
    if (x != 1) throw HilbError(ErrorKind::Validation, "phi_shift needs an ideal with u = 1");
  std::vector<int> u(J.n);
  for (int i = 0; i < J.n; ++i) {
    if (s[i] < 0) throw HilbError(ErrorKind::Validation, "shift must be nonnegative");
    u[i] = s[i] + 1;
  }
  return make_punctual(J.n, u, J.A, J.forced);
}

StratumDescriptor stratum_descriptor(int n, int m, int mprime, int ulevel) {
  if (mprime < 2 || mprime > std::min(m, n - 1) || ulevel < 0 || ulevel > m - mprime)
    throw HilbError(ErrorKind::Validation, "need 2 <= m' <= min(m, n-1) and 0 <= u <= m - m'");
  StratumDescriptor d;
  d.sym_degree = m - mprime - ulevel;
  d.graph_l = n + 1 - mprime;
  d.graph_m = mprime + ulevel;
  d.components = binom(ulevel + n - 1, n - 1);
  std::ostringstream os;
  os << "Sym^" << d.sym_degree << " x G_{" << d.graph_l << "," << n << "}^" << d.graph_m;
  d.label = os.str();
  return d;
}

int normalization_fiber_degree(const PunctualIdeal& J, int mprime) {
  int m = J.colength();
  ComplexKnm K = build_complex(J.n, m);
  MomentPoint p = moment_global(J, m);
  int count = 0;
  for (int c : cells_containing(K, p))
    if (K.cells[c].l == mprime - 1) ++count;
  return count;
}

}  // namespace foldhilb
