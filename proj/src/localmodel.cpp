#include "foldhilb/localmodel.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "foldhilb/combinat.hpp"
#include "foldhilb/errors.hpp"
#include "foldhilb/exactcore.hpp"
#include "foldhilb/foldring.hpp"

namespace foldhilb {

namespace {

constexpr std::uint64_t kPointBudget = 10'000'000;

std::string name(const char* base, std::initializer_list<int> idx) {
  std::string s = base;
  for (int i : idx) s += "_" + std::to_string(i + 1);
  return s;
}

Term canonical_term(Term t) {
  std::sort(t.vars.begin(), t.vars.end());
  return t;
}

bool term_less(const Term& a, const Term& b) { return a.vars < b.vars; }

void check_nu(int n, int k, const std::vector<int>& u) {
  if (n < 2 || k < 1 || k > n) throw HilbError(ErrorKind::Validation, "need n >= 2 and 1 <= k <= n");
  if (static_cast<int>(u.size()) != n) throw HilbError(ErrorKind::Validation, "u must have n entries");
  for (int i = 0; i < n; ++i) {
    if (i < k && u[i] < 2) throw HilbError(ErrorKind::Validation, "u_i must be >= 2 for i <= k");
    if (i >= k && u[i] != 1) throw HilbError(ErrorKind::Validation, "u_i must be 1 for i > k");
  }
}

int local_m(const std::vector<int>& u) {
  return std::accumulate(u.begin(), u.end(), 0) - static_cast<int>(u.size()) + 1;
}

// index of a_{i,j} in the k >= 2 reduced ring
struct ReducedIndex {
  int n, k;
  int b(int j) const { return j; }
  int a(int i, int j) const {
    // rows i, columns j in [k] minus i
    int before = 0;
    for (int r = 0; r < i; ++r) before += r < k ? k - 1 : k;
    int col = j - (i < k && j > i ? 1 : 0);
    return k + before + col;
  }
};

PolyIdealGens reduced_ring(int n, int k) {
  PolyIdealGens g;
  if (k == 1) {
    g.variables.push_back("A_1");
    g.variables.push_back("a_1_1");
    for (int i = 1; i < n; ++i) g.variables.push_back(name("a", {i}));
    return g;
  }
  for (int j = 0; j < k; ++j) g.variables.push_back(name("b", {j}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) g.variables.push_back(name("a", {i, j}));
  return g;
}

// variables a_{i,j} with j in cols and i != j, row-major
PolyIdealGens alpha_ring(int n, const std::vector<int>& cols, std::map<std::pair<int, int>, int>& idx) {
  PolyIdealGens g;
  for (int i = 0; i < n; ++i)
    for (int j : cols)
      if (i != j) {
        idx[{i, j}] = g.var_count();
        g.variables.push_back(name("a", {i, j}));
      }
  return g;
}

PrimeFamily linear_prime(PrimeKind kind, const PolyIdealGens& ring, const std::vector<int>& vars) {
  PrimeFamily p;
  p.kind = kind;
  p.ideal.variables = ring.variables;
  for (int v : vars) p.ideal.add_monomial({v});
  return p;
}

std::string set_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

// ---- finite field evaluation ----

struct FieldEval {
  int q;
  // generators flattened as lists of (sign, vars)
  std::vector<std::vector<Term>> gens;

  FieldEval(const PolyIdealGens& I, int q_) : q(q_), gens(I.generators.begin(), I.generators.end()) {}

  bool vanishes(const int* x) const {
    for (const auto& g : gens) {
      int s = 0;
      for (const auto& t : g) {
        int p = 1;
        for (int v : t.vars) p = p * x[v] % q;
        s += t.sign * p;
      }
      if (((s % q) + q) % q != 0) return false;
    }
    return true;
  }
};

std::uint64_t point_count(int V, int q) {
  std::uint64_t total = 1;
  for (int i = 0; i < V; ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > kPointBudget) throw HilbError(ErrorKind::Budget, "q^V exceeds 10^7 points");
  }
  return total;
}

void check_field(int q) {
  if (q < 2) throw HilbError(ErrorKind::Validation, "field size must be a prime");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw HilbError(ErrorKind::Validation, "field size must be a prime");
}

// Visit every point of F_q^V. Each thread owns an accumulator; merge is called once per thread.
template <class Acc, class Visit, class Merge>
void sweep(int V, int q, Exec exec, Acc& acc, Visit visit, Merge merge) {
  const std::uint64_t total = point_count(V, q);
  if (exec == Exec::Serial) {
    std::vector<int> x(V, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      visit(x.data(), idx, acc);
      for (int i = 0; i < V && ++x[i] == q; ++i) x[i] = 0;
    }
    return;
  }
#pragma omp parallel
  {
    const std::uint64_t nt = static_cast<std::uint64_t>(omp_get_num_threads());
    const std::uint64_t tid = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t begin = total * tid / nt, end = total * (tid + 1) / nt;
    Acc local{};
    std::vector<int> x(V, 0);
    std::uint64_t r = begin;
    for (int i = 0; i < V; ++i) {
      x[i] = static_cast<int>(r % q);
      r /= q;
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      visit(x.data(), idx, local);
      for (int i = 0; i < V && ++x[i] == q; ++i) x[i] = 0;
    }
#pragma omp critical(foldhilb_sweep_merge)
    merge(acc, local);
  }
}

struct FfAcc {
  std::uint64_t points = 0, zeros = 0, bad = 0;
  std::uint64_t first_bad = UINT64_MAX;
  std::unordered_set<std::uint64_t> masks;
};

}  // namespace

// ---- PolyIdealGens ----

int PolyIdealGens::index_of(const std::string& s) const {
  auto it = std::find(variables.begin(), variables.end(), s);
  return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

void PolyIdealGens::add(Generator g) {
  if (g.empty() || g.size() > 2) throw HilbError(ErrorKind::Validation, "generator must be a monomial or binomial");
  for (auto& t : g) {
    if (t.sign != 1 && t.sign != -1) throw HilbError(ErrorKind::Validation, "term signs must be +-1");
    if (t.vars.empty()) throw HilbError(ErrorKind::Validation, "constant terms are not allowed");
    for (int v : t.vars)
      if (v < 0 || v >= var_count()) throw HilbError(ErrorKind::Validation, "undeclared variable in generator");
    t = canonical_term(t);
  }
  if (g.size() == 2) {
    if (g[0].sign == g[1].sign) throw HilbError(ErrorKind::Validation, "binomials must be differences");
    if (g[0].vars == g[1].vars) throw HilbError(ErrorKind::Validation, "binomial with equal terms");
    if (term_less(g[1], g[0])) std::swap(g[0], g[1]);
  }
  // normalize the leading sign
  if (g[0].sign < 0)
    for (auto& t : g) t.sign = -t.sign;
  if (std::find(generators.begin(), generators.end(), g) == generators.end()) generators.push_back(std::move(g));
}

void PolyIdealGens::add_monomial(std::vector<int> vars) { add({Term{1, std::move(vars)}}); }

void PolyIdealGens::add_binomial(std::vector<int> plus, std::vector<int> minus) {
  add({Term{1, std::move(plus)}, Term{-1, std::move(minus)}});
}

std::string PolyIdealGens::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (g) os << ", ";
    for (std::size_t t = 0; t < generators[g].size(); ++t) {
      const auto& term = generators[g][t];
      if (t) os << (term.sign < 0 ? " - " : " + ");
      else if (term.sign < 0) os << "-";
      for (std::size_t v = 0; v < term.vars.size(); ++v) os << (v ? "*" : "") << variables[term.vars[v]];
    }
  }
  os << ">";
  return os.str();
}

const char* prime_kind_name(PrimeKind k) {
  switch (k) {
    case PrimeKind::Q: return "Q";
    case PrimeKind::J: return "J";
    case PrimeKind::K1: return "K1";
    case PrimeKind::Punctual: return "punctual";
    case PrimeKind::Technical: return "technical";
  }
  return "?";
}

// ---- J_k ----

PolyIdealGens deformation_ideal(int n, int k, const std::vector<int>& u) {
  check_nu(n, k, u);
  PolyIdealGens g;
  for (int i = 0; i < n; ++i) g.variables.push_back(name("A", {i}));
  // alpha(i, j, l) with l 1-based as in the generators
  std::vector<std::vector<int>> base(n, std::vector<int>(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      base[i][j] = g.var_count();
      for (int l = 1; l <= u[j] - 1; ++l) g.variables.push_back(name("a", {i, j, l - 1}));
    }
  auto A = [&](int i) { return i; };
  auto al = [&](int i, int j, int l) { return base[i][j] + l - 1; };

  for (int j = k; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j) g.add_monomial({A(i), A(j)});
  for (int j = k; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j)
        for (int r = 0; r < k; ++r)
          for (int s = 1; s <= u[r] - 1; ++s) g.add_monomial({A(i), al(j, r, s)});
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j) g.add_binomial({al(i, j, u[j] - 1), al(j, j, 1)}, {A(i)});
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j) g.add_monomial({al(i, j, u[j] - 1), A(j)});
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j)
        for (int l = 1; l <= u[j] - 2; ++l) g.add_binomial({al(i, j, u[j] - 1), al(j, j, l + 1)}, {al(i, j, l)});
  // the last block ranges over the levels of alpha_{j,r,.}, i.e. l in [u_r - 1]
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j)
        for (int r = 0; r < k; ++r)
          if (r != j)
            for (int l = 1; l <= u[r] - 1; ++l) g.add_monomial({al(i, j, u[j] - 1), al(j, r, l)});
  return g;
}

std::vector<int> deformation_block_sizes(int n, int k, const std::vector<int>& u) {
  check_nu(n, k, u);
  int lev = 0;  // sum over r in [k] of (u_r - 1)
  for (int r = 0; r < k; ++r) lev += u[r] - 1;
  std::vector<int> b(6, 0);
  b[0] = (n - k) * (n - 1);
  b[1] = (n - k) * (n - 1) * lev;
  b[2] = k * (n - 1);
  b[3] = k * (n - 1);
  for (int j = 0; j < k; ++j) {
    b[4] += (n - 1) * (u[j] - 2);
    b[5] += (n - 1) * (lev - (u[j] - 1));
  }
  return b;
}

// ---- reduced ideals and their primes ----

PolyIdealGens reduced_ideal(int n, int k) {
  if (n < 2 || k < 1 || k > n) throw HilbError(ErrorKind::Validation, "need n >= 2 and 1 <= k <= n");
  PolyIdealGens g = reduced_ring(n, k);
  if (k == 1) {
    // A_1 = 0, a_11 = 1, a_i = i for i >= 2 (0-based i)
    for (int i = 1; i < n; ++i) g.add_monomial({0, i + 1});
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.add_monomial({i + 1, j + 1, 1});
    return g;
  }
  ReducedIndex ix{n, k};
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < k; ++r)
      if (r != j)
        for (int i = 0; i < n; ++i)
          if (i != j) g.add_monomial({ix.a(i, j), ix.a(j, r)});
  for (int j = 0; j < k; ++j)
    for (int r = j + 1; r < k; ++r)
      for (int i = 0; i < n; ++i)
        if (i != j && i != r) g.add_binomial({ix.a(i, j), ix.b(j)}, {ix.a(i, r), ix.b(r)});
  // third block read as i != r, i != j
  for (int j = k; j < n; ++j)
    for (int r = 0; r < k; ++r)
      for (int i = 0; i < n; ++i)
        if (i != r && i != j) g.add_monomial({ix.a(i, r), ix.a(j, r), ix.b(r)});
  return g;
}

std::vector<PrimeFamily> primary_components(int n, int k) {
  PolyIdealGens ring = reduced_ring(n, k);
  if (n < 2 || k < 1 || k > n) throw HilbError(ErrorKind::Validation, "need n >= 2 and 1 <= k <= n");
  std::vector<PrimeFamily> out;
  if (k == 1) {
    // for n = 2 the prime <A_1, a_11> contains <A_1> and is dropped
    if (n >= 3) {
      auto p = linear_prime(PrimeKind::K1, ring, {0, 1});
      p.index = 0;
      p.label = "<A_1,a_1_1>";
      out.push_back(std::move(p));
    }
    std::vector<int> rest;
    for (int i = 1; i < n; ++i) rest.push_back(i + 1);
    auto p1 = linear_prime(PrimeKind::K1, ring, rest);
    p1.index = 1;
    p1.label = "<a_2..a_n>";
    out.push_back(std::move(p1));
    for (int i = 1; i < n; ++i) {
      std::vector<int> v{0};
      for (int j = 1; j < n; ++j)
        if (j != i) v.push_back(j + 1);
      auto p = linear_prime(PrimeKind::K1, ring, v);
      p.index = i + 1;
      p.label = "<A_1,a_j : j != " + std::to_string(i + 1) + ">";
      out.push_back(std::move(p));
    }
    return out;
  }
  ReducedIndex ix{n, k};
  for (int i = 0; i < n; ++i) {
    PrimeFamily p;
    p.kind = PrimeKind::Q;
    p.index = i;
    p.label = "Q_" + std::to_string(i + 1);
    p.ideal.variables = ring.variables;
    for (int r = 0; r < k; ++r)
      for (int s = r + 1; s < k; ++s)
        if (r != i && s != i) p.ideal.add_binomial({ix.a(i, r), ix.b(r)}, {ix.a(i, s), ix.b(s)});
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < k; ++s)
        if (r != i && r != s) p.ideal.add_monomial({ix.a(r, s)});
    out.push_back(std::move(p));
  }
  const int top = std::min(k, n - 2);
  for (int sz = 1; sz <= top; ++sz)
    for (const auto& S : subsets_of_size(k, sz)) {
      std::vector<bool> in(n, false);
      for (int j : S) in[j] = true;
      PrimeFamily p;
      p.kind = PrimeKind::J;
      p.set = S;
      p.label = "J_" + set_label(S);
      p.ideal.variables = ring.variables;
      for (int j : S) p.ideal.add_monomial({ix.b(j)});
      for (int j : S)
        for (int r = 0; r < k; ++r)
          if (r != j) p.ideal.add_monomial({ix.a(j, r)});
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < k; ++s)
          if (!in[r] && !in[s] && r != s) p.ideal.add_monomial({ix.a(r, s)});
      out.push_back(std::move(p));
    }
  return out;
}

long long local_component_count_formula(int n, int k) {
  if (n < 2 || k < 1 || k > n) throw HilbError(ErrorKind::Validation, "need n >= 2 and 1 <= k <= n");
  if (k <= n - 2) return n + (1LL << k) - 1;
  if (k == n - 1) return n + (1LL << (n - 1)) - 2;
  return (1LL << k) - 2;
}

long long local_component_count(int n, int k) {
  long long f = local_component_count_formula(n, k);
  long long c = static_cast<long long>(primary_components(n, k).size());
  if (f != c)
    throw HilbError(ErrorKind::Diagnostic, "local component formula " + std::to_string(f) + " != family count " +
                                               std::to_string(c));
  return c;
}

PunctualLocalRing punctual_local_ring(int n, int k, const std::vector<int>& u) {
  check_nu(n, k, u);
  const int m = local_m(u);
  std::vector<int> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  std::map<std::pair<int, int>, int> idx;
  PunctualLocalRing R;
  R.ideal = alpha_ring(n, cols, idx);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j)
        for (int r = 0; r < k; ++r)
          if (r != j) R.ideal.add_monomial({idx[{i, j}], idx[{j, r}]});
  for (const auto& T : subsets(k)) {
    if (static_cast<int>(T.size()) == k) continue;
    if (k == n && T.empty()) continue;
    std::vector<bool> inT(k, false);
    for (int t : T) inT[t] = true;
    PrimeFamily p;
    p.kind = PrimeKind::Punctual;
    p.set = cols;
    p.tset = T;
    p.label = "J_{[" + std::to_string(k) + "]," + set_label(T) + "}";
    p.ideal.variables = R.ideal.variables;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && !inT[i] && !inT[j]) p.ideal.add_monomial({idx[{i, j}]});
    for (int j : T)
      for (int i = 0; i < n; ++i)
        if (i != j) p.ideal.add_monomial({idx[{i, j}]});
    std::vector<int> v = u;
    for (int i = 0; i < k; ++i)
      if (!inT[i]) --v[i];
    p.punctual = GrassComponent{n, m, n - k + static_cast<int>(T.size()), v};
    R.primes.push_back(std::move(p));
  }
  return R;
}

PunctualLocalRing technical_ideal(int n, const std::vector<int>& S) {
  if (n < 2 || S.empty()) throw HilbError(ErrorKind::Validation, "need n >= 2 and S nonempty");
  for (std::size_t a = 0; a < S.size(); ++a)
    if (S[a] < 0 || S[a] >= n || (a && S[a] <= S[a - 1]))
      throw HilbError(ErrorKind::Validation, "S must be a sorted subset of [n]");
  std::map<std::pair<int, int>, int> idx;
  PunctualLocalRing R;
  R.ideal = alpha_ring(n, S, idx);
  for (int j : S)
    for (int r : S)
      if (r != j)
        for (int i = 0; i < n; ++i)
          if (i != j) R.ideal.add_monomial({idx[{i, j}], idx[{j, r}]});
  const bool full = static_cast<int>(S.size()) == n;
  const int s = static_cast<int>(S.size());
  for (const auto& Tl : subsets(s)) {
    if (static_cast<int>(Tl.size()) == s || (full && Tl.empty())) continue;
    std::vector<int> T;
    std::vector<bool> inT(n, false);
    for (int t : Tl) {
      T.push_back(S[t]);
      inT[S[t]] = true;
    }
    PrimeFamily p;
    p.kind = PrimeKind::Technical;
    p.set = S;
    p.tset = T;
    p.label = "J_{" + set_label(S) + "," + set_label(T) + "}";
    p.ideal.variables = R.ideal.variables;
    for (int r : S)
      for (int c : S)
        if (r != c && !inT[r] && !inT[c]) p.ideal.add_monomial({idx[{r, c}]});
    for (int j : T)
      for (int i = 0; i < n; ++i)
        if (i != j) p.ideal.add_monomial({idx[{i, j}]});
    R.primes.push_back(std::move(p));
  }
  return R;
}

// ---- finite field oracle ----

FfReport verify_decomposition_ff_report(const PolyIdealGens& gens, const std::vector<PrimeFamily>& primes, int q,
                                        Exec exec) {
  check_field(q);
  if (primes.size() > 64) throw HilbError(ErrorKind::Validation, "at most 64 primes");
  for (const auto& p : primes)
    if (p.ideal.variables != gens.variables)
      throw HilbError(ErrorKind::AmbientMismatch, "prime " + p.label + " lives in another ring");
  const FieldEval I(gens, q);
  std::vector<FieldEval> P;
  for (const auto& p : primes) P.emplace_back(p.ideal, q);

  FfAcc acc;
  auto visit = [&](const int* x, std::uint64_t idx, FfAcc& a) {
    ++a.points;
    std::uint64_t mask = 0;
    for (std::size_t t = 0; t < P.size(); ++t)
      if (P[t].vanishes(x)) mask |= std::uint64_t{1} << t;
    bool zero = I.vanishes(x);
    if (zero) ++a.zeros;
    if (zero != (mask != 0)) {
      ++a.bad;
      a.first_bad = std::min(a.first_bad, idx);
    }
    a.masks.insert(mask);
  };
  auto merge = [](FfAcc& into, FfAcc& from) {
    into.points += from.points;
    into.zeros += from.zeros;
    into.bad += from.bad;
    into.first_bad = std::min(into.first_bad, from.first_bad);
    into.masks.insert(from.masks.begin(), from.masks.end());
  };
  sweep(gens.var_count(), q, exec, acc, visit, merge);

  FfReport r;
  r.points = acc.points;
  r.zeros = acc.zeros;
  r.union_equal = acc.bad == 0;
  r.bad_point = acc.bad ? acc.first_bad : 0;
  r.incomparable = true;
  for (std::size_t a = 0; a < P.size(); ++a)
    for (std::size_t b = 0; b < P.size(); ++b) {
      if (a == b) continue;
      // a point of V(P_b) off V(P_a) shows P_a is not inside P_b
      bool found = false;
      for (auto msk : acc.masks)
        if ((msk >> b & 1) && !(msk >> a & 1)) {
          found = true;
          break;
        }
      if (!found) r.incomparable = false;
    }
  return r;
}

bool verify_decomposition_ff(const PolyIdealGens& gens, const std::vector<PrimeFamily>& primes, int q, Exec exec) {
  return verify_decomposition_ff_report(gens, primes, q, exec).union_equal;
}

bool deformation_graph_check(int n, int k, const std::vector<int>& u, int q, Exec exec) {
  check_field(q);
  const PolyIdealGens Jk = deformation_ideal(n, k, u);
  const PolyIdealGens red = reduced_ideal(n, k);
  const FieldEval EJ(Jk, q), ER(red, q);
  std::vector<std::vector<int>> base(n, std::vector<int>(k));
  int pos = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      base[i][j] = pos;
      pos += u[j] - 1;
    }
  auto al = [&](int i, int j, int l) { return base[i][j] + l - 1; };
  // where each reduced variable is read from
  std::vector<int> proj(red.var_count());
  if (k == 1) {
    proj[0] = 0;
    proj[1] = al(0, 0, 1);
    for (int i = 1; i < n; ++i) proj[i + 1] = al(i, 0, u[0] - 1);
  } else {
    ReducedIndex ix{n, k};
    for (int j = 0; j < k; ++j) proj[ix.b(j)] = al(j, j, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) proj[ix.a(i, j)] = al(i, j, u[j] - 1);
  }
  // eliminated coordinates: target = product of two coordinates
  struct Rel {
    int target, x, y;
  };
  std::vector<Rel> rels;
  for (int i = 0; i < n; ++i) {
    int j = i == 0 ? 1 : 0;
    if (j >= k) continue;  // A_1 survives when k = 1
    rels.push_back({i, al(i, j, u[j] - 1), al(j, j, 1)});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j)
        for (int l = 1; l <= u[j] - 2; ++l) rels.push_back({al(i, j, l), al(i, j, u[j] - 1), al(j, j, l + 1)});

  std::uint64_t bad = 0;
  auto visit = [&](const int* x, std::uint64_t, std::uint64_t& b) {
    bool on_graph = true;
    for (const auto& r : rels)
      if (x[r.target] != x[r.x] * x[r.y] % q) {
        on_graph = false;
        break;
      }
    bool rhs = false;
    if (on_graph) {
      std::vector<int> y(proj.size());
      for (std::size_t v = 0; v < proj.size(); ++v) y[v] = x[proj[v]];
      rhs = ER.vanishes(y.data());
    }
    if (EJ.vanishes(x) != rhs) ++b;
  };
  auto merge = [](std::uint64_t& into, std::uint64_t& from) { into += from; };
  sweep(Jk.var_count(), q, exec, bad, visit, merge);
  return bad == 0;
}

// ---- polytopes ----

namespace {

mpq_class dot(const std::vector<mpq_class>& a, const std::vector<int>& v) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += a[i] * v[i];
  return s;
}

int affine_dim(const std::vector<LabeledVertex>& vs) {
  if (vs.empty()) return -1;
  const std::size_t d = vs[0].coords.size();
  ExactMatrix M(0, d);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Vec r(d);
    for (std::size_t c = 0; c < d; ++c) r[c] = vs[i].coords[c] - vs[0].coords[c];
    M.append_row(r);
  }
  return static_cast<int>(rank(M));
}

void finish_polytope(PolytopePk& P) {
  P.dim = affine_dim(P.vertices);
  P.facets = facets_by_hyperplanes(P.vertices, P.dim);
}

}  // namespace

std::vector<std::vector<int>> facets_by_hyperplanes(const std::vector<LabeledVertex>& vs, int dim) {
  const int N = static_cast<int>(vs.size());
  if (N == 0) return {};
  const std::size_t d = vs[0].coords.size();
  if (static_cast<int>(d) != dim) throw HilbError(ErrorKind::Validation, "polytope must be full dimensional");
  std::set<std::vector<int>> found;
  for (const auto& pick : subsets_of_size(N, dim)) {
    ExactMatrix M(0, d);
    for (int t = 1; t < dim; ++t) {
      Vec r(d);
      for (std::size_t c = 0; c < d; ++c) r[c] = vs[pick[t]].coords[c] - vs[pick[0]].coords[c];
      M.append_row(r);
    }
    if (dim == 1) M = ExactMatrix(0, d);
    auto ker = kernel_basis(M);
    if (ker.size() != 1) continue;  // not affinely independent
    std::vector<mpq_class> nrm(d);
    for (std::size_t c = 0; c < d; ++c) nrm[c] = ker[0][c].re;
    mpq_class c0 = dot(nrm, vs[pick[0]].coords);
    int below = 0, above = 0;
    std::vector<int> on;
    for (int v = 0; v < N; ++v) {
      int s = sgn(dot(nrm, vs[v].coords) - c0);
      if (s < 0) ++below;
      else if (s > 0) ++above;
      else on.push_back(v);
    }
    if (below && above) continue;
    found.insert(on);
  }
  return {found.begin(), found.end()};
}

PolytopePk toric_polytope(int k) {
  if (k < 2) throw HilbError(ErrorKind::Validation, "P_k needs k >= 2");
  PolytopePk P;
  P.k = k;
  auto e = [&](std::initializer_list<std::pair<int, int>> parts) {
    std::vector<int> v(k, 0);
    for (auto [i, c] : parts) v[i] += c;
    return v;
  };
  P.vertices.push_back({"a_1", e({})});
  P.vertices.push_back({"b_2", e({{0, 1}})});
  P.vertices.push_back({"a_2", e({{1, 1}})});
  P.vertices.push_back({"b_1", e({{0, 1}, {1, 1}})});
  for (int j = 2; j < k; ++j) {
    P.vertices.push_back({name("a", {j}), e({{j, 1}})});
    P.vertices.push_back({name("b", {j}), e({{0, 1}, {1, 1}, {j, -1}})});
  }
  P.dim = affine_dim(P.vertices);
  const std::vector<std::vector<int>> V0 = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  std::set<std::vector<int>> facets;
  for (const auto& v0 : V0)
    for (std::uint64_t split = 0; split < (std::uint64_t{1} << (k - 2)); ++split) {
      std::vector<int> f = v0;
      for (int j = 2; j < k; ++j) f.push_back(4 + 2 * (j - 2) + static_cast<int>(split >> (j - 2) & 1));
      std::sort(f.begin(), f.end());
      facets.insert(f);
    }
  P.facets.assign(facets.begin(), facets.end());
  return P;
}

bool is_face(const PolytopePk& P, const std::vector<int>& sub) {
  if (sub.empty()) return true;
  std::vector<int> s = sub;
  std::sort(s.begin(), s.end());
  std::vector<int> meet;
  bool any = false;
  for (const auto& f : P.facets) {
    if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
    if (!any) meet = f;
    else {
      std::vector<int> t;
      std::set_intersection(meet.begin(), meet.end(), f.begin(), f.end(), std::back_inserter(t));
      meet = t;
    }
    any = true;
  }
  if (!any) return static_cast<int>(s.size()) == static_cast<int>(P.vertices.size());
  return meet == s;
}

mpq_class normalized_volume(const PolytopePk& P) {
  const int d = P.dim;
  std::vector<mpq_class> c(d, 0);
  for (const auto& v : P.vertices)
    for (int i = 0; i < d; ++i) c[i] += v.coords[i];
  for (auto& x : c) x /= static_cast<long>(P.vertices.size());
  mpq_class vol = 0;
  for (const auto& f : P.facets) {
    if (static_cast<int>(f.size()) != d) throw HilbError(ErrorKind::Diagnostic, "facet is not a simplex");
    ExactMatrix M(d, d);
    for (int r = 0; r < d; ++r)
      for (int col = 0; col < d; ++col) M.at(r, col) = GaussRational(P.vertices[f[r]].coords[col] - c[col]);
    vol += abs(det(M).re);
  }
  return vol;
}

std::vector<Simplex> unimodular_triangulation(const PolytopePk& P) {
  if (P.k < 2) throw HilbError(ErrorKind::Validation, "P_k needs k >= 2");
  std::vector<Simplex> tri = {{0, 1, 2}, {1, 2, 3}};
  for (int j = 2; j < P.k; ++j) {
    const int plus = 4 + 2 * (j - 2), minus = plus + 1;
    std::vector<Simplex> next;
    for (const auto& s : tri) {
      Simplex a = s, b = s;
      a.push_back(plus);
      b.push_back(minus);
      next.push_back(a);
      next.push_back(b);
    }
    tri = std::move(next);
  }
  return tri;
}

long long simplex_det(const PolytopePk& P, const Simplex& s) {
  const int d = static_cast<int>(s.size()) - 1;
  ExactMatrix M(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      M.at(r, c) = GaussRational(P.vertices[s[r + 1]].coords[c] - P.vertices[s[0]].coords[c]);
  mpq_class v = det(M).re;
  return v.get_num().get_si();
}

PolytopePk prime_polytope(int n, int k, int i) {
  if (k < 2 || k > n || i < 0 || i >= n) throw HilbError(ErrorKind::Validation, "need 2 <= k <= n and i in [n]");
  PolytopePk P;
  P.k = k;
  if (i >= k) {
    P = toric_polytope(k);
    for (auto& v : P.vertices) {
      int j = std::stoi(v.label.substr(2)) - 1;
      v.label = v.label[0] == 'a' ? name("a", {i, j}) : name("b", {j});
    }
    return P;
  }
  std::vector<int> others;
  for (int j = 0; j < k; ++j)
    if (j != i) others.push_back(j);
  std::vector<LabeledVertex> base;
  if (k == 2) {
    base.push_back({name("a", {i, others[0]}), {0}});
    base.push_back({name("b", {others[0]}), {1}});
  } else {
    auto B = toric_polytope(k - 1);
    for (auto& v : B.vertices) {
      int t = std::stoi(v.label.substr(2)) - 1;
      int j = others[t];
      v.label = v.label[0] == 'a' ? name("a", {i, j}) : name("b", {j});
    }
    base = B.vertices;
  }
  for (auto& v : base) {
    v.coords.push_back(0);
    P.vertices.push_back(v);
  }
  std::vector<int> apex(k, 0);
  apex[k - 1] = 1;
  P.vertices.push_back({name("b", {i}), apex});
  finish_polytope(P);
  return P;
}

// ---- singularity complexes ----

SingComplex build_sing_complex(int n, int k, bool cone) {
  SingComplex S;
  S.n = n;
  S.k = k;
  S.ring = reduced_ideal(n, k);
  S.primes = primary_components(n, k);
  S.cone = cone || k == 1;  // the k = 1 recipe already carries the origin
  for (std::size_t p = 0; p < S.primes.size(); ++p) {
    const auto& pr = S.primes[p];
    SingCell c;
    c.prime = static_cast<int>(p);
    if (pr.kind == PrimeKind::Q) {
      c.kind = CellKind::Polytope;
      c.polytope = prime_polytope(n, k, pr.index);
      c.label = "P_{" + std::to_string(pr.index + 1) + "," + std::to_string(k) + "}";
      for (const auto& v : c.polytope->vertices) c.vertices.push_back(v.label);
    } else {
      // linear primes: the surviving coordinates
      std::vector<bool> killed(S.ring.var_count(), false);
      for (const auto& g : pr.ideal.generators) killed[g[0].vars[0]] = true;
      for (int v = 0; v < S.ring.var_count(); ++v)
        if (!killed[v]) c.vertices.push_back(S.ring.variables[v]);
      if (pr.kind == PrimeKind::J) c.label = "Delta_" + set_label(pr.set);
      else c.label = pr.index == 0 ? "Delta" : "M_" + std::to_string(pr.index);
    }
    if (S.cone) c.vertices.push_back("0");
    std::sort(c.vertices.begin(), c.vertices.end());
    S.cells.push_back(std::move(c));
  }
  return S;
}

std::vector<GluingCheck> check_sing_complex(const SingComplex& S, int q) {
  check_field(q);
  const int V = S.ring.var_count();
  const int P = static_cast<int>(S.primes.size());
  std::vector<FieldEval> E;
  for (const auto& p : S.primes) E.emplace_back(p.ideal, q);
  // label sets as variable masks
  std::vector<std::uint64_t> lab(P, 0);
  for (int a = 0; a < P; ++a)
    for (const auto& s : S.cells[a].vertices)
      if (s != "0") lab[a] |= std::uint64_t{1} << S.ring.index_of(s);

  std::vector<GluingCheck> out;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < P; ++a)
    for (int b = a; b < P; ++b) pairs.push_back({a, b});

  // per pair: mismatch count; for a == b also the union of supports seen on V(P_a)
  struct Acc {
    std::vector<std::uint64_t> bad, seen;
  };
  Acc acc{std::vector<std::uint64_t>(pairs.size(), 0), std::vector<std::uint64_t>(pairs.size(), 0)};
  auto visit = [&](const int* x, std::uint64_t, Acc& A) {
    if (A.bad.empty()) {
      A.bad.assign(pairs.size(), 0);
      A.seen.assign(pairs.size(), 0);
    }
    std::uint64_t supp = 0, vmask = 0;
    for (int v = 0; v < V; ++v)
      if (x[v]) supp |= std::uint64_t{1} << v;
    for (int a = 0; a < P; ++a)
      if (E[a].vanishes(x)) vmask |= std::uint64_t{1} << a;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      auto [a, b] = pairs[t];
      bool both = (vmask >> a & 1) && (vmask >> b & 1);
      if (a == b) {
        if (both) {
          A.seen[t] |= supp;
          if (supp & ~lab[a]) ++A.bad[t];
        }
      } else {
        bool inside = (supp & ~(lab[a] & lab[b])) == 0;
        if (both != inside) ++A.bad[t];
      }
    }
  };
  auto merge = [](Acc& into, Acc& from) {
    if (from.bad.empty()) return;
    for (std::size_t t = 0; t < into.bad.size(); ++t) {
      into.bad[t] += from.bad[t];
      into.seen[t] |= from.seen[t];
    }
  };
  sweep(V, q, Exec::Parallel, acc, visit, merge);

  auto face_in = [&](const SingCell& c, const std::vector<std::string>& shared) {
    if (c.kind == CellKind::Simplex) return true;
    std::vector<int> idx;
    for (const auto& s : shared) {
      if (s == "0") continue;
      for (std::size_t v = 0; v < c.polytope->vertices.size(); ++v)
        if (c.polytope->vertices[v].label == s) idx.push_back(static_cast<int>(v));
    }
    return is_face(*c.polytope, idx);
  };
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    auto [a, b] = pairs[t];
    GluingCheck g;
    g.a = a;
    g.b = b;
    std::set_intersection(S.cells[a].vertices.begin(), S.cells[a].vertices.end(), S.cells[b].vertices.begin(),
                          S.cells[b].vertices.end(), std::back_inserter(g.shared));
    g.face_a = face_in(S.cells[a], g.shared);
    g.face_b = face_in(S.cells[b], g.shared);
    g.variety_match = acc.bad[t] == 0 && (a != b || acc.seen[t] == lab[a]);
    out.push_back(std::move(g));
  }
  return out;
}

// ---- translation ----

LocalComponentLabel translate_component(const PrimeFamily& p, int n, int k, const std::vector<int>& u) {
  check_nu(n, k, u);
  const int m = local_m(u);
  LocalComponentLabel L;
  auto ones = std::vector<int>(n, 1);
  int free_vars = 0;  // variables of S_k that the reduced ideal never mentions
  for (int i = 0; i < k; ++i) free_vars += u[i] - 2;
  const int V = reduced_ideal(n, k).var_count();
  auto linear_dim = [&]() { return V - static_cast<int>(p.ideal.generators.size()); };

  if (p.kind == PrimeKind::K1) {
    if (k != 1) throw HilbError(ErrorKind::Validation, "k = 1 prime used with k != 1");
    if (p.index == 0) {
      L.hilb = {{0, m - 2}};
      L.sigma = GrassComponent{n, 2, n - 1, ones};
      std::vector<int> v = u;
      v[0] -= 1;
      L.punctual = GrassComponent{n, m, n - 1, v};
    } else if (p.index == 1) {
      L.smoothable = true;
      L.hilb = {{0, m}};
    } else {
      L.smoothable = true;
      L.hilb = {{0, m - 1}, {p.index - 1, 1}};
    }
    L.local_dimension = linear_dim() + free_vars;
  } else if (p.kind == PrimeKind::Q) {
    L.smoothable = true;
    for (int i = 0; i < n; ++i) L.hilb.push_back({i, i == p.index ? u[i] : u[i] - 1});
    L.local_dimension = prime_polytope(n, k, p.index).dim + 1 + free_vars;
  } else if (p.kind == PrimeKind::J) {
    const int s = static_cast<int>(p.set.size());
    std::vector<bool> in(n, false);
    for (int j : p.set) in[j] = true;
    for (int i = 0; i < k; ++i) L.hilb.push_back({i, in[i] ? u[i] - 2 : u[i] - 1});
    L.sigma = GrassComponent{n, s + 1, n - s, ones};
    std::vector<int> v = u;
    for (int j : p.set) v[j] -= 1;
    L.punctual = GrassComponent{n, m, n - s, v};
    L.local_dimension = linear_dim() + free_vars;
  } else {
    throw HilbError(ErrorKind::Validation, "only primes of the reduced ideal translate");
  }
  L.hilb.erase(std::remove_if(L.hilb.begin(), L.hilb.end(), [](auto& h) { return h.second == 0; }), L.hilb.end());
  for (auto [i, len] : L.hilb) L.dimension += len;
  if (L.sigma) L.dimension += component_dim(n, L.sigma->l, L.sigma->m);
  std::ostringstream os;
  for (std::size_t t = 0; t < L.hilb.size(); ++t)
    os << (t ? " x " : "") << "Hilb^" << L.hilb[t].second << "(L" << L.hilb[t].first + 1 << ")";
  if (L.sigma) os << (L.hilb.empty() ? "" : " x ") << "Sigma(" << L.sigma->m << "," << L.sigma->l << ",1)";
  L.label = os.str();
  return L;
}

}  // namespace foldhilb
