#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foldhilb/exactcore.hpp"

namespace foldhilb {

// R_n = C[x_1..x_n] / <x_i x_j : i != j>; axes are 0-based internally
struct FoldRingCtx {
  int n;
  explicit FoldRingCtx(int n_);
};

// c + sum_i p_i(x_i) with p_i(0) = 0
struct SeparatedPoly {
  GaussRational constant;
  std::vector<Vec> branches;  // branches[i][s-1] is the coefficient of x_i^s

  explicit SeparatedPoly(int n = 0) : branches(n) {}
  static SeparatedPoly monomial(int n, int axis, int power, const GaussRational& c = 1);

  int n() const { return static_cast<int>(branches.size()); }
  GaussRational coeff(int axis, int power) const;
  void add_term(int axis, int power, const GaussRational& c);
  void trim();
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const;
  // c + p_i(t) as a coefficient list, index = power
  Vec restriction(int axis) const;
  bool operator==(const SeparatedPoly& o) const;
};

SeparatedPoly operator+(const SeparatedPoly& a, const SeparatedPoly& b);
SeparatedPoly operator-(const SeparatedPoly& a, const SeparatedPoly& b);
SeparatedPoly operator*(const SeparatedPoly& a, const SeparatedPoly& b);
SeparatedPoly operator*(const GaussRational& c, const SeparatedPoly& a);
std::string to_string(const SeparatedPoly& p);

// local length of R_n/J at the origin; nullopt means infinite
std::optional<int> colength(const FoldRingCtx& ctx, const std::vector<SeparatedPoly>& gens);

// l generators A*(x_1^{u_1},...,x_n^{u_n})^T plus forced monomials x_i^{u_i+1}, i in forced
struct PunctualIdeal {
  int n = 0;
  int l = 0;
  std::vector<int> u;
  ExactMatrix A;            // l x n, zero columns exactly at `forced`
  std::vector<int> forced;  // sorted axes

  int colength() const;
  std::vector<SeparatedPoly> generators() const;
  bool operator==(const PunctualIdeal& o) const {
    return n == o.n && l == o.l && u == o.u && A == o.A && forced == o.forced;
  }
};

// validates every structural invariant; throws HilbError(Validation)
PunctualIdeal make_punctual(int n, std::vector<int> u, ExactMatrix A, std::vector<int> forced = {});

PunctualIdeal normalize_punctual(const FoldRingCtx& ctx, const std::vector<SeparatedPoly>& gens);
PunctualIdeal normalize(const PunctualIdeal& J);
// same ideal with every forced monomial turned into a unit row
PunctualIdeal unforced(const PunctualIdeal& J);

// e_i = least s with x_i^s in J; `involved` marks axes met by a non-monomial generator
struct IdealShape {
  std::vector<int> e;
  std::vector<bool> involved;
  int dim_n = 0;  // number of independent non-monomial generators
};
IdealShape shape_of(const PunctualIdeal& J);

// cj * x_i * e_j + ck * x_i * e_k
struct Syzygy {
  int i, j, k;
  GaussRational cj, ck;
};
std::vector<Syzygy> syzygies(const PunctualIdeal& J);
SeparatedPoly apply_syzygy(const PunctualIdeal& J, const Syzygy& s);

// monomial basis of R/J and multiplication by the axis variables
class QuotientRing {
 public:
  explicit QuotientRing(const PunctualIdeal& J);
  int dim() const { return static_cast<int>(basis_.size()); }
  // (axis, power); power 0 is the unit
  const std::vector<std::pair<int, int>>& basis() const { return basis_; }
  // coordinates of x_axis * basis[b]
  Vec mul_x(int axis, int b) const;
  Vec reduce(const SeparatedPoly& p) const;

 private:
  PunctualIdeal J_;
  std::vector<std::pair<int, int>> basis_;
  std::vector<int> pivot_row_;  // per axis, -1 if not a pivot column
};

int tangent_dim(const PunctualIdeal& J, int m);

struct SmoothPoint {
  int axis;
  GaussRational value;
  int multiplicity = 1;
};

struct SchemePoint {
  std::optional<PunctualIdeal> punctual;
  std::vector<SmoothPoint> smooth;
  int length() const;
};
int tangent_dim_scheme(const SchemePoint& Z);

// dimension of the global component whose punctual part is Sigma(m, l, u)
int component_dim(int n, int l, int m);

struct Membership {
  int l;
  std::vector<int> u;
  PunctualIdeal rep;
};
// J lies in Sigma(m, l, u) for l in [lmin, lmax]; the representative is in that component's format
std::optional<PunctualIdeal> represent_in(const PunctualIdeal& J, int l, const std::vector<int>& u);
std::vector<Membership> containing_grassmannians(const PunctualIdeal& J, int lmin, int lmax);

struct SingularVerdict {
  bool singular = false;
  std::string condition;  // matched clause of the syntactic test, empty when smooth
  bool syntactic = false;
  bool tangent_based = false;
  int tangent = 0;
  int component_dim = -1;  // -1 when several components meet at J
  int components = 0;      // global components through J seen by the Grassmannian test
  bool agree = true;
};
SingularVerdict is_singular_point(const PunctualIdeal& J, int m);

bool smoothable_by_form(const PunctualIdeal& J);
// form test cross-checked against the face test; throws Diagnostic on disagreement
bool is_smoothable(const PunctualIdeal& J);

// univariate helpers over Q(i), coefficient lists indexed by power
Vec poly_trim(Vec p);
Vec poly_gcd(Vec a, Vec b);

}  // namespace foldhilb
