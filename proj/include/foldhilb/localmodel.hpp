#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foldhilb/components.hpp"

namespace foldhilb {

// A signed product of variables; vars is sorted and may repeat.
struct Term {
  int sign = 1;
  std::vector<int> vars;
  bool operator==(const Term& o) const = default;
};

// Each generator is a monomial or a difference of two monomials.
using Generator = std::vector<Term>;

struct PolyIdealGens {
  std::vector<std::string> variables;
  std::vector<Generator> generators;

  int var_count() const { return static_cast<int>(variables.size()); }
  int index_of(const std::string& name) const;  // -1 when absent
  // adds a generator after validating it; duplicates are dropped
  void add(Generator g);
  void add_monomial(std::vector<int> vars);
  void add_binomial(std::vector<int> plus, std::vector<int> minus);
  std::string to_string() const;
};

enum class PrimeKind { Q, J, K1, Punctual, Technical };
const char* prime_kind_name(PrimeKind k);

struct PrimeFamily {
  PrimeKind kind = PrimeKind::J;
  int index = 0;          // i for Q_i (0-based); for k = 1: 0 is <A_1, a_11>, 1 is <a_2..a_n>, i >= 2 keeps a_i
  std::vector<int> set;   // S for J_S and J_{S,T} (0-based)
  std::vector<int> tset;  // T for J_{S,T}
  std::string label;
  PolyIdealGens ideal;    // generators over the ambient variable list
  std::optional<GrassComponent> punctual;  // Sigma(m, n-k+|T|, u - e_{[k]\T}) for punctual primes
};

// J_k over S_k: variables A_i then a_{i,j,l} (i in [n], j in [k], l in [u_j - 1]) row-major
PolyIdealGens deformation_ideal(int n, int k, const std::vector<int>& u);
// raw index-tuple count of each of the six blocks, before duplicates are merged
std::vector<int> deformation_block_sizes(int n, int k, const std::vector<int>& u);

// the reduced ideal: k = 1 over (A_1, a_11, a_2..a_n); k >= 2 over (b_1..b_k, a_{i,j} row-major)
PolyIdealGens reduced_ideal(int n, int k);
std::vector<PrimeFamily> primary_components(int n, int k);
long long local_component_count_formula(int n, int k);
long long local_component_count(int n, int k);  // asserts formula == family count

struct PunctualLocalRing {
  PolyIdealGens ideal;
  std::vector<PrimeFamily> primes;
};
PunctualLocalRing punctual_local_ring(int n, int k, const std::vector<int>& u);

// <a_{i,j} a_{j,r} : j, r in S, i != j, j != r> and its primes J_{S,T}
PunctualLocalRing technical_ideal(int n, const std::vector<int>& S);

enum class Exec { Serial, Parallel };

struct FfReport {
  bool union_equal = false;   // V(I) = union of V(P) at every point
  bool incomparable = false;  // every ordered pair of primes has a separating point
  std::uint64_t points = 0;
  std::uint64_t zeros = 0;    // points of V(I)
  std::uint64_t bad_point = 0;  // first failing point index, when any
};
FfReport verify_decomposition_ff_report(const PolyIdealGens& gens, const std::vector<PrimeFamily>& primes, int q,
                                        Exec exec = Exec::Parallel);
bool verify_decomposition_ff(const PolyIdealGens& gens, const std::vector<PrimeFamily>& primes, int q,
                             Exec exec = Exec::Parallel);

// V(J_k) over F_q equals the graph of the substitution map over V(reduced ideal)
bool deformation_graph_check(int n, int k, const std::vector<int>& u, int q, Exec exec = Exec::Parallel);

// ---- polytopes ----

struct LabeledVertex {
  std::string label;
  std::vector<int> coords;
};

struct PolytopePk {
  int k = 0;
  int dim = 0;
  std::vector<LabeledVertex> vertices;
  std::vector<std::vector<int>> facets;  // sorted vertex indices, sorted list
};

// P_k with its facets from the V_0 / S_1 / S_2 description
PolytopePk toric_polytope(int k);
// facets by brute force over supporting hyperplanes through affinely independent vertex sets
std::vector<std::vector<int>> facets_by_hyperplanes(const std::vector<LabeledVertex>& vs, int dim);
bool is_face(const PolytopePk& P, const std::vector<int>& vertex_subset);
// normalized volume (dim! times Euclidean) by coning the simplex facets from the vertex centroid
mpq_class normalized_volume(const PolytopePk& P);

using Simplex = std::vector<int>;  // vertex indices into P.vertices
std::vector<Simplex> unimodular_triangulation(const PolytopePk& P);
long long simplex_det(const PolytopePk& P, const Simplex& s);

// P_{i,k} with its vertices labeled by a_{i,j} and b_j (i 0-based)
PolytopePk prime_polytope(int n, int k, int i);

// ---- singularity complexes ----

enum class CellKind { Simplex, Polytope };

struct SingCell {
  std::string label;
  std::vector<std::string> vertices;  // sorted vertex labels
  CellKind kind = CellKind::Simplex;
  int prime = 0;                      // index into primes
  std::optional<PolytopePk> polytope; // lattice model for polytope cells
};

struct SingComplex {
  int n = 0, k = 0;
  bool cone = false;
  PolyIdealGens ring;  // reduced ideal; vertex labels other than "0" are its variable names
  std::vector<PrimeFamily> primes;
  std::vector<SingCell> cells;
};

SingComplex build_sing_complex(int n, int k, bool cone = false);

struct GluingCheck {
  int a = 0, b = 0;
  std::vector<std::string> shared;  // label intersection
  bool face_a = false, face_b = false;
  bool variety_match = false;       // V(P_a) cap V(P_b) is the coordinate space on the shared labels
};
std::vector<GluingCheck> check_sing_complex(const SingComplex& S, int q);

// ---- translation to global components ----

struct LocalComponentLabel {
  bool smoothable = false;
  std::vector<std::pair<int, int>> hilb;  // (axis, length) factors Hilb^length(L_axis), zero lengths dropped
  std::optional<GrassComponent> sigma;    // the elementary factor Sigma(|S|+1, n-|S|, 1)
  std::optional<GrassComponent> punctual; // Sigma(m, n-|S|, u - e_S) inside the punctual Hilbert scheme
  int dimension = 0;                      // from the product description
  int local_dimension = 0;                // from the prime itself plus free variables
  std::string label;
};
LocalComponentLabel translate_component(const PrimeFamily& p, int n, int k, const std::vector<int>& u);

}  // namespace foldhilb
