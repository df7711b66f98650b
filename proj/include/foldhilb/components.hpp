#pragma once

#include <gmpxx.h>

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "foldhilb/foldring.hpp"
#include "foldhilb/hypercomplex.hpp"

namespace foldhilb {

// Sigma(m, l, u): closure of the ideals <A * (x_1^{u_1}, ..., x_n^{u_n})> with |u| = m + l - 1
struct GrassComponent {
  int n = 0, m = 0, l = 0;
  std::vector<int> u;
  bool operator==(const GrassComponent& o) const = default;
  bool operator<(const GrassComponent& o) const;
};

// its cell Delta_{n-l,n} + u - 1 in K_n^[m]
HyperCell cell_of(const GrassComponent& c);
GrassComponent component_of(const HyperCell& c, int m);

std::vector<GrassComponent> punctual_components(int n, int m);

// a member with small random integer A whose row space avoids the coordinate vectors (when l < n)
PunctualIdeal random_member(const GrassComponent& c, std::mt19937_64& rng);

struct PunctualCount {
  long long direct = 0;
  mpq_class closed_form;  // the printed closed form for the relevant range
  bool match = false;
};
PunctualCount punctual_count(int n, int m);

// Sigma(m,l,u) meets Sigma(m,l',v) in Gr(l - |k1|, |k0|), k_e = {i : u_i - v_i = e}
struct IntersectionLabel {
  int gr_l = 0, gr_n = 0;
  std::vector<int> k1, km1, k0;
};
std::optional<IntersectionLabel> intersect_components(const GrassComponent& a, const GrassComponent& b);
// <f_1..f_r> + <x_i^{u_i} : k1> + <x_i^{u_i+1} : k-1 and k0>, f = F * (x_i^{u_i} : k0)
PunctualIdeal intersection_ideal(const GrassComponent& a, const GrassComponent& b, const ExactMatrix& F);

struct GlobalComponent {
  bool smoothable = true;
  int mprime = 0;             // punctual length of the elementary factor, 0 when smoothable
  std::vector<int> points;    // distribution of the remaining points over the branches
};
std::vector<GlobalComponent> global_components(int n, int m);
long long global_count_formula(int n, int m);

long long curve_count(int n, int m);

struct MultiSingCount {
  long long brute = 0;
  long long inclusion_exclusion = 0;  // corrected double sum
  long long printed_formula = 0;      // double sum as printed, kept for comparison
  bool match = false;
  std::vector<std::vector<int>> vectors;
};
MultiSingCount multi_sing_count(int m, const std::vector<int>& ns);

struct GluingGraph {
  int n = 0, m = 0;
  std::vector<GrassComponent> nodes;
  struct Edge {
    int a, b;
    IntersectionLabel label;
  };
  std::vector<Edge> edges;
};
GluingGraph build_gluing_graph(int n, int m);

// replace x_i by x_i^{s_i + 1} in an ideal with u = 1
PunctualIdeal phi_shift(const PunctualIdeal& J, const std::vector<int>& s);

struct StratumDescriptor {
  int sym_degree = 0;  // points on the smooth locus
  int graph_l = 0;     // Grassmannian rank of the glued components
  int graph_m = 0;
  long long components = 0;
  std::string label;
};
StratumDescriptor stratum_descriptor(int n, int m, int mprime, int ulevel);

// cells of the subcomplex K_{m'-1,n} containing mu(J)
int normalization_fiber_degree(const PunctualIdeal& J, int mprime);

}  // namespace foldhilb
