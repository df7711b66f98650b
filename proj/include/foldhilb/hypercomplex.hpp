#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace foldhilb {

using Lattice = std::vector<int>;
using RatPoint = std::vector<mpq_class>;

// Delta_{l,n} + shift
struct HyperCell {
  int n = 0;
  int l = 0;
  Lattice shift;

  int level() const;  // coordinate sum l + |shift|
  std::vector<Lattice> vertices() const;
  bool operator==(const HyperCell& o) const { return n == o.n && l == o.l && shift == o.shift; }
  bool operator<(const HyperCell& o) const;
};

// Delta_{l,n}(S1, S2) + u: lambda_i = u_i on S1, u_i + 1 on S2, u_i <= lambda_i <= u_i + 1 elsewhere
struct Face {
  int n = 0;
  std::vector<int> S1, S2;
  int l = 0;
  Lattice u;

  int free_count() const;  // n - |S1| - |S2|
  int free_sum() const;    // l - |S2|
  bool valid() const;
  int dim() const;
  std::vector<Lattice> vertices() const;  // sorted
  RatPoint barycenter() const;
  // same point set
  bool same_as(const Face& o) const;
};

Face cell_face(const HyperCell& c);

// maximal cells plus the pairwise intersections
struct ComplexKnm {
  int n = 0, m = 0;
  std::vector<HyperCell> cells;  // sorted
  std::vector<Face> faces;       // distinct nonempty intersections of distinct cells
  struct Adjacent {
    int i, j, face;
  };
  std::vector<Adjacent> adjacency;
  bool is_point() const { return cells.empty(); }
};

ComplexKnm build_complex(int n, int m);
// formula count: sum over l of C(m + n - l - 2, n - 1)
long long cell_count_formula(int n, int m);

std::optional<Face> intersect_cells(const HyperCell& a, const HyperCell& b);
// faces of codimension r inside the cell, one representative per point set
std::vector<Face> faces_of(const HyperCell& c, int r);

// cells of K containing the point
std::vector<int> cells_containing(const ComplexKnm& K, const RatPoint& p);
int cells_at_vertex(const ComplexKnm& K, const Lattice& v);

// closed criterion and the recursive definition, asserted equal
bool is_smoothable_face(const Face& f, int m);
bool is_smoothable_face_closed(const Face& f);
bool is_smoothable_face_recursive(const Face& f, int m);
bool is_singular_face(const ComplexKnm& K, const Face& f);

// normalized lattice volume of Delta_{l,n} by pulling triangulation
long long hypersimplex_volume(int l, int n);
bool volume_check(const ComplexKnm& K);

// K cut by lambda_i = a_i (i in S), projected away from S
ComplexKnm slice(const ComplexKnm& K, const std::vector<int>& S, const std::vector<int>& a);
bool same_cells(const ComplexKnm& a, const ComplexKnm& b);

}  // namespace foldhilb
