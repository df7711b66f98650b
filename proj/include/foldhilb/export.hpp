#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "foldhilb/hypercomplex.hpp"
#include "foldhilb/localmodel.hpp"

namespace foldhilb {

using nlohmann::json;

// {n, m, vertices, cells, faces, adjacency}; every array in canonical order
json complex_json(const ComplexKnm& K);
json polytope_json(const PolytopePk& P);
json sing_complex_json(const SingComplex& S);

// OFF for dimension 3, nOFF otherwise; maximal cells become the face lists
std::string complex_off(const ComplexKnm& K);
std::string polytope_off(const PolytopePk& P);

struct SvgOptions {
  int width = 800;
  int height = 700;
  int margin = 50;
  double dot_radius = 4.0;
};
// n in {2, 3}; throws Validation otherwise
std::string render_svg(const ComplexKnm& K, const SvgOptions& opt = {});

// pretty JSON with a trailing newline
std::string dump_json(const json& j);
void write_text(const std::string& path, const std::string& text);

// ---- report records emitted by the CLI ----

struct CountReport {
  std::string kind;  // punctual | global | curve
  int n = 0, m = 0;
  long long value = 0;
  std::string closed_form;
  bool match = true;
  bool operator==(const CountReport&) const = default;
};

struct ClassifyReport {
  int n = 0, colength = 0;
  bool singular = false;
  std::string condition;
  bool smoothable = false;
  int tangent = 0;
  int component_dim = -1;
  int components = 0;
  bool agree = true;
  bool operator==(const ClassifyReport&) const = default;
};

struct TangentReport {
  int n = 0, m = 0, l = 0;
  std::vector<int> u;
  int tangent = 0;
  int component_dim = 0;
  bool operator==(const TangentReport&) const = default;
};

struct MomentReport {
  int n = 0, m = 0;
  std::vector<std::string> point;  // exact rationals
  std::vector<int> face_s1, face_s2;
  int face_l = 0;
  std::vector<int> face_shift;
  bool operator==(const MomentReport&) const = default;
};

struct LocalReport {
  int n = 0, k = 0;
  long long count = 0;
  long long formula = 0;
  std::vector<std::string> primes;
  bool operator==(const LocalReport&) const = default;
};

struct VerifyReport {
  std::string target;
  int q = 0;
  bool union_equal = false;
  bool incomparable = false;
  std::uint64_t points = 0;
  std::uint64_t zeros = 0;
  bool operator==(const VerifyReport&) const = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CountReport, kind, n, m, value, closed_form, match)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClassifyReport, n, colength, singular, condition, smoothable, tangent,
                                   component_dim, components, agree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TangentReport, n, m, l, u, tangent, component_dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MomentReport, n, m, point, face_s1, face_s2, face_l, face_shift)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LocalReport, n, k, count, formula, primes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyReport, target, q, union_equal, incomparable, points, zeros)

// ideal files: {n, generators: [{constant: [rn, rd, in, id], branches: [[coeff...]...]}]}
// where each coeff is a number or [rn, rd, in, id]
std::vector<SeparatedPoly> ideal_from_json(const json& j, int& n);
json ideal_to_json(int n, const std::vector<SeparatedPoly>& gens);

}  // namespace foldhilb
