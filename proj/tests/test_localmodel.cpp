#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "foldhilb/combinat.hpp"
#include "foldhilb/errors.hpp"
#include "foldhilb/hypercomplex.hpp"
#include "foldhilb/localmodel.hpp"

using namespace foldhilb;

namespace {

std::vector<int> local_u(int n, int k, int top = 2) {
  std::vector<int> u(n, 1);
  for (int i = 0; i < k; ++i) u[i] = top;
  return u;
}

const std::vector<std::pair<int, int>> kVerified = {{2, 1}, {3, 1}, {3, 2}, {3, 3}, {4, 1},
                                                    {4, 2}, {4, 3}, {2, 2}, {5, 2}};

}  // namespace

TEST(LocalModel, ReducedRingLayout) {
  auto r = reduced_ideal(3, 2);
  EXPECT_EQ(r.variables, (std::vector<std::string>{"b_1", "b_2", "a_1_2", "a_2_1", "a_3_1", "a_3_2"}));
  auto r1 = reduced_ideal(3, 1);
  EXPECT_EQ(r1.var_count(), 4);
  EXPECT_EQ(r1.variables.front(), "A_1");
  EXPECT_THROW(reduced_ideal(1, 1), HilbError);
  EXPECT_THROW(reduced_ideal(3, 4), HilbError);
}

TEST(LocalModel, ComponentCountFormula) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      long long expect;
      if (k <= n - 2)
        expect = n + (1LL << k) - 1;
      else if (k == n - 1)
        expect = n + (1LL << (n - 1)) - 2;
      else
        expect = (1LL << k) - 2;
      if (n == 2 && k == 1) expect = 2;  // <A_1, a_11> contains the other prime
      EXPECT_EQ(local_component_count_formula(n, k), expect) << n << "," << k;
      EXPECT_EQ(static_cast<long long>(primary_components(n, k).size()), expect) << n << "," << k;
      EXPECT_EQ(local_component_count(n, k), expect);
    }
}

TEST(LocalModel, PrimaryDecompositionOverSmallFields) {
  for (auto [n, k] : kVerified)
    for (int q : {2, 3}) {
      auto rep = verify_decomposition_ff_report(reduced_ideal(n, k), primary_components(n, k), q);
      EXPECT_TRUE(rep.union_equal) << n << "," << k << " q=" << q;
      EXPECT_TRUE(rep.incomparable) << n << "," << k << " q=" << q;
      EXPECT_GT(rep.zeros, 0u);
    }
}

TEST(LocalModel, SerialAndParallelSweepsAgree) {
  for (auto [n, k] : kVerified) {
    auto I = reduced_ideal(n, k);
    auto P = primary_components(n, k);
    auto s = verify_decomposition_ff_report(I, P, 3, Exec::Serial);
    auto p = verify_decomposition_ff_report(I, P, 3, Exec::Parallel);
    EXPECT_EQ(s.union_equal, p.union_equal);
    EXPECT_EQ(s.incomparable, p.incomparable);
    EXPECT_EQ(s.points, p.points);
    EXPECT_EQ(s.zeros, p.zeros);
  }
}

TEST(LocalModel, DecompositionCheckDetectsMissingPrime) {
  auto I = reduced_ideal(3, 2);
  auto P = primary_components(3, 2);
  P.pop_back();
  EXPECT_FALSE(verify_decomposition_ff(I, P, 2));
  auto Q = primary_components(3, 2);
  Q.push_back(Q.front());
  EXPECT_FALSE(verify_decomposition_ff_report(I, Q, 2).incomparable);
}

TEST(LocalModel, DeformationIdealBlockAudit) {
  struct Case {
    int n, k;
    std::vector<int> u;
  };
  for (const Case& c : std::vector<Case>{{3, 2, {2, 2, 1}}, {3, 2, {3, 2, 1}}, {3, 1, {3, 1, 1}}, {4, 2, {2, 3, 1, 1}},
                                         {4, 3, {2, 2, 2, 1}}, {3, 3, {2, 3, 2}}, {5, 2, {3, 3, 1, 1, 1}}}) {
    auto sizes = deformation_block_sizes(c.n, c.k, c.u);
    int raw = 0;
    for (int s : sizes) raw += s;
    // merged duplicates: A_iA_j twice outside [k], block 6 pairs inside [k], block 4 against block 2
    int expect = raw - static_cast<int>(binom(c.n - c.k, 2)) - static_cast<int>(binom(c.k, 2)) - c.k * (c.n - c.k);
    auto J = deformation_ideal(c.n, c.k, c.u);
    EXPECT_EQ(static_cast<int>(J.generators.size()), expect) << c.n << "," << c.k;
    int vars = c.n;
    for (int j = 0; j < c.k; ++j) vars += c.n * (c.u[j] - 1);
    EXPECT_EQ(J.var_count(), vars);
  }
  EXPECT_EQ(static_cast<int>(deformation_ideal(3, 2, {2, 2, 1}).generators.size()), 15);
  EXPECT_THROW(deformation_ideal(3, 2, {2, 1, 1}), HilbError);
}

TEST(LocalModel, DeformationIdealIsGraphOverReducedIdeal) {
  struct Case {
    int n, k;
    std::vector<int> u;
  };
  for (const Case& c : std::vector<Case>{{2, 1, {3, 1}},
                                         {3, 1, {2, 1, 1}},
                                         {3, 1, {3, 1, 1}},
                                         {3, 2, {2, 2, 1}},
                                         {3, 2, {3, 2, 1}},
                                         {3, 3, {2, 2, 2}},
                                         {2, 2, {2, 2}},
                                         {2, 2, {3, 2}}})
    for (int q : {2, 3}) EXPECT_TRUE(deformation_graph_check(c.n, c.k, c.u, q)) << c.n << "," << c.k << " q=" << q;
  EXPECT_TRUE(deformation_graph_check(4, 2, {2, 2, 1, 1}, 2));
  EXPECT_TRUE(deformation_graph_check(4, 3, {2, 2, 2, 1}, 2));
}

TEST(LocalModel, PunctualAndTechnicalIdeals) {
  for (auto [n, k] : kVerified) {
    auto R = punctual_local_ring(n, k, local_u(n, k));
    for (int q : {2, 3}) EXPECT_TRUE(verify_decomposition_ff(R.ideal, R.primes, q)) << n << "," << k;
    for (const auto& p : R.primes) EXPECT_TRUE(p.punctual.has_value());
  }
  for (int n = 2; n <= 4; ++n)
    for (int s = 1; s <= std::min(3, n); ++s) {
      std::vector<int> S;
      for (int i = 0; i < s; ++i) S.push_back(i);
      auto R = technical_ideal(n, S);
      for (int q : {2, 3}) EXPECT_TRUE(verify_decomposition_ff(R.ideal, R.primes, q)) << n << " |S|=" << s;
    }
  EXPECT_THROW(technical_ideal(1, {0}), HilbError);
}

TEST(LocalModel, ToricPolytopes) {
  for (int k = 2; k <= 5; ++k) {
    auto P = toric_polytope(k);
    EXPECT_EQ(static_cast<int>(P.vertices.size()), 2 * k);
    EXPECT_EQ(P.facets.size(), std::size_t{1} << k);
    EXPECT_EQ(facets_by_hyperplanes(P.vertices, P.dim), P.facets);
    auto T = unimodular_triangulation(P);
    EXPECT_EQ(T.size(), std::size_t{1} << (k - 1));
    for (const auto& s : T) EXPECT_EQ(std::llabs(simplex_det(P, s)), 1);
    EXPECT_EQ(normalized_volume(P), mpq_class(1L << (k - 1)));
    for (const auto& f : P.facets) EXPECT_TRUE(is_face(P, f));
  }
}

TEST(LocalModel, PrimePolytopes) {
  auto shape = [](int n, int k, int i) {
    auto P = prime_polytope(n, k, i);
    return std::make_pair(P.vertices.size(), P.facets.size());
  };
  EXPECT_EQ(shape(3, 2, 0), std::make_pair(std::size_t{3}, std::size_t{3}));
  EXPECT_EQ(shape(3, 2, 1), std::make_pair(std::size_t{3}, std::size_t{3}));
  EXPECT_EQ(shape(3, 2, 2), std::make_pair(std::size_t{4}, std::size_t{4}));
  EXPECT_EQ(shape(4, 3, 3), std::make_pair(std::size_t{6}, std::size_t{8}));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(shape(4, 4, i), std::make_pair(std::size_t{7}, std::size_t{9}));
}

TEST(LocalModel, SingularityComplexForThreeAxes) {
  auto S = build_sing_complex(3, 2);
  ASSERT_EQ(S.cells.size(), 5u);
  int simplices = 0, triangles = 0, squares = 0;
  for (const auto& c : S.cells) {
    if (c.kind == CellKind::Simplex) ++simplices;
    if (c.kind == CellKind::Polytope && c.vertices.size() == 3) ++triangles;
    if (c.kind == CellKind::Polytope && c.vertices.size() == 4) ++squares;
  }
  EXPECT_EQ(simplices, 2);
  EXPECT_EQ(triangles, 2);
  EXPECT_EQ(squares, 1);
  auto find = [&](const std::string& label) {
    return std::find_if(S.cells.begin(), S.cells.end(), [&](const SingCell& c) { return c.label == label; });
  };
  EXPECT_EQ(find("P_{3,2}")->vertices, (std::vector<std::string>{"a_3_1", "a_3_2", "b_1", "b_2"}));
  EXPECT_EQ(find("Delta_{1}")->vertices, (std::vector<std::string>{"a_2_1", "a_3_1", "b_2"}));
  EXPECT_EQ(find("Delta_{2}")->vertices, (std::vector<std::string>{"a_1_2", "a_3_2", "b_1"}));
}

TEST(LocalModel, SingularityComplexGluing) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}, {2, 1}, {2, 2}}) {
    auto S = build_sing_complex(n, k);
    for (int q : {2, 3})
      for (const auto& g : check_sing_complex(S, q)) {
        EXPECT_TRUE(g.face_a && g.face_b) << n << "," << k << " " << S.cells[g.a].label << " " << S.cells[g.b].label;
        EXPECT_TRUE(g.variety_match) << n << "," << k << " " << S.cells[g.a].label << " " << S.cells[g.b].label;
      }
  }
}

TEST(LocalModel, TranslationToGlobalComponents) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}, {2, 1}, {2, 2}}) {
    auto u = local_u(n, k);
    u[0] = 3;
    int m = 0;
    for (int x : u) m += x;
    m -= n - 1;
    auto K = build_complex(n, m);
    std::vector<int> vertex = u;
    for (auto& x : vertex) x -= 1;
    int punctual = 0, smoothable = 0;
    for (const auto& p : primary_components(n, k)) {
      auto L = translate_component(p, n, k, u);
      EXPECT_EQ(L.dimension, L.local_dimension) << n << "," << k << " " << p.label;
      if (L.smoothable) ++smoothable;
      if (L.punctual) {
        ++punctual;
        EXPECT_NE(std::find(K.cells.begin(), K.cells.end(), cell_of(*L.punctual)), K.cells.end());
      }
    }
    // every cell through the vertex comes from a prime; the smoothable primes add to it
    EXPECT_LE(cells_at_vertex(K, vertex), static_cast<int>(primary_components(n, k).size()));
    EXPECT_GE(smoothable, 1);
    if (n >= 3) EXPECT_GE(punctual, 1);
  }
}
