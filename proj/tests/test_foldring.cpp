#include <gtest/gtest.h>

#include <random>

#include "foldhilb/combinat.hpp"
#include "foldhilb/components.hpp"
#include "foldhilb/errors.hpp"
#include "foldhilb/foldring.hpp"

using namespace foldhilb;

namespace {

SeparatedPoly x(int n, int axis, int power, GaussRational c = 1) { return SeparatedPoly::monomial(n, axis, power, c); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const HilbError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no HilbError thrown";
  return ErrorKind::Diagnostic;
}

}  // namespace

TEST(FoldRing, SeparatedPolyProductKillsMixedTerms) {
  auto p = x(3, 0, 1) + x(3, 1, 2);
  auto q = x(3, 1, 1) + GaussRational(2) * x(3, 2, 1);
  auto r = p * q;  // x1*x2 and x2^2*x3 vanish
  EXPECT_EQ(r, x(3, 1, 3));
  EXPECT_EQ(r.degree(), 3);
}

TEST(FoldRing, NormalizationGoldens) {
  FoldRingCtx c3(3), c2(2);
  auto J = normalize_punctual(c3, {x(3, 0, 3), x(3, 1, 1), x(3, 2, 1)});
  EXPECT_EQ(J.l, 3);
  EXPECT_EQ(J.u, (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(J.A, ExactMatrix::identity(3));
  EXPECT_EQ(J.colength(), 3);

  auto P = normalize_punctual(c3, {x(3, 0, 1) + x(3, 1, 1), x(3, 0, 1) + x(3, 2, 1)});
  EXPECT_EQ(P.l, 2);
  EXPECT_EQ(P.u, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(P.A, ExactMatrix::from_rows({{1, 0, 1}, {0, 1, -1}}, 3));
  EXPECT_EQ(P.colength(), 2);

  auto L = normalize_punctual(c2, {x(2, 0, 2), x(2, 0, 1) + x(2, 1, 1)});
  EXPECT_EQ(L.l, 1);
  EXPECT_EQ(L.u, (std::vector<int>{1, 1}));
  EXPECT_EQ(L.colength(), 2);

  EXPECT_EQ(*colength(c3, {x(3, 0, 2), x(3, 1, 2), x(3, 2, 2)}), 4);
}

TEST(FoldRing, InputErrors) {
  FoldRingCtx c2(2);
  SeparatedPoly unit(2);
  unit.constant = 1;
  EXPECT_EQ(kind_of([&] { normalize_punctual(c2, {unit + x(2, 0, 1)}); }), ErrorKind::NotOriginSupported);
  EXPECT_EQ(kind_of([&] { normalize_punctual(c2, {x(2, 0, 1)}); }), ErrorKind::NotFiniteColength);
  EXPECT_EQ(kind_of([&] { normalize_punctual(c2, {x(2, 0, 2) - x(2, 0, 1), x(2, 1, 1)}); }),
            ErrorKind::NotOriginSupported);
  EXPECT_FALSE(colength(c2, {x(2, 0, 1)}).has_value());

  EXPECT_EQ(kind_of([] { make_punctual(2, {1}, ExactMatrix::identity(2)); }), ErrorKind::Validation);
  EXPECT_EQ(kind_of([] { make_punctual(2, {1, 1}, ExactMatrix::from_rows({{1, 0}}, 2)); }), ErrorKind::Validation);
  EXPECT_EQ(kind_of([] { make_punctual(2, {1, 1}, ExactMatrix::from_rows({{1, 1}, {2, 2}}, 2)); }),
            ErrorKind::Validation);
  EXPECT_EQ(kind_of([] { make_punctual(2, {0, 1}, ExactMatrix::from_rows({{1, 1}}, 2)); }), ErrorKind::Validation);
}

TEST(FoldRing, TangentDimensions) {
  FoldRingCtx c3(3), c2(2);
  EXPECT_EQ(tangent_dim(normalize_punctual(c3, {x(3, 0, 1) + x(3, 1, 1), x(3, 0, 1) + x(3, 2, 1)}), 2), 2);
  EXPECT_EQ(tangent_dim(normalize_punctual(c2, {x(2, 0, 1) + x(2, 1, 1)}), 2), 2);
  // the maximal ideal: Hom(m/m^2, C) has dimension n
  for (int n = 1; n <= 5; ++n) {
    std::vector<SeparatedPoly> g;
    for (int i = 0; i < n; ++i) g.push_back(x(n, i, 1));
    EXPECT_EQ(tangent_dim(normalize_punctual(FoldRingCtx(n), g), 1), n);
  }
}

TEST(FoldRing, ComponentDimension) {
  EXPECT_EQ(component_dim(3, 1, 4), 4);
  EXPECT_EQ(component_dim(3, 2, 4), 2 * 1 + 4 - 2);
  EXPECT_EQ(component_dim(4, 2, 3), 2 * 2 + 3 - 3);
}

TEST(FoldRing, RandomMembersRoundTrip) {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 5; ++m)
      for (const auto& c : punctual_components(n, m)) {
        auto J = random_member(c, rng);
        ASSERT_EQ(J.colength(), m);
        EXPECT_EQ(*colength(FoldRingCtx(n), J.generators()), m);
        auto N = normalize(J);
        EXPECT_EQ(normalize(N), N);
        EXPECT_EQ(normalize_punctual(FoldRingCtx(n), J.generators()), N);
        EXPECT_TRUE(represent_in(J, c.l, c.u).has_value());
      }
}

TEST(FoldRing, SingularPointVerdicts) {
  FoldRingCtx c3(3);
  auto J = normalize_punctual(c3, {x(3, 0, 2), x(3, 1, 1), x(3, 2, 1)});
  auto v = is_singular_point(J, 2);
  EXPECT_TRUE(v.singular);
  EXPECT_EQ(v.condition, "monomial generator exponent ≥ 2");
  EXPECT_EQ(v.tangent, 4);
  EXPECT_EQ(v.components, 2);
  EXPECT_TRUE(v.agree);
  EXPECT_TRUE(is_smoothable(J));

  auto plane = make_punctual(3, {1, 1, 1}, ExactMatrix::from_rows({{1, 0, 1}, {0, 1, -1}}, 3));
  auto pv = is_singular_point(plane, 2);
  EXPECT_FALSE(pv.singular);
  EXPECT_TRUE(pv.agree);
  EXPECT_FALSE(is_smoothable(plane));

  auto hyper = make_punctual(3, {1, 1, 1}, ExactMatrix::from_rows({{1, 2, 3}}, 3));
  EXPECT_TRUE(is_smoothable(hyper));
  EXPECT_EQ(is_singular_point(hyper, 3).condition, "");

  auto form_axes = normalize_punctual(c3, {x(3, 0, 1) + x(3, 1, 1), x(3, 2, 1)});
  EXPECT_EQ(is_singular_point(form_axes, 2).condition, "generated by one form and axis variables");
  EXPECT_THROW(is_singular_point(J, 3), HilbError);
}

// one form on the axes T plus monomials on the rest, n <= 3, colength <= 5
TEST(FoldRing, SyntacticAgreesWithTangentSmallFamily) {
  int total_ideals = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& T : subsets(n)) {
      if (T.size() == 1) continue;
      std::vector<bool> inT(n, false);
      for (int t : T) inT[t] = true;
      ExactMatrix A(0, n);
      if (!T.empty()) {
        Vec r(n);
        int c = 1;
        for (int t : T) r[t] = GaussRational(c++);
        A.append_row(r);
      }
      for (int i = 0; i < n; ++i)
        if (!inT[i]) {
          Vec r(n);
          r[i] = 1;
          A.append_row(r);
        }
      for (int total = n; total <= n + 4; ++total)
        for (const auto& u : compositions(total, n, 1)) {
          auto J = make_punctual(n, u, rref(A).m);
          int m = J.colength();
          if (m > 5) continue;
          ++total_ideals;
          auto v = is_singular_point(J, m);
          EXPECT_TRUE(v.agree) << "n=" << n << " m=" << m << " |T|=" << T.size();
        }
    }
  EXPECT_GT(total_ideals, 50);
}
