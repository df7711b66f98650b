#pragma once

// random ideal generators shared by the unit tests and the acceptance driver

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "foldhilb/combinat.hpp"
#include "foldhilb/components.hpp"
#include "foldhilb/foldring.hpp"

namespace foldhilb::support {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline GaussRational nonzero_coeff(std::mt19937_64& rng) {
  int v = uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1);
  return GaussRational(v);
}

// a x t matrix of full rank, no zero column, row space free of coordinate vectors when a < t
inline ExactMatrix random_block(std::mt19937_64& rng, int a, int t) {
  for (;;) {
    ExactMatrix A(a, t);
    for (int r = 0; r < a; ++r)
      for (int c = 0; c < t; ++c) A.at(r, c) = uniform(rng, -3, 3);
    if (static_cast<int>(rank(A)) != a) continue;
    Rref R = rref(A);
    bool ok = true;
    for (int c = 0; c < t && ok; ++c) {
      bool zero = true;
      for (int r = 0; r < a; ++r) zero = zero && A.at(r, c).is_zero();
      Vec e(t);
      e[c] = 1;
      ok = !zero && (a == t || !in_row_space(R, e));
    }
    if (ok) return A;
  }
}

inline std::vector<int> random_composition(std::mt19937_64& rng, int total, int parts) {
  auto all = compositions(total, parts, 1);
  return all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
}

// a random point of the intersection of two random meeting components of Hilb^m_0(X_n)
inline std::optional<PunctualIdeal> random_intersection(int n, int m, std::mt19937_64& rng) {
  auto comps = punctual_components(n, m);
  if (comps.size() < 2) return std::nullopt;
  const auto& a = comps[uniform(rng, 0, static_cast<int>(comps.size()) - 1)];
  const auto& b = comps[uniform(rng, 0, static_cast<int>(comps.size()) - 1)];
  if (a == b) return std::nullopt;
  auto lab = intersect_components(a, b);
  if (!lab) return std::nullopt;
  ExactMatrix F = lab->gr_l > 0 ? random_block(rng, lab->gr_l, lab->gr_n) : ExactMatrix(0, lab->gr_n);
  return intersection_ideal(a, b, F);
}

struct TangentCase {
  PunctualIdeal J;
  int n = 0, m = 0, l = 0;
  int expected = 0;
};

// no minimal generator x_i^{u_i}: tangent dimension l(n-l) + m + l - 1 - n for l >= 2.
// With l = 1 the point is smooth on the m-dimensional smoothable component instead.
inline TangentCase generic_case(std::mt19937_64& rng, int nmax, int mmax, int lmin = 2) {
  for (;;) {
    int n = uniform(rng, lmin + 1, nmax), l = uniform(rng, lmin, n - 1), m = uniform(rng, 1, mmax);
    if (m + l - 1 < n) continue;
    auto u = random_composition(rng, m + l - 1, n);
    PunctualIdeal J = make_punctual(n, u, random_block(rng, l, n));
    return {J, n, m, l, l == 1 ? m : l * (n - l) + m + l - 1 - n};
  }
}

// generators f(x_j^{u_j} : j outside S) and x_i for i in S, with f on a > 0 rows;
// the axis variables are placed on a random subset S
inline TangentCase axes_case(std::mt19937_64& rng, int nmax, int mmax, bool single_form) {
  for (;;) {
    int n = uniform(rng, single_form ? 3 : 4, nmax);
    int s = uniform(rng, 1, n - (single_form ? 2 : 3));
    int t = n - s;
    int a = single_form ? 1 : uniform(rng, 2, t - 1);
    int l = a + s;
    int m = uniform(rng, 1, mmax);
    int sum_t = m + a - 1;  // colength |u| - l + 1 with u = 1 on S
    if (sum_t < t) continue;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> T(perm.begin(), perm.begin() + t), S(perm.begin() + t, perm.end());
    auto uT = random_composition(rng, sum_t, t);
    ExactMatrix B = random_block(rng, a, t);
    if (single_form)
      for (int c = 0; c < t; ++c) B.at(0, c) = nonzero_coeff(rng);
    std::vector<int> u(n, 1);
    ExactMatrix A(l, n);
    for (int c = 0; c < t; ++c) {
      u[T[c]] = uT[c];
      for (int r = 0; r < a; ++r) A.at(r, T[c]) = B.at(r, c);
    }
    for (int r = 0; r < s; ++r) A.at(a + r, S[r]) = 1;
    PunctualIdeal J = make_punctual(n, u, A);
    int base = l * (n - l) + m + l - n - 1;
    return {J, n, m, l, single_form ? base + 1 : base};
  }
}

}  // namespace foldhilb::support
