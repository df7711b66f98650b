#include "foldhilb/momentmap.hpp"

#include <algorithm>

#include "foldhilb/combinat.hpp"
#include "foldhilb/errors.hpp"

namespace foldhilb {

PluckerVector plucker_of(const PunctualIdeal& J) {
  PluckerVector p;
  p.l = J.l;
  p.n = J.n;
  std::vector<std::size_t> rows(J.l);
  for (int r = 0; r < J.l; ++r) rows[r] = r;
  for (const auto& cols : subsets_of_size(J.n, J.l)) {
    std::vector<std::size_t> c(cols.begin(), cols.end());
    p.coords[cols] = minor(J.A, rows, c);
  }
  return p;
}

MomentPoint moment_grass(const PluckerVector& p) {
  MomentPoint out(p.n, 0);
  mpq_class total = 0;
  for (const auto& [set, q] : p.coords) {
    mpq_class w = q.norm();
    if (sgn(w) == 0) continue;
    total += w;
    for (int i : set) out[i] += w;
  }
  if (sgn(total) == 0) throw HilbError(ErrorKind::Validation, "all Plücker coordinates vanish");
  for (auto& x : out) x /= total;
  return out;
}

MomentPoint moment_component(const PunctualIdeal& J, int m) {
  if (J.colength() != m) throw HilbError(ErrorKind::ColengthMismatch, "ideal colength differs from m");
  MomentPoint g = moment_grass(plucker_of(J));
  MomentPoint out(J.n);
  for (int i = 0; i < J.n; ++i) out[i] = 1 - g[i] + J.u[i] - 1;  // complement indexing
  return out;
}

std::vector<std::pair<Membership, MomentPoint>> moment_all(const PunctualIdeal& J, int m) {
  if (J.colength() != m) throw HilbError(ErrorKind::ColengthMismatch, "ideal colength differs from m");
  std::vector<std::pair<Membership, MomentPoint>> out;
  for (auto& mb : containing_grassmannians(J, 1, J.n)) {
    MomentPoint p = moment_component(mb.rep, m);
    out.emplace_back(std::move(mb), std::move(p));
  }
  return out;
}

MomentPoint moment_global(const PunctualIdeal& J, int m) {
  auto all = moment_all(J, m);
  if (all.empty()) throw HilbError(ErrorKind::Diagnostic, "ideal lies in no Grassmannian component");
  for (const auto& [mb, p] : all)
    if (p != all.front().second)
      throw HilbError(ErrorKind::Diagnostic, "moment maps of two components disagree");
  return all.front().second;
}

Face locate(const MomentPoint& p, const ComplexKnm& K) {
  if (static_cast<int>(p.size()) != K.n) throw HilbError(ErrorKind::OutsideSimplex, "wrong dimension");
  mpq_class total = 0;
  for (const auto& x : p) {
    if (sgn(x) < 0) throw HilbError(ErrorKind::OutsideSimplex, "negative coordinate");
    total += x;
  }
  if (total != K.m - 1) throw HilbError(ErrorKind::OutsideSimplex, "coordinates do not sum to m - 1");
  if (K.is_point()) {
    Face f{K.n, {}, {}, 0, Lattice(K.n, 0)};
    for (int i = 0; i < K.n; ++i) {
      f.S1.push_back(i);
      f.u[i] = static_cast<int>(mpz_class(p[i].get_num() / p[i].get_den()).get_si());
    }
    return f;
  }
  auto hits = cells_containing(K, p);
  if (hits.empty()) throw HilbError(ErrorKind::Diagnostic, "point is not covered by the complex");
  const HyperCell& c = K.cells[hits.front()];
  Face f{K.n, {}, {}, c.l, c.shift};
  for (int i = 0; i < K.n; ++i) {
    if (p[i] == c.shift[i]) f.S1.push_back(i);
    else if (p[i] == c.shift[i] + 1) f.S2.push_back(i);
  }
  return f;
}

}  // namespace foldhilb

namespace foldhilb {

bool is_smoothable(const PunctualIdeal& J) {
  bool by_form = smoothable_by_form(J);
  int m = J.colength();
  Face f = locate(moment_global(J, m), build_complex(J.n, m));
  bool by_face = f.n <= 2 || is_smoothable_face(f, m);
  if (by_form != by_face)
    throw HilbError(ErrorKind::Diagnostic, "generator form and moment face disagree on smoothability");
  return by_form;
}

}  // namespace foldhilb
