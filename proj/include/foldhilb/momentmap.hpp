#pragma once

#include <map>
#include <vector>

#include "foldhilb/foldring.hpp"
#include "foldhilb/hypercomplex.hpp"

namespace foldhilb {

struct PluckerVector {
  int l = 0, n = 0;
  std::map<std::vector<int>, GaussRational> coords;  // l-subsets in lexicographic order
};

using MomentPoint = RatPoint;

// maximal minors of the generator matrix A of J (zero at forced columns)
PluckerVector plucker_of(const PunctualIdeal& J);
MomentPoint moment_grass(const PluckerVector& p);
// sum |q_A|^2 e_{[n] \ A} / sum |q_A|^2 + u - 1
MomentPoint moment_component(const PunctualIdeal& J, int m);
// evaluates every Grassmannian component through J and requires equal values
MomentPoint moment_global(const PunctualIdeal& J, int m);
std::vector<std::pair<Membership, MomentPoint>> moment_all(const PunctualIdeal& J, int m);

// smallest face of K containing p
Face locate(const MomentPoint& p, const ComplexKnm& K);

}  // namespace foldhilb
