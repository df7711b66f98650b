#include "foldhilb/export.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "foldhilb/errors.hpp"

namespace foldhilb {

namespace {

json face_json(const Face& f) {
  return json{{"s1", f.S1}, {"s2", f.S2}, {"l", f.l}, {"shift", f.u}};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* cell_color(int l) {
  static const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1"};
  return palette[l % 5];
}

std::vector<Lattice> complex_vertices(const ComplexKnm& K) {
  std::set<Lattice> vs;
  for (const auto& c : K.cells)
    for (auto& v : c.vertices()) vs.insert(v);
  if (K.cells.empty()) vs.insert(Lattice(K.n, 0));
  return {vs.begin(), vs.end()};
}

std::string off_text(int dim, const std::vector<std::vector<long long>>& coords,
                     const std::vector<std::vector<int>>& faces) {
  std::ostringstream os;
  if (dim == 3)
    os << "OFF\n";
  else
    os << "nOFF\n" << dim << "\n";
  os << coords.size() << " " << faces.size() << " 0\n";
  for (const auto& c : coords) {
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << "\n";
  }
  for (const auto& f : faces) {
    os << f.size();
    for (int v : f) os << " " << v;
    os << "\n";
  }
  return os.str();
}

json rational_json(const mpq_class& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
    throw HilbError(ErrorKind::Validation, "coefficient too large for the ideal file format");
  return json::array({q.get_num().get_si(), q.get_den().get_si()});
}

json gauss_json(const GaussRational& g) {
  auto re = rational_json(g.re), im = rational_json(g.im);
  return json::array({re[0], re[1], im[0], im[1]});
}

mpq_class rational_from(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return q;
  }
  throw HilbError(ErrorKind::Validation, "coefficient must be an integer or a rational string");
}

GaussRational gauss_from(const json& j) {
  if (j.is_array()) {
    if (j.size() != 4) throw HilbError(ErrorKind::Validation, "complex coefficient needs [rn, rd, in, id]");
    for (const auto& e : j)
      if (!e.is_number_integer()) throw HilbError(ErrorKind::Validation, "complex coefficient entries must be integers");
    if (j[1].get<long>() == 0 || j[3].get<long>() == 0) throw HilbError(ErrorKind::Validation, "zero denominator");
    return GaussRational(j[0].get<long>(), j[1].get<long>(), j[2].get<long>(), j[3].get<long>());
  }
  return GaussRational(rational_from(j));
}

}  // namespace

json complex_json(const ComplexKnm& K) {
  std::vector<int> cell_order(K.cells.size());
  for (std::size_t i = 0; i < cell_order.size(); ++i) cell_order[i] = static_cast<int>(i);
  std::sort(cell_order.begin(), cell_order.end(), [&](int a, int b) {
    return std::tie(K.cells[a].l, K.cells[a].shift) < std::tie(K.cells[b].l, K.cells[b].shift);
  });
  std::vector<int> cell_rank(K.cells.size());
  for (std::size_t r = 0; r < cell_order.size(); ++r) cell_rank[cell_order[r]] = static_cast<int>(r);

  std::vector<int> face_order(K.faces.size());
  for (std::size_t i = 0; i < face_order.size(); ++i) face_order[i] = static_cast<int>(i);
  auto key = [&](int f) { return std::tie(K.faces[f].S1, K.faces[f].S2, K.faces[f].l, K.faces[f].u); };
  std::sort(face_order.begin(), face_order.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<int> face_rank(K.faces.size());
  for (std::size_t r = 0; r < face_order.size(); ++r) face_rank[face_order[r]] = static_cast<int>(r);

  json cells = json::array();
  for (int i : cell_order) cells.push_back({{"l", K.cells[i].l}, {"shift", K.cells[i].shift}});
  json faces = json::array();
  for (int f : face_order) faces.push_back(face_json(K.faces[f]));

  std::vector<std::array<int, 3>> adj;
  for (const auto& a : K.adjacency) {
    int i = cell_rank[a.i], j = cell_rank[a.j];
    if (i > j) std::swap(i, j);
    adj.push_back({i, j, face_rank[a.face]});
  }
  std::sort(adj.begin(), adj.end());

  return json{{"n", K.n},         {"m", K.m},         {"vertices", complex_vertices(K)},
              {"cells", cells},   {"faces", faces},   {"adjacency", adj}};
}

json polytope_json(const PolytopePk& P) {
  json vs = json::array();
  for (const auto& v : P.vertices) vs.push_back({{"label", v.label}, {"coords", v.coords}});
  return json{{"k", P.k}, {"dim", P.dim}, {"vertices", vs}, {"facets", P.facets}};
}

json sing_complex_json(const SingComplex& S) {
  std::vector<const SingCell*> cells;
  for (const auto& c : S.cells) cells.push_back(&c);
  std::sort(cells.begin(), cells.end(), [](const SingCell* a, const SingCell* b) {
    return std::tie(a->label, a->vertices) < std::tie(b->label, b->vertices);
  });
  std::set<std::string> vertex_set;
  json jc = json::array();
  for (const SingCell* c : cells) {
    vertex_set.insert(c->vertices.begin(), c->vertices.end());
    json cell{{"label", c->label},
              {"kind", c->kind == CellKind::Simplex ? "simplex" : "polytope"},
              {"prime", S.primes.at(c->prime).label},
              {"vertices", c->vertices}};
    if (c->polytope) cell["polytope"] = polytope_json(*c->polytope);
    jc.push_back(cell);
  }
  json primes = json::array();
  for (const auto& p : S.primes)
    primes.push_back({{"label", p.label}, {"kind", prime_kind_name(p.kind)}, {"ideal", p.ideal.to_string()}});
  return json{{"n", S.n},
              {"k", S.k},
              {"cone", S.cone},
              {"variables", S.ring.variables},
              {"vertices", std::vector<std::string>(vertex_set.begin(), vertex_set.end())},
              {"cells", jc},
              {"primes", primes}};
}

std::string complex_off(const ComplexKnm& K) {
  auto vs = complex_vertices(K);
  std::map<Lattice, int> index;
  std::vector<std::vector<long long>> coords;
  for (const auto& v : vs) {
    index[v] = static_cast<int>(coords.size());
    coords.emplace_back(v.begin(), v.end());
  }
  std::vector<std::vector<int>> faces;
  for (const auto& c : K.cells) {
    std::vector<int> f;
    for (const auto& v : c.vertices()) f.push_back(index.at(v));
    faces.push_back(f);
  }
  return off_text(K.n, coords, faces);
}

std::string polytope_off(const PolytopePk& P) {
  std::vector<std::vector<long long>> coords;
  for (const auto& v : P.vertices) coords.emplace_back(v.coords.begin(), v.coords.end());
  return off_text(P.dim, coords, P.facets);
}

std::string render_svg(const ComplexKnm& K, const SvgOptions& opt) {
  if (K.n != 2 && K.n != 3) throw HilbError(ErrorKind::Validation, "svg rendering needs n = 2 or n = 3");
  const double W = opt.width, H = opt.height, M = opt.margin;
  const double scale = K.m > 1 ? K.m - 1 : 1;
  // corners of the simplex for the unit vectors e_1, e_2, e_3
  std::vector<std::pair<double, double>> corner;
  if (K.n == 3)
    corner = {{M, H - M}, {W - M, H - M}, {W / 2, M}};
  else
    corner = {{M, H / 2}, {W - M, H / 2}};
  auto project = [&](const Lattice& v) {
    double x = 0, y = 0;
    if (K.cells.empty()) return std::make_pair(W / 2, H / 2);
    for (int i = 0; i < K.n; ++i) {
      x += v[i] * corner[i].first / scale;
      y += v[i] * corner[i].second / scale;
    }
    return std::make_pair(x, y);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\"" << opt.height
     << "\" viewBox=\"0 0 " << opt.width << " " << opt.height << "\">\n";
  os << "<title>K_" << K.n << "^[" << K.m << "]</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& c : K.cells) {
    auto vs = c.vertices();
    std::ostringstream shift;
    for (std::size_t i = 0; i < c.shift.size(); ++i) shift << (i ? "," : "") << c.shift[i];
    if (K.n == 3) {
      os << "<polygon class=\"cell l" << c.l << "\" data-shift=\"" << shift.str() << "\" points=\"";
      for (std::size_t i = 0; i < vs.size(); ++i) {
        auto [x, y] = project(vs[i]);
        os << (i ? " " : "") << fmt(x) << "," << fmt(y);
      }
      os << "\" fill=\"" << cell_color(c.l) << "\" fill-opacity=\"0.6\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    } else {
      auto [x1, y1] = project(vs.front());
      auto [x2, y2] = project(vs.back());
      os << "<line class=\"cell l" << c.l << "\" data-shift=\"" << shift.str() << "\" x1=\"" << fmt(x1)
         << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2) << "\" stroke=\""
         << cell_color(c.l) << "\" stroke-width=\"6\"/>\n";
    }
  }
  for (const auto& v : complex_vertices(K)) {
    auto [x, y] = project(v);
    os << "<circle class=\"vertex\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(opt.dot_radius)
       << "\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<SeparatedPoly> ideal_from_json(const json& j, int& n) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
    throw HilbError(ErrorKind::Validation, "ideal file needs fields n and generators");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw HilbError(ErrorKind::Validation, "n must be a positive integer");
  n = j["n"].get<int>();
  std::vector<SeparatedPoly> gens;
  for (const auto& g : j["generators"]) {
    SeparatedPoly p(n);
    if (g.contains("constant")) p.constant = gauss_from(g["constant"]);
    if (g.contains("branches")) {
      const auto& br = g["branches"];
      if (!br.is_array() || static_cast<int>(br.size()) > n)
        throw HilbError(ErrorKind::Validation, "branches must be a list of at most n coefficient lists");
      for (std::size_t i = 0; i < br.size(); ++i) {
        if (!br[i].is_array()) throw HilbError(ErrorKind::Validation, "branch must be a coefficient list");
        for (std::size_t s = 0; s < br[i].size(); ++s)
          p.add_term(static_cast<int>(i), static_cast<int>(s) + 1, gauss_from(br[i][s]));
      }
    }
    p.trim();
    gens.push_back(p);
  }
  return gens;
}

json ideal_to_json(int n, const std::vector<SeparatedPoly>& gens) {
  json jg = json::array();
  for (const auto& p : gens) {
    json br = json::array();
    for (int i = 0; i < n; ++i) {
      json coeffs = json::array();
      for (const auto& c : p.branches[i]) coeffs.push_back(gauss_json(c));
      br.push_back(coeffs);
    }
    jg.push_back({{"constant", gauss_json(p.constant)}, {"branches", br}});
  }
  return json{{"n", n}, {"generators", jg}};
}

}  // namespace foldhilb
