// foldhilb command-line front end
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "foldhilb/components.hpp"
#include "foldhilb/errors.hpp"
#include "foldhilb/export.hpp"
#include "foldhilb/foldring.hpp"
#include "foldhilb/hypercomplex.hpp"
#include "foldhilb/localmodel.hpp"
#include "foldhilb/momentmap.hpp"

using namespace foldhilb;

namespace {

struct Opts {
  int n = 0, m = 0, k = 0, mprime = 0;
  std::vector<int> u;
  std::string ideal, out, format = "json";
  bool json = false, strict = false;
  int q = 2;
  std::uint64_t seed = 1;
  bool punctual = false, global = false, curve = false;
  bool sing = false, cone = false, polytope = false;
};

constexpr int kExitValidation = 2;
constexpr int kExitDiagnostic = 3;

HilbError invalid(const std::string& what) { return HilbError(ErrorKind::Validation, what); }

void need(bool cond, const std::string& what) {
  if (!cond) throw invalid(what);
}

void emit(const Opts& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text(o.out, text);
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// the ideal of --ideal, or a random member of a random component of (n, m) seeded by --seed
PunctualIdeal load_ideal(const Opts& o) {
  if (!o.ideal.empty()) {
    std::ifstream in(o.ideal);
    if (!in) throw invalid("cannot read ideal file " + o.ideal);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw invalid(std::string("malformed ideal file: ") + e.what());
    }
    int n = 0;
    auto gens = ideal_from_json(j, n);
    return normalize_punctual(FoldRingCtx(n), gens);
  }
  need(o.n >= 1 && o.m >= 1, "give --ideal, or -n and -m for a seeded random ideal");
  std::mt19937_64 rng(o.seed);
  auto comps = punctual_components(o.n, o.m);
  need(!comps.empty(), "no punctual components for these n, m");
  std::uniform_int_distribution<std::size_t> pick(0, comps.size() - 1);
  return random_member(comps[pick(rng)], rng);
}

int run_count(const Opts& o) {
  CountReport r;
  r.n = o.n;
  r.m = o.m;
  need(o.m >= 1, "-m must be >= 1");
  if (o.curve) {
    r.kind = "curve";
    if (!o.u.empty()) {
      auto c = multi_sing_count(o.m, o.u);
      r.value = c.brute;
      r.closed_form = std::to_string(c.inclusion_exclusion);
      r.match = c.match;
    } else {
      need(o.n >= 2, "-n must be >= 2");
      r.value = curve_count(o.n, o.m);
      long long ie = multi_sing_count(o.m, {o.n}).inclusion_exclusion;
      r.closed_form = std::to_string(ie);
      r.match = ie == r.value;
    }
  } else if (o.global) {
    need(o.n >= 1, "-n must be >= 1");
    r.kind = "global";
    r.value = static_cast<long long>(global_components(o.n, o.m).size());
    long long f = global_count_formula(o.n, o.m);
    r.closed_form = std::to_string(f);
    r.match = f == r.value;
  } else {
    need(o.n >= 1, "-n must be >= 1");
    r.kind = "punctual";
    auto c = punctual_count(o.n, o.m);
    r.value = c.direct;
    r.closed_form = c.closed_form.get_str();
    r.match = c.match;
  }
  if (o.json) {
    emit(o, dump_json(r));
  } else {
    std::ostringstream os;
    os << r.value << "\n";
    if (!r.match) os << "finding: closed form gives " << r.closed_form << ", enumeration gives " << r.value << "\n";
    emit(o, os.str());
  }
  return (!r.match && o.strict) ? kExitDiagnostic : 0;
}

int run_components(const Opts& o) {
  need(o.n >= 1 && o.m >= 1, "-n and -m must be >= 1");
  if (o.mprime > 0) {
    need(o.u.size() == 1, "--mprime needs --u with the single level value");
    auto d = stratum_descriptor(o.n, o.m, o.mprime, o.u[0]);
    json j{{"sym_degree", d.sym_degree}, {"graph_l", d.graph_l}, {"graph_m", d.graph_m},
           {"components", d.components}, {"label", d.label}};
    emit(o, o.json ? dump_json(j) : d.label + " (" + std::to_string(d.components) + " components)\n");
    return 0;
  }
  if (o.global) {
    json arr = json::array();
    std::ostringstream os;
    for (const auto& g : global_components(o.n, o.m)) {
      arr.push_back({{"smoothable", g.smoothable}, {"mprime", g.mprime}, {"points", g.points}});
      os << (g.smoothable ? "smoothable" : "elementary m'=" + std::to_string(g.mprime)) << " points=("
         << join(g.points) << ")\n";
    }
    emit(o, o.json ? dump_json(arr) : os.str());
    return 0;
  }
  json arr = json::array();
  std::ostringstream os;
  for (const auto& c : punctual_components(o.n, o.m)) {
    HyperCell cell = cell_of(c);
    arr.push_back({{"l", c.l}, {"u", c.u}, {"cell_l", cell.l}, {"cell_shift", cell.shift}});
    os << "Sigma(" << c.m << "," << c.l << ",(" << join(c.u) << "))  cell Delta_{" << cell.l << "," << c.n
       << "}+(" << join(cell.shift) << ")\n";
  }
  emit(o, o.json ? dump_json(arr) : os.str());
  return 0;
}

int run_complex(const Opts& o) {
  if (o.sing) {
    need(o.n >= 2 && o.k >= 1 && o.k <= o.n, "--sing needs n >= 2 and 1 <= k <= n");
    need(o.format == "json", "singularity complexes export as json only");
    emit(o, dump_json(sing_complex_json(build_sing_complex(o.n, o.k, o.cone))));
    return 0;
  }
  need(o.n >= 1 && o.m >= 1, "-n and -m must be >= 1");
  ComplexKnm K = build_complex(o.n, o.m);
  if (o.format == "json")
    emit(o, dump_json(complex_json(K)));
  else if (o.format == "off")
    emit(o, complex_off(K));
  else if (o.format == "svg")
    emit(o, render_svg(K));
  else
    throw invalid("unknown format " + o.format);
  return 0;
}

int run_moment(const Opts& o) {
  PunctualIdeal J = load_ideal(o);
  int m = J.colength();
  MomentPoint p = moment_global(J, m);
  Face f = locate(p, build_complex(J.n, m));
  MomentReport r;
  r.n = J.n;
  r.m = m;
  for (const auto& x : p) r.point.push_back(x.get_str());
  r.face_s1 = f.S1;
  r.face_s2 = f.S2;
  r.face_l = f.l;
  r.face_shift = f.u;
  if (o.json) {
    emit(o, dump_json(r));
  } else {
    std::ostringstream os;
    os << "mu = (";
    for (std::size_t i = 0; i < r.point.size(); ++i) os << (i ? ", " : "") << r.point[i];
    os << ")\nface: Delta_{" << f.l << "," << f.n << "}(S1={" << join(f.S1) << "}, S2={" << join(f.S2)
       << "}) + (" << join(f.u) << ")\n";
    emit(o, os.str());
  }
  return 0;
}

int run_tangent(const Opts& o) {
  PunctualIdeal J = normalize(load_ideal(o));
  TangentReport r;
  r.n = J.n;
  r.m = J.colength();
  r.l = J.l;
  r.u = J.u;
  r.tangent = tangent_dim(J, r.m);
  r.component_dim = component_dim(J.n, J.l, r.m);
  emit(o, o.json ? dump_json(r)
                 : "tangent dimension " + std::to_string(r.tangent) + " (Grassmannian component of l=" +
                       std::to_string(r.l) + " has dimension " + std::to_string(r.component_dim) + ")\n");
  return 0;
}

int run_classify(const Opts& o) {
  PunctualIdeal J = load_ideal(o);
  ClassifyReport r;
  r.n = J.n;
  r.colength = J.colength();
  auto v = is_singular_point(J, r.colength);
  r.singular = v.singular;
  r.condition = v.condition;
  r.smoothable = is_smoothable(J);
  r.tangent = v.tangent;
  r.component_dim = v.component_dim;
  r.components = v.components;
  r.agree = v.agree;
  if (o.json) {
    emit(o, dump_json(r));
  } else {
    std::ostringstream os;
    if (r.singular)
      os << "singular, condition: " << r.condition;
    else
      os << "smooth";
    os << "; smoothable: " << bool_str(r.smoothable) << "\n";
    if (!r.agree) os << "finding: syntactic and tangent-space tests disagree\n";
    emit(o, os.str());
  }
  if (!r.agree) return kExitDiagnostic;
  return 0;
}

int run_local(const Opts& o) {
  if (o.polytope) {
    need(o.k >= 2, "--polytope needs k >= 2");
    PolytopePk P = toric_polytope(o.k);
    if (o.format == "off")
      emit(o, polytope_off(P));
    else if (o.format == "json")
      emit(o, dump_json(polytope_json(P)));
    else
      throw invalid("polytopes export as json or off");
    return 0;
  }
  need(o.n >= 2 && o.k >= 1 && o.k <= o.n, "need n >= 2 and 1 <= k <= n");
  LocalReport r;
  r.n = o.n;
  r.k = o.k;
  std::vector<PrimeFamily> primes;
  if (!o.u.empty()) {
    primes = punctual_local_ring(o.n, o.k, o.u).primes;
    r.count = static_cast<long long>(primes.size());
    r.formula = r.count;
  } else {
    primes = primary_components(o.n, o.k);
    r.count = static_cast<long long>(primes.size());
    r.formula = local_component_count_formula(o.n, o.k);
  }
  for (const auto& p : primes) r.primes.push_back(p.label + " = " + p.ideal.to_string());
  if (o.json) {
    emit(o, dump_json(r));
  } else {
    std::ostringstream os;
    os << r.count << " components\n";
    for (const auto& s : r.primes) os << "  " << s << "\n";
    emit(o, os.str());
  }
  return r.count == r.formula ? 0 : kExitDiagnostic;
}

int run_verify(const Opts& o) {
  need(o.q == 2 || o.q == 3, "--field-prime must be 2 or 3");
  need(o.n >= 2 && o.k >= 1 && o.k <= o.n, "need n >= 2 and 1 <= k <= n");
  std::vector<VerifyReport> reports;
  auto record = [&](const std::string& target, const FfReport& f) {
    reports.push_back({target, o.q, f.union_equal, f.incomparable, f.points, f.zeros});
  };
  record("reduced", verify_decomposition_ff_report(reduced_ideal(o.n, o.k), primary_components(o.n, o.k), o.q));
  if (!o.u.empty()) {
    auto ring = punctual_local_ring(o.n, o.k, o.u);
    record("punctual", verify_decomposition_ff_report(ring.ideal, ring.primes, o.q));
    bool g = deformation_graph_check(o.n, o.k, o.u, o.q);
    reports.push_back({"deformation graph", o.q, g, g, 0, 0});
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.union_equal && r.incomparable;
  if (o.json) {
    emit(o, dump_json(json(reports)));
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << r.target << " over F_" << r.q << ": ";
      if (r.points == 0)
        os << "graph matches reduced ideal " << bool_str(r.union_equal) << "\n";
      else
        os << "union " << bool_str(r.union_equal) << ", irredundant " << bool_str(r.incomparable) << "\n";
    }
    emit(o, os.str());
  }
  return ok ? 0 : kExitDiagnostic;
}

int run_plot(const Opts& o) {
  need(o.n == 2 || o.n == 3, "plot needs n = 2 or n = 3");
  need(o.m >= 1, "-m must be >= 1");
  emit(o, render_svg(build_complex(o.n, o.m)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert schemes of points on the union of coordinate axes"};
  app.require_subcommand(1);
  Opts o;

  auto common = [&](CLI::App* s) {
    s->add_option("-n", o.n, "number of axes");
    s->add_option("-m", o.m, "length");
    s->add_flag("--json", o.json, "machine-readable report");
    s->add_flag("--strict", o.strict, "treat findings as failures");
    s->add_option("--out", o.out, "output path");
  };
  auto with_ideal = [&](CLI::App* s) {
    s->add_option("--ideal", o.ideal, "ideal JSON file");
    s->add_option("--seed", o.seed, "seed for a random ideal when --ideal is absent");
  };

  auto* count = app.add_subcommand("count", "count irreducible components");
  common(count);
  auto* g1 = count->add_option_group("kind");
  g1->add_flag("--punctual", o.punctual);
  g1->add_flag("--global", o.global);
  g1->add_flag("--curve", o.curve);
  g1->require_option(0, 1);
  count->add_option("--u", o.u, "branch counts of several singular points (with --curve)")->delimiter(',');

  auto* comps = app.add_subcommand("components", "list components");
  common(comps);
  comps->add_flag("--global", o.global);
  comps->add_option("--mprime", o.mprime, "elementary length of a stratum");
  comps->add_option("--u", o.u, "stratum level")->delimiter(',');

  auto* cplx = app.add_subcommand("complex", "export the hypersimplicial or a singularity complex");
  common(cplx);
  cplx->add_option("-k", o.k);
  cplx->add_flag("--sing", o.sing, "singularity complex of the local model");
  cplx->add_flag("--cone", o.cone);
  cplx->add_option("--format", o.format)->check(CLI::IsMember({"json", "off", "svg"}));

  auto* moment = app.add_subcommand("moment", "moment map image of an ideal");
  common(moment);
  with_ideal(moment);

  auto* tangent = app.add_subcommand("tangent", "tangent space dimension");
  common(tangent);
  with_ideal(tangent);

  auto* classify = app.add_subcommand("classify", "singularity and smoothability of an ideal");
  common(classify);
  with_ideal(classify);

  auto* local = app.add_subcommand("local", "local model components");
  common(local);
  local->add_option("-k", o.k);
  local->add_option("--u", o.u, "exponent vector for the punctual local ring")->delimiter(',');
  local->add_flag("--polytope", o.polytope, "export the toric polytope P_k");
  local->add_option("--format", o.format)->check(CLI::IsMember({"json", "off"}));

  auto* verify = app.add_subcommand("verify", "finite-field check of local decompositions");
  common(verify);
  verify->add_option("-k", o.k);
  verify->add_option("--u", o.u)->delimiter(',');
  verify->add_option("--field-prime", o.q)->check(CLI::IsMember({2, 3}));

  auto* plot = app.add_subcommand("plot", "SVG of K_n^[m] for n <= 3");
  common(plot);
  plot->add_option("--format", o.format)->check(CLI::IsMember({"svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*count) return run_count(o);
    if (*comps) return run_components(o);
    if (*cplx) return run_complex(o);
    if (*moment) return run_moment(o);
    if (*tangent) return run_tangent(o);
    if (*classify) return run_classify(o);
    if (*local) return run_local(o);
    if (*verify) return run_verify(o);
    if (*plot) return run_plot(o);
  } catch (const HilbError& e) {
    std::cerr << "error: " << e.what() << "\n";
    bool internal = e.kind() == ErrorKind::Diagnostic || e.kind() == ErrorKind::Budget;
    return internal ? kExitDiagnostic : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
