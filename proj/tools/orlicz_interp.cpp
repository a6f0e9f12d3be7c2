#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orlicz/errors.hpp"
#include "orlicz/interp.hpp"
#include "orlicz/json_io.hpp"
#include "orlicz/lemma_suite.hpp"
#include "orlicz/maximal.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/proposition.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;

struct ConfigError : Error {
  using Error::Error;
};

// canonical JSON document plus its CSV projection
struct Output {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit(const Output& out, const std::string& format, const std::string& path) {
  std::ostringstream s;
  if (format == "csv") {
    for (std::size_t i = 0; i < out.header.size(); ++i) s << (i ? "," : "") << out.header[i];
    s << "\n";
    for (const auto& r : out.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << r[i];
      s << "\n";
    }
  } else {
    s << out.doc.dump(2) << "\n";
  }
  if (path.empty() || path == "-") {
    std::cout << s.str();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << s.str();
}

void require_p_grid(const std::vector<double>& p) {
  if (p.empty()) throw ConfigError("empty p grid");
  for (double v : p) {
    if (!(v > 1.0)) throw ConfigError("p values must exceed 1");
  }
}

YoungFunction young_arg(const std::string& s) {
  try {
    return young_from_arg(s);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

const char* status_of(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const DivergenceError&) {
    return "divergent";
  } catch (const InfeasibleError&) {
    return "infeasible";
  } catch (const DomainError&) {
    return "domain_error";
  } catch (...) {
    return "error";
  }
}

struct Options {
  std::string phi1 = "llog:2";
  std::string phi2 = "chi";
  std::vector<std::string> phis{"power:2", "llog:1", "llog:2"};
  std::vector<double> p;
  std::vector<double> alpha{0, 1, 2};
  std::vector<int> n{6};
  int m = 6;
  std::uint64_t seed = 0;
  double eta = 1.0;
  int k0 = 0;
  bool k0_given = false;
  int k_min = -32;
  int k_max = 32;
  std::vector<int> rect{1, 1};
  std::vector<double> masses{1, 16, 256};
  std::string filtration;
  std::string scenario;
  std::string out;
  std::string format = "json";
};

// ---- subcommands

Output run_indices(const Options& o) {
  Output out;
  out.header = {"phi", "lower", "upper", "error_estimate"};
  out.doc = {{"indices", json::array()}};
  for (const auto& s : o.phis) {
    const auto phi = young_arg(s);
    const IndexPair ix = matuszewska_indices(phi);
    json row = to_json(ix);
    row["phi"] = phi.label();
    out.doc["indices"].push_back(row);
    out.rows.push_back({phi.label(), fmt(ix.lower), fmt(ix.upper), fmt(ix.error_estimate)});
  }
  return out;
}

int run_constant(const Options& o, bool is_f, Output& out) {
  require_p_grid(o.p);
  const auto phi1 = young_arg(o.phi1);
  const auto phi2 = young_arg(o.phi2);
  WindowOptions wo;
  wo.eta = o.eta;
  out.header = {"p", "status", "value", "argmin_k0", "k_min", "k_max", "tail_estimate"};
  out.doc = {{"phi1", to_json(phi1)}, {"phi2", to_json(phi2)}, {"eta", o.eta}, {"rows", json::array()}};
  int failures = 0;
  for (double p : o.p) {
    json row{{"p", p}};
    try {
      ConstantResult c;
      if (o.k0_given) {
        c = is_f ? constant_F_at(p, phi1, phi2, o.k0, wo) : constant_G_at(p, phi1, phi2, o.k0, wo);
      } else {
        c = is_f ? constant_F(p, phi1, phi2, wo) : constant_G(p, phi1, phi2, wo);
      }
      row.update(to_json(c));
      row["status"] = "ok";
      out.rows.push_back({fmt(p), "ok", fmt(c.value), std::to_string(c.argmin_k0), std::to_string(c.k_min),
                          std::to_string(c.k_max), fmt(c.tail_estimate)});
    } catch (const DomainError&) {
      throw;
    } catch (const Error&) {
      ++failures;
      const char* st = status_of(std::current_exception());
      row["status"] = st;
      out.rows.push_back({fmt(p), st, "", "", "", "", ""});
    }
    out.doc["rows"].push_back(row);
  }
  // a single point is a required computation, a longer grid is a sweep
  return (o.p.size() == 1 && failures == 1) ? kExitDivergence : kExitOk;
}

Output run_growth_fit(const Options& o) {
  require_p_grid(o.p);
  if (o.alpha.empty()) throw ConfigError("empty alpha list");
  Output out;
  out.header = {"alpha", "p", "p_prime", "F", "G", "fit_exponent", "status"};
  out.doc = {{"fits", json::array()}};
  const auto chi = YoungFunction::chi_infinity();
  for (double a : o.alpha) {
    const auto phi = YoungFunction::llog(a);
    json entry{{"alpha", a}, {"phi", phi.label()}};
    try {
      const GrowthFit g = growth_exponent_fit(phi, o.p);
      entry.update(to_json(g));
      json gs = json::array();
      for (std::size_t i = 0; i < g.p.size(); ++i) {
        std::string gv;
        try {
          const double v = constant_G(g.p[i], phi, chi).value;
          gs.push_back(v);
          gv = fmt(v);
        } catch (const Error&) {
          gs.push_back(status_of(std::current_exception()));
        }
        out.rows.push_back({fmt(a), fmt(g.p[i]), fmt(g.p_prime[i]), fmt(g.F[i]), gv, fmt(g.exponent), "ok"});
      }
      entry["G"] = gs;
      entry["status"] = "ok";
    } catch (const Error&) {
      const char* st = status_of(std::current_exception());
      entry["status"] = st;
      for (double p : o.p) out.rows.push_back({fmt(a), fmt(p), "", "", "", "", st});
    }
    out.doc["fits"].push_back(entry);
  }
  return out;
}

Output run_monotonicity(const Options& o) {
  require_p_grid(o.p);
  const auto psi = young_arg(o.phi1);
  const auto phi = young_arg(o.phi2);
  const MonotonicityReport m = monotonicity_ratio(o.p, psi, phi);
  Output out;
  out.doc = to_json(m);
  out.doc["psi"] = to_json(psi);
  out.doc["phi"] = to_json(phi);
  out.header = {"p", "ratio"};
  for (std::size_t i = 0; i < m.p.size(); ++i) out.rows.push_back({fmt(m.p[i]), fmt(m.ratios[i])});
  return out;
}

Output run_verify_lemmas(const Options& o) {
  LemmaSuiteOptions lo;
  lo.seed = o.seed;
  const LemmaSuiteReport r = verify_lemmas(lo);
  Output out;
  out.doc = to_json(r);
  out.header = {"name", "instances", "failures", "worst", "tolerance", "required", "status"};
  for (const auto& c : r.checks) {
    out.rows.push_back({c.name, std::to_string(c.instances), std::to_string(c.failures), fmt(c.worst),
                        fmt(c.tolerance), c.required ? "true" : "false", c.passed() ? "pass" : "fail"});
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad JSON in ") + path + ": " + e.what());
  }
}

// --filtration (inline JSON), --scenario (file) or --n/--m
Filtration make_filtration(const Options& o, int n) {
  if (!o.filtration.empty()) {
    json j;
    try {
      j = json::parse(o.filtration);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("bad --filtration: ") + e.what());
    }
    return filtration_from_json(j);
  }
  if (!o.scenario.empty()) return filtration_from_json(scenario_from_json(load_json_file(o.scenario)).filtration);
  if (o.m <= 0) return Filtration::dyadic(n);
  return Filtration::tensor(Filtration::dyadic(n), Filtration::dyadic(o.m));
}

Output run_verify_proposition(const Options& o) {
  const double p = o.p.empty() ? 1.5 : o.p.front();
  require_p_grid({p});
  if (o.n.size() != 1) throw ConfigError("verify-proposition takes a single --n");
  if (o.rect.empty() || o.rect.size() > 2) throw ConfigError("--rect takes one or two levels");
  const auto phi1 = young_arg(o.phi1);
  const auto phi2 = young_arg(o.phi2);
  const Filtration f = make_filtration(o, o.n.front());
  const Element r = rectangle(f, o.rect[0], o.rect.size() > 1 ? o.rect[1] : 0);
  const PropositionReport rep = verify_proposition(f, r, p, phi1, phi2, o.eta, o.k_min, o.k_max);
  Output out;
  out.doc = to_json(rep);
  out.doc["filtration"] = f.label();
  out.doc["p"] = p;
  out.header = {"item", "measured", "bound", "status"};
  auto st = [](bool ok) { return std::string(ok ? "pass" : "fail"); };
  out.rows.push_back({"level_ratio", fmt(rep.level_ratio), "1", st(rep.level_ok)});
  out.rows.push_back({"mass_factor", fmt(rep.mass_factor), fmt(kMassFactorBound), st(rep.level_ok)});
  out.rows.push_back({"min_eigenvalue", fmt(rep.min_eigenvalue), fmt(rep.threshold), st(rep.domination_ok)});
  out.rows.push_back({"majorization", "", "", st(rep.majorization_ok)});
  out.rows.push_back({"norm_ratio", fmt(rep.norm_ratio), fmt(rep.norm_bound), st(rep.norm_ok)});
  return out;
}

Output run_weak_type(const Options& o) {
  std::vector<std::string> phis = o.phis;
  Output out;
  out.header = {"phi", "filtration", "constant", "worst_test", "worst_lambda", "upper_bound_only", "status"};
  out.doc = {{"rows", json::array()}};
  std::vector<Filtration> filtrations;
  std::vector<json> test_specs;
  std::vector<std::vector<double>> grids;
  if (!o.scenario.empty()) {
    const Scenario sc = scenario_from_json(load_json_file(o.scenario));
    filtrations.push_back(filtration_from_json(sc.filtration));
    test_specs.push_back(sc.tests);
    grids.push_back(sc.lambda_grid);
  } else {
    if (o.masses.empty()) throw ConfigError("empty mass list");
    for (int n : o.n) {
      filtrations.push_back(make_filtration(o, n));
      json tests = json::array();
      for (double mass : o.masses) tests.push_back({{"kind", "dirac"}, {"mass", mass}});
      test_specs.push_back(tests);
      grids.push_back(dyadic_lambda_grid(-2, n + std::max(o.m, 0) + 10));
    }
  }
  for (const auto& s : phis) {
    const auto phi = young_arg(s);
    for (std::size_t i = 0; i < filtrations.size(); ++i) {
      const Filtration& f = filtrations[i];
      json row{{"phi", phi.label()}, {"filtration", f.label()}};
      try {
        const auto tests = build_tests(f, test_specs[i]);
        if (tests.empty()) throw ConfigError("empty test set");
        if (grids[i].empty()) throw ConfigError("empty lambda grid");
        const WeakTypeEstimate w = estimate_weak_orlicz_constant(f, phi, tests, grids[i]);
        row.update(to_json(w));
        row["status"] = "ok";
        out.rows.push_back({phi.label(), f.label(), fmt(w.constant), std::to_string(w.worst_test),
                            fmt(w.worst_lambda), w.upper_bound_only ? "true" : "false", "ok"});
      } catch (const DomainError& e) {
        throw ConfigError(e.what());
      } catch (const ConfigError&) {
        throw;
      } catch (const Error&) {
        const char* st = status_of(std::current_exception());
        row["status"] = st;
        out.rows.push_back({phi.label(), f.label(), "", "", "", "", st});
      }
      out.doc["rows"].push_back(row);
    }
  }
  return out;
}

Output run_strong_maximal(const Options& o) {
  require_p_grid(o.p);
  if (o.p.size() < 2) throw ConfigError("strong-maximal needs at least two p values");
  Output out;
  out.header = {"filtration", "p", "p_prime", "ratio", "slope"};
  out.doc = {{"rows", json::array()}};
  for (int n : o.n) {
    const Filtration first = Filtration::dyadic(n);
    LpSlope s;
    std::string label = first.label();
    if (o.m > 0) {
      const Filtration second = Filtration::dyadic(o.m);
      label += "x" + second.label();
      s = strong_maximal_slope_separable(first, second, o.p);
    } else {
      s = strong_maximal_slope(first, o.p);
    }
    out.doc["rows"].push_back({{"filtration", label},
                               {"p", s.p},
                               {"p_prime", s.p_prime},
                               {"ratio", s.ratio},
                               {"slope", s.slope},
                               {"intercept", s.intercept}});
    for (std::size_t i = 0; i < s.p.size(); ++i) {
      out.rows.push_back({label, fmt(s.p[i]), fmt(s.p_prime[i]), fmt(s.ratio[i]), fmt(s.slope)});
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation constants, spectral lemmas and maximal inequalities"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Output path (default stdout)");
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto young_pair = [&](CLI::App* c) {
    c->add_option("--phi1", o.phi1, "Young function: power:p, llog:a, chi, custom:<file>")->capture_default_str();
    c->add_option("--phi2", o.phi2, "Young function")->capture_default_str();
  };
  auto p_list = [&](CLI::App* c) { c->add_option("--p", o.p, "Comma separated exponents > 1")->delimiter(','); };
  auto filtration_opts = [&](CLI::App* c) {
    c->add_option("--n", o.n, "Depth of the first factor (comma list for sweeps)")->delimiter(',')->capture_default_str();
    c->add_option("--m", o.m, "Depth of the second factor, 0 for a single filtration")->capture_default_str();
    c->add_option("--filtration", o.filtration, "Inline JSON filtration {kind,N,M,factors}");
    c->add_option("--scenario", o.scenario, "JSON scenario file {filtration,tests,p_grid,lambda_grid}");
  };

  auto* indices = app.add_subcommand("indices", "Matuszewska indices; CSV: phi,lower,upper,error_estimate");
  indices->add_option("--phi", o.phis, "Young functions (comma list)")->delimiter(',')->capture_default_str();
  common(indices);

  auto* cf = app.add_subcommand("constant-f", "F(p) over the p grid; CSV: p,status,value,argmin_k0,k_min,k_max,tail_estimate");
  auto* cg = app.add_subcommand("constant-g", "G(p) over the p grid; same columns as constant-f");
  for (auto* c : {cf, cg}) {
    young_pair(c);
    p_list(c);
    c->add_option("--eta", o.eta, "Level scale")->capture_default_str();
    c->add_option("--k0", o.k0, "Fix the splitting index instead of minimizing");
    common(c);
  }

  auto* gf = app.add_subcommand("growth-fit", "Growth exponents of F for llog:alpha; CSV: alpha,p,p_prime,F,G,fit_exponent,status");
  gf->add_option("--alpha", o.alpha, "Comma list of alpha")->delimiter(',');
  p_list(gf);
  common(gf);

  auto* mono = app.add_subcommand("monotonicity", "F(p; phi1)/F(p; phi2), defaults llog:1 and llog:2; CSV: p,ratio");
  young_pair(mono);
  p_list(mono);
  common(mono);

  auto* lem = app.add_subcommand("verify-lemmas", "Randomized spectral lemma suite; CSV: name,instances,failures,worst,tolerance,required,status");
  lem->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  common(lem);

  auto* prop = app.add_subcommand("verify-proposition", "Projection chain and majorizer checks; CSV: item,measured,bound,status");
  young_pair(prop);
  p_list(prop);
  filtration_opts(prop);
  prop->add_option("--rect", o.rect, "Rectangle levels a,b")->delimiter(',')->capture_default_str();
  prop->add_option("--eta", o.eta, "Level scale")->capture_default_str();
  prop->add_option("--kmin", o.k_min, "Lower chain index")->capture_default_str();
  prop->add_option("--kmax", o.k_max, "Upper chain index")->capture_default_str();
  common(prop);

  auto* weak = app.add_subcommand("weak-type", "Weak Orlicz type constants, default phi power:1,llog:1; CSV: phi,filtration,constant,worst_test,worst_lambda,upper_bound_only,status");
  weak->add_option("--phi", o.phis, "Young functions (comma list)")->delimiter(',');
  weak->add_option("--masses", o.masses, "Dirac masses (comma list)")->delimiter(',')->capture_default_str();
  filtration_opts(weak);
  common(weak);

  auto* sm = app.add_subcommand("strong-maximal", "L_p lower bounds and log-log slope; CSV: filtration,p,p_prime,ratio,slope");
  p_list(sm);
  sm->add_option("--n", o.n, "Depth of the first factor (comma list)")->delimiter(',');
  sm->add_option("--m", o.m, "Depth of the second factor, 0 for one dimension")->capture_default_str();
  common(sm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  o.k0_given = cf->count("--k0") + cg->count("--k0") > 0;
  if (mono->parsed()) {
    if (mono->count("--phi1") == 0) o.phi1 = "llog:1";
    if (mono->count("--phi2") == 0) o.phi2 = "llog:2";
  }
  if (weak->parsed() && weak->count("--phi") == 0) o.phis = {"power:1", "llog:1"};
  if (sm->parsed() && sm->count("--m") == 0) o.m = 0;
  if (sm->parsed() && sm->count("--n") == 0) o.n = {20};

  try {
    Output out;
    int code = kExitOk;
    if (indices->parsed()) {
      out = run_indices(o);
    } else if (cf->parsed()) {
      code = run_constant(o, true, out);
    } else if (cg->parsed()) {
      code = run_constant(o, false, out);
    } else if (gf->parsed()) {
      out = run_growth_fit(o);
    } else if (mono->parsed()) {
      out = run_monotonicity(o);
    } else if (lem->parsed()) {
      out = run_verify_lemmas(o);
    } else if (prop->parsed()) {
      out = run_verify_proposition(o);
    } else if (weak->parsed()) {
      out = run_weak_type(o);
    } else if (sm->parsed()) {
      out = run_strong_maximal(o);
    }
    emit(out, o.format, o.out);
    return code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnsupportedError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PreconditionError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitDivergence;
  }
}
