#include "orlicz/json_io.hpp"

#include <cmath>
#include <fstream>

#include "orlicz/errors.hpp"
#include "orlicz/random.hpp"
#include "orlicz/spectral.hpp"

namespace orlicz {

namespace {

// JSON has no infinity; encode non-finite numbers as strings
json num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json nums(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

std::vector<double> doubles(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw DomainError(std::string(what) + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

const char* structure_name(TracialAlgebra::Structure s) {
  switch (s) {
    case TracialAlgebra::Structure::full:
      return "full";
    case TracialAlgebra::Structure::diagonal:
      return "diagonal";
    case TracialAlgebra::Structure::block_diagonal:
      return "block_diagonal";
  }
  return "full";
}

}  // namespace

json to_json(const YoungFunction& phi) {
  switch (phi.kind()) {
    case YoungKind::power:
      return {{"kind", "power"}, {"p", phi.param()}};
    case YoungKind::llog:
      return {{"kind", "llog"}, {"alpha", phi.param()}};
    case YoungKind::chi_infinity:
      return {{"kind", "chi_infinity"}};
    case YoungKind::custom:
      return {{"kind", "custom"}, {"log2_t", phi.table_log2_t()}, {"log2_phi", phi.table_log2_phi()}};
  }
  return {};
}

YoungFunction young_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power") return YoungFunction::power(j.at("p").get<double>());
    if (kind == "llog") return YoungFunction::llog(j.at("alpha").get<double>());
    if (kind == "chi_infinity" || kind == "chi") return YoungFunction::chi_infinity();
    if (kind == "custom") {
      return YoungFunction::custom(doubles(j.at("log2_t"), "log2_t"), doubles(j.at("log2_phi"), "log2_phi"));
    }
    throw DomainError("unknown Young function kind: " + kind);
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad Young descriptor: ") + e.what());
  }
}

YoungFunction young_from_arg(const std::string& text) {
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) == 0) {
    std::ifstream in(text.substr(prefix.size()));
    if (!in) throw DomainError("cannot open " + text.substr(prefix.size()));
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw DomainError(std::string("bad JSON: ") + e.what());
    }
    return young_from_json(j);
  }
  return parse_young(text);
}

json to_json(const Element& x) {
  const auto& alg = *x.algebra();
  json j;
  j["dims"] = {alg.dim(), alg.dim()};
  j["structure"] = structure_name(alg.structure());
  j["weights"] = alg.weights();
  j["blocks"] = alg.blocks();
  const Eigen::MatrixXcd m = x.dense();
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ii = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  j["real"] = re;
  j["imag"] = im;
  return j;
}

Element element_from_json(const json& j) {
  try {
    const std::string s = j.at("structure").get<std::string>();
    const auto weights = doubles(j.at("weights"), "weights");
    const int d = static_cast<int>(weights.size());
    AlgebraPtr alg;
    if (s == "diagonal") {
      alg = TracialAlgebra::diagonal(weights);
    } else if (s == "full") {
      alg = TracialAlgebra::full(d);
    } else if (s == "block_diagonal") {
      const auto blocks = j.at("blocks").get<std::vector<int>>();
      std::vector<double> masses;
      int off = 0;
      for (int b : blocks) {
        double m = 0.0;
        for (int i = 0; i < b && off + i < d; ++i) m += weights[static_cast<std::size_t>(off + i)];
        masses.push_back(m);
        off += b;
      }
      alg = TracialAlgebra::block_diagonal(blocks, masses);
    } else {
      throw DomainError("unknown structure: " + s);
    }
    const json& re = j.at("real");
    const json& im = j.contains("imag") ? j.at("imag") : json();
    if (!re.is_array() || static_cast<int>(re.size()) != d) throw DomainError("entry array has wrong shape");
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; ++r) {
      const auto row = doubles(re[static_cast<std::size_t>(r)], "real");
      if (static_cast<int>(row.size()) != d) throw DomainError("entry array has wrong shape");
      for (int c = 0; c < d; ++c) {
        const double iv = im.is_array() ? im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>() : 0.0;
        m(r, c) = {row[static_cast<std::size_t>(c)], iv};
      }
    }
    if (alg->commutative()) return Element(alg, Eigen::VectorXd(m.diagonal().real()));
    return Element(alg, m);
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad element: ") + e.what());
  }
}

json to_json(const StepFunction& f) {
  json j{{"breakpoints", f.breaks()}, {"values", f.values()}};
  if (f.truncated_mass() != 0.0) j["truncated_mass"] = f.truncated_mass();
  return j;
}

StepFunction step_function_from_json(const json& j) {
  try {
    return StepFunction(doubles(j.at("breakpoints"), "breakpoints"), doubles(j.at("values"), "values"),
                        j.value("truncated_mass", 0.0));
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad step function: ") + e.what());
  }
}

json to_json(const IndexPair& ix) {
  return {{"lower", num(ix.lower)}, {"upper", num(ix.upper)}, {"error_estimate", num(ix.error_estimate)}};
}

json to_json(const ConstantResult& c) {
  return {{"value", num(c.value)},
          {"argmin_k0", c.argmin_k0},
          {"k_window", {c.k_min, c.k_max}},
          {"tail_estimate", num(c.tail_estimate)}};
}

json to_json(const GrowthFit& g) {
  return {{"p", g.p},
          {"p_prime", g.p_prime},
          {"F", nums(g.F)},
          {"exponent", num(g.exponent)},
          {"intercept", num(g.intercept)},
          {"rms_residual", num(g.rms_residual)}};
}

json to_json(const MonotonicityReport& m) {
  json sizes = json::object();
  for (const auto& [k, n] : m.partition_sizes) sizes[std::to_string(k)] = n;
  return {{"p", m.p},
          {"ratios", nums(m.ratios)},
          {"strictly_decreasing", m.strictly_decreasing},
          {"little_o", m.little_o},
          {"upper_indices_match", m.upper_indices_match},
          {"partition_sizes", sizes},
          {"preconditions_hold", m.preconditions_hold()}};
}

json to_json(const LemmaSuiteReport& r) {
  const auto& o = r.options;
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"instances", c.instances},
                      {"failures", c.failures},
                      {"worst", num(c.worst)},
                      {"tolerance", num(c.tolerance)},
                      {"required", c.required},
                      {"status", c.passed() ? "pass" : "fail"}});
  }
  return {{"seed", o.seed},
          {"options",
           {{"binary_instances", o.binary_instances},
            {"binary_max_dim", o.binary_max_dim},
            {"binary_n_max", o.binary_n_max},
            {"domination_instances", o.domination_instances},
            {"domination_max_dim", o.domination_max_dim},
            {"domination_max_blocks", o.domination_max_blocks},
            {"corner_instances", o.corner_instances},
            {"majorization_instances", o.majorization_instances},
            {"norm_instances", o.norm_instances}}},
          {"checks", checks},
          {"all_passed", r.all_passed()}};
}

json to_json(const FiltrationCheck& c) {
  return {{"trials", c.trials},
          {"unital_error", c.unital_error},
          {"trace_error", c.trace_error},
          {"positivity_min", c.positivity_min},
          {"tower_error", c.tower_error},
          {"passed", c.passed}};
}

json to_json(const PropositionReport& r) {
  return {{"k0", r.k0},
          {"eta", r.eta},
          {"F", num(r.F)},
          {"bracket", num(r.bracket)},
          {"level",
           {{"level_ratio", num(r.level_ratio)},
            {"mass_factor", num(r.mass_factor)},
            {"mass_factor_bound", kMassFactorBound},
            {"residual", r.residual},
            {"status", r.level_ok ? "pass" : "fail"}}},
          {"domination",
           {{"min_eigenvalues", nums(r.min_eigenvalues)},
            {"min_eigenvalue", num(r.min_eigenvalue)},
            {"threshold", num(r.threshold)},
            {"status", r.domination_ok ? "pass" : "fail"}}},
          {"majorization", {{"status", r.majorization_ok ? "pass" : "fail"}}},
          {"norm",
           {{"ratio", num(r.norm_ratio)},
            {"bound", num(r.norm_bound)},
            {"trace_z", num(r.trace_z)},
            {"lp_z", num(r.lp_z)},
            {"linf_z", num(r.linf_z)},
            {"status", r.norm_ok ? "pass" : "fail"}}},
          {"passed", r.passed()}};
}

json to_json(const WeakTypeEstimate& w) {
  return {{"constant", num(w.constant)},
          {"worst_test", w.worst_test},
          {"worst_lambda", num(w.worst_lambda)},
          {"upper_bound_only", w.upper_bound_only},
          {"per_test", nums(w.per_test)}};
}

Filtration filtration_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "dyadic") return Filtration::dyadic(j.at("N").get<int>());
    if (kind == "matrix") return Filtration::matrix(j.at("N").get<int>());
    if (kind == "tensor") {
      if (j.contains("factors")) {
        const json& fs = j.at("factors");
        if (!fs.is_array() || fs.size() != 2) throw DomainError("tensor needs two factors");
        return Filtration::tensor(filtration_from_json(fs[0]), filtration_from_json(fs[1]));
      }
      const int n = j.at("N").get<int>();
      return Filtration::tensor(Filtration::dyadic(n), Filtration::dyadic(j.value("M", n)));
    }
    throw DomainError("unknown filtration kind: " + kind);
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad filtration: ") + e.what());
  }
}

Scenario scenario_from_json(const json& j) {
  try {
    Scenario s;
    s.filtration = j.at("filtration");
    s.tests = j.value("tests", json::array());
    if (j.contains("p_grid")) s.p_grid = doubles(j.at("p_grid"), "p_grid");
    if (j.contains("lambda_grid")) s.lambda_grid = doubles(j.at("lambda_grid"), "lambda_grid");
    return s;
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad scenario: ") + e.what());
  }
}

std::vector<Element> build_tests(const Filtration& f, const json& tests) {
  if (!tests.is_array()) throw DomainError("tests must be an array");
  std::vector<Element> out;
  try {
    for (const auto& t : tests) {
      const std::string kind = t.at("kind").get<std::string>();
      if (kind == "dirac") {
        out.push_back(dirac(f, t.value("mass", 1.0)));
      } else if (kind == "rectangle") {
        out.push_back(rectangle(f, t.at("a").get<int>(), t.value("b", 0)));
      } else if (kind == "power_profile") {
        out.push_back(power_profile(f, t.at("exponent").get<double>()));
      } else if (kind == "random_psd") {
        Rng rng(t.value("seed", std::uint64_t{0}));
        out.push_back(random_psd(rng, f.algebra(), t.value("lo", 0.0), t.value("hi", 1.0)));
      } else {
        throw DomainError("unknown test kind: " + kind);
      }
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad test element: ") + e.what());
  }
  return out;
}

}  // namespace orlicz
