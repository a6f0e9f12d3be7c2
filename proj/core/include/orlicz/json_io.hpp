#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orlicz/filtration.hpp"
#include "orlicz/interp.hpp"
#include "orlicz/lemma_suite.hpp"
#include "orlicz/maximal.hpp"
#include "orlicz/proposition.hpp"
#include "orlicz/step_function.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

using json = nlohmann::json;

// {"kind":"power","p":2} | {"kind":"llog","alpha":1} | {"kind":"chi_infinity"} |
// {"kind":"custom","log2_t":[...],"log2_phi":[...]}
json to_json(const YoungFunction& phi);
YoungFunction young_from_json(const json& j);
// parse_young plus "custom:<path>" pointing at a descriptor file
YoungFunction young_from_arg(const std::string& text);

json to_json(const Element& x);
Element element_from_json(const json& j);
json to_json(const StepFunction& f);
StepFunction step_function_from_json(const json& j);

json to_json(const IndexPair& ix);
json to_json(const ConstantResult& c);
json to_json(const GrowthFit& g);
json to_json(const MonotonicityReport& m);
json to_json(const LemmaSuiteReport& r);
json to_json(const FiltrationCheck& c);
json to_json(const PropositionReport& r);
json to_json(const WeakTypeEstimate& w);

// {kind:"dyadic"|"matrix", N} or {kind:"tensor", factors:[...]} or {kind:"tensor", N, M}
Filtration filtration_from_json(const json& j);

// {filtration:{...}, tests:[...], p_grid:[...], lambda_grid:[...]}
// tests: {"kind":"dirac","mass":m} | {"kind":"rectangle","a":a,"b":b} |
//        {"kind":"power_profile","exponent":e} | {"kind":"random_psd","seed":s,"lo":l,"hi":h}
struct Scenario {
  json filtration;
  json tests;
  std::vector<double> p_grid;
  std::vector<double> lambda_grid;
};

Scenario scenario_from_json(const json& j);
std::vector<Element> build_tests(const Filtration& f, const json& tests);

}  // namespace orlicz
