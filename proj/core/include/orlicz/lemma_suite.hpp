#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orlicz {

struct LemmaSuiteOptions {
  std::uint64_t seed = 0;
  int binary_instances = 200;
  int binary_max_dim = 16;
  int binary_n_max = 40;
  int domination_instances = 1000;
  int domination_max_dim = 16;
  int domination_max_blocks = 6;
  int corner_instances = 100;
  int majorization_instances = 200;
  int norm_instances = 500;
};

struct LemmaCheck {
  std::string name;
  int instances = 0;
  int failures = 0;
  double worst = 0.0;      // worst measured quantity, compared against tolerance
  double tolerance = 0.0;
  bool required = true;    // informational checks do not affect all_passed
  bool passed() const { return failures == 0; }
};

struct LemmaSuiteReport {
  LemmaSuiteOptions options;
  std::vector<LemmaCheck> checks;
  bool all_passed() const;
  const LemmaCheck& check(const std::string& name) const;
};

// Randomized verification of the spectral lemmas; deterministic for a given seed.
LemmaSuiteReport verify_lemmas(const LemmaSuiteOptions& options);

}  // namespace orlicz
