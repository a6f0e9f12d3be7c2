#pragma once

#include <cstdint>
#include <functional>

namespace orlicz {

struct SeriesOptions {
  std::int64_t min_terms = 65;
  double relative_tolerance = 1e-13;
  std::int64_t max_terms = std::int64_t{1} << 23;
};

struct SeriesResult {
  double log2_sum = 0.0;       // -inf for an empty or zero sum
  std::int64_t last_index = 0; // last index actually summed
  double tail_bound = 0.0;     // geometric majorant for the omitted tail, relative to the sum
};

// Sums 2^{log2_term(k)} for k = start, start+dir, ... (dir = +1 or -1).
// Terms are assumed to have non-increasing ratios once k passes `regular_from`
// in the summation direction; a vanishing term ends a downward sum (Phi is monotone).
// Throws DivergenceError on infinite terms or when the cap is hit.
SeriesResult sum_outward(const std::function<double(std::int64_t)>& log2_term, std::int64_t start, int dir,
                         std::int64_t regular_from, const SeriesOptions& opt = {});

}  // namespace orlicz
