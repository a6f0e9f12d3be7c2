#include "orlicz/series.hpp"

#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

SeriesResult sum_outward(const std::function<double(std::int64_t)>& log2_term, std::int64_t start, int dir,
                         std::int64_t regular_from, const SeriesOptions& opt) {
  if (dir != 1 && dir != -1) throw DomainError("direction must be +1 or -1");
  SeriesResult out;
  double ref = -kInf;  // scale of the accumulator
  double acc = 0.0;
  double prev = -kInf;
  std::int64_t k = start;
  for (std::int64_t n = 0;; ++n, k += dir) {
    if (n >= opt.max_terms) throw DivergenceError("series did not converge within the term cap");
    const double lt = log2_term(k);
    if (lt == kInf || std::isnan(lt)) throw DivergenceError("series term is infinite");
    out.last_index = k;
    if (lt == -kInf) {
      if (dir < 0) {
        out.tail_bound = 0.0;
        break;
      }
      prev = lt;
      continue;
    }
    if (ref == -kInf) {
      ref = lt;
    } else if (lt - ref > 512.0) {
      acc *= std::exp2(ref - lt);
      ref = lt;
    }
    acc += std::exp2(lt - ref);

    const bool past = dir > 0 ? k >= regular_from : k <= regular_from;
    if (n + 1 >= opt.min_terms && past && prev != -kInf) {
      const double rho = std::exp2(lt - prev);
      if (rho < 1.0) {
        const double tail = std::exp2(lt - ref) * rho / (1.0 - rho);
        if (tail <= opt.relative_tolerance * acc) {
          out.tail_bound = tail / acc;
          break;
        }
      }
    }
    prev = lt;
  }
  out.log2_sum = acc > 0.0 ? ref + std::log2(acc) : -kInf;
  return out;
}

}  // namespace orlicz
