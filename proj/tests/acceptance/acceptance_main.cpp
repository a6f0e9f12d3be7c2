#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "orlicz/interp.hpp"
#include "orlicz/lemma_suite.hpp"
#include "orlicz/maximal.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/proposition.hpp"
#include "orlicz/random.hpp"
#include "orlicz/spectral.hpp"

using namespace orlicz;

namespace {

// pinned tolerances and budgets
constexpr double kGrowthSlopeTol = 0.2;
constexpr double kGrowthBudget = 10.0;
constexpr double kMonotoneBudget = 5.0;
constexpr double kBinaryResidual = 0x1p-40;
constexpr double kLemmaBudget = 30.0;
constexpr double kDominationRel = 1e-9;
constexpr double kPropositionBudget = 60.0;
constexpr double kWeakSlopeMin = 0.3;
constexpr double kLlogSpreadMax = 2.0;
constexpr double kWeakBudget = 300.0;
constexpr double kDoobSlope = 1.0, kDoobSlopeTol = 0.2;
constexpr double kStrongSlope = 2.0, kStrongSlopeTol = 0.3;
constexpr double kSlopeBudget = 300.0;
constexpr double kNormTol = 1e-10;
constexpr int kNormInstances = 500;
constexpr double kOracleBudget = 60.0;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail, double seconds, double budget) {
  const bool in_time = seconds < budget;
  ok = ok && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %d %s: %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), seconds,
              budget);
  std::fflush(stdout);
}

double timed(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void growth_exponents() {
  const std::vector<double> grid{1.02, 1.01, 1.005, 1.002};
  bool ok = true;
  std::string detail = "slopes";
  const double t = timed([&] {
    for (int a = 0; a <= 2; ++a) {
      const auto g = growth_exponent_fit(YoungFunction::llog(a), grid);
      ok = ok && std::abs(g.exponent - (2.0 + a)) <= kGrowthSlopeTol;
      detail += fmt(" %.4f", g.exponent) + fmt("(want %.0f)", 2.0 + a);
    }
  });
  report(1, "growth exponents", ok, detail + fmt(" tol %.1f", kGrowthSlopeTol), t, kGrowthBudget);
}

void monotonicity() {
  MonotonicityReport m;
  const double t = timed([&] {
    m = monotonicity_ratio({1.1, 1.05, 1.02, 1.01, 1.005}, YoungFunction::llog(1), YoungFunction::llog(2));
  });
  const bool ok = m.strictly_decreasing && m.ratios.back() < 0.5 * m.ratios.front();
  std::string detail = "ratios";
  for (double r : m.ratios) detail += fmt(" %.5g", r);
  detail += std::string(m.strictly_decreasing ? " strictly decreasing" : " NOT decreasing");
  report(2, "monotonicity ratio", ok, detail, t, kMonotoneBudget);
}

void lemmas() {
  LemmaSuiteReport rep;
  const double t = timed([&] { rep = verify_lemmas(LemmaSuiteOptions{}); });
  const auto& rec = rep.check("binary_reconstruction");
  const auto& lo = rep.check("binary_sandwich_lower_alpha_1");
  const auto& hi = rep.check("binary_sandwich_upper_alpha_1");
  const bool ok3 = rec.passed() && rec.worst <= kBinaryResidual && lo.passed() && hi.passed() && rec.instances == 200;
  report(3, "binary decomposition", ok3,
         std::to_string(rec.instances) + " instances, worst residual " + fmt("%.4g", rec.worst) +
             fmt(" <= %.4g", kBinaryResidual) + ", sandwich failures " + std::to_string(lo.failures) + "/" +
             std::to_string(hi.failures),
         t, kLemmaBudget);
  const auto& dom = rep.check("diagonal_domination");
  const bool ok4 = dom.passed() && dom.instances == 1000 && dom.worst >= -kDominationRel;
  report(4, "diagonal domination", ok4,
         std::to_string(dom.instances) + " instances, min eig/||x|| " + fmt("%.3g", dom.worst) +
             fmt(" >= -%.0e", kDominationRel),
         t, kLemmaBudget);
}

void proposition() {
  PropositionReport rep;
  const double t = timed([&] {
    const auto d = Filtration::dyadic(6);
    const auto f = Filtration::tensor(d, d);
    rep = verify_proposition(f, rectangle(f, 1, 1), 1.5, YoungFunction::llog(2), YoungFunction::chi_infinity(), 1.0);
  });
  const bool ok = rep.level_ok && rep.domination_ok && rep.norm_ok;
  report(5, "proposition pipeline", ok,
         fmt("(i) level %.3g<=1", rep.level_ratio) + fmt(" mass factor %.3g<=2", rep.mass_factor) +
             fmt("; (ii) min eig %.3g", rep.min_eigenvalue) + fmt(">=%.3g", rep.threshold) +
             fmt("; (iv) ||z||/||r|| %.4g", rep.norm_ratio) + fmt(" <= 4F = %.6g", rep.norm_bound) +
             std::string("; (iii) ") + (rep.majorization_ok ? "holds" : "fails"),
         t, kPropositionBudget);
}

void weak_type() {
  const std::vector<int> ns{4, 6, 8, 10};
  std::vector<double> ct, cl, xs;
  const double t = timed([&] {
    for (int n : ns) {
      const auto d = Filtration::dyadic(n);
      const auto f = Filtration::tensor(d, d);
      const std::vector<Element> tests{dirac(f, 1.0), dirac(f, 16.0), dirac(f, 256.0)};
      const auto grid = dyadic_lambda_grid(-2, 2 * n + 10);
      ct.push_back(estimate_weak_orlicz_constant(f, YoungFunction::power(1), tests, grid).constant);
      cl.push_back(estimate_weak_orlicz_constant(f, YoungFunction::llog(1), tests, grid).constant);
      xs.push_back(n);
    }
  });
  const double slope = least_squares(xs, ct).slope;
  bool increasing = true;
  for (std::size_t i = 1; i < ct.size(); ++i) increasing = increasing && ct[i] > ct[i - 1];
  const double spread = *std::max_element(cl.begin(), cl.end()) / *std::min_element(cl.begin(), cl.end());
  std::string detail = "C(t)";
  for (double c : ct) detail += fmt(" %.4g", c);
  detail += fmt(" slope/N %.3g", slope) + fmt(" > %.1f", kWeakSlopeMin) + "; C(llog1)";
  for (double c : cl) detail += fmt(" %.4g", c);
  detail += fmt(" spread %.3g", spread) + fmt(" <= %.0f", kLlogSpreadMax);
  report(6, "classical regime contrast", increasing && slope > kWeakSlopeMin && spread <= kLlogSpreadMax, detail, t,
         kWeakBudget);
}

void lp_slopes() {
  const std::vector<double> ps{1.05, 1.02, 1.01};
  LpSlope one, two;
  const double t = timed([&] {
    one = strong_maximal_slope(Filtration::dyadic(20), ps);
    two = strong_maximal_slope_separable(Filtration::dyadic(12), Filtration::dyadic(12), ps);
  });
  const bool ok = std::abs(one.slope - kDoobSlope) <= kDoobSlopeTol && std::abs(two.slope - kStrongSlope) <= kStrongSlopeTol;
  std::string detail = "1D N=20 ratios";
  for (double r : one.ratio) detail += fmt(" %.4g", r);
  detail += fmt(" slope %.3f", one.slope) + fmt(" (want %.0f", kDoobSlope) + fmt("+-%.1f)", kDoobSlopeTol);
  detail += "; 2D N=M=12 ratios";
  for (double r : two.ratio) detail += fmt(" %.4g", r);
  detail += fmt(" slope %.3f", two.slope) + fmt(" (want %.0f", kStrongSlope) + fmt("+-%.1f)", kStrongSlopeTol);
  report(7, "Doob/strong maximal L_p slopes", ok, detail, t, kSlopeBudget);
}

void oracles() {
  double worst_norm = 0.0;
  bool bit_exact = true;
  double worst_gap = 0.0;
  bool tails_ok = true;
  const double t = timed([&] {
    Rng rng(0);
    for (int i = 0; i < kNormInstances; ++i) {
      const auto alg = random_algebra(rng, uniform_int(rng, 1, 16), 6);
      const auto x = random_hermitian(rng, alg, 2.0);
      const double p = uniform(rng, 1.0, 4.0);
      const double a = lp_norm(x, p), b = singular_numbers(x).lp_norm(p);
      worst_norm = std::max(worst_norm, std::abs(a - b) / std::max(1.0, a));
    }
    for (int n : {3, 5}) {
      const auto d = Filtration::dyadic(n);
      const auto f = Filtration::tensor(d, d);
      for (int i = 0; i < 5; ++i) {
        const auto x = random_psd(rng, f.algebra(), 0.0, 1.0);
        const auto fam = maximal_family(f, x);
        Eigen::VectorXd sup = fam.front().diagonal();
        for (const auto& y : fam) sup = sup.cwiseMax(y.diagonal());
        const double direct = lp_norm(Element(f.algebra(), sup), 1.5);
        bit_exact = bit_exact && lp_linf_norm_positive(fam, 1.5).value == direct;
      }
    }
    // F_strong carries the k = 0 term Phi(1)^{1/2p} that Phi2 = chi removes
    const auto chi = YoungFunction::chi_infinity();
    for (const auto& phi : {YoungFunction::power(1), YoungFunction::llog(1), YoungFunction::llog(2)}) {
      for (double p : {1.5, 2.0, 3.0}) {
        const auto fc = constant_F(p, phi, chi), fs = constant_F_strong_infty(p, phi);
        const double lhs = std::sqrt(fs.value);
        const double rhs = std::sqrt(fc.value) + std::pow(phi(1.0), 1.0 / (2.0 * p));
        const double tol = fs.tail_estimate / (2.0 * lhs) + fc.tail_estimate / (2.0 * std::sqrt(fc.value)) +
                           64.0 * std::numeric_limits<double>::epsilon() * lhs;
        worst_gap = std::max(worst_gap, std::abs(lhs - rhs));
        tails_ok = tails_ok && std::abs(lhs - rhs) <= tol;
      }
    }
  });
  const bool ok = worst_norm <= kNormTol && bit_exact && tails_ok;
  report(8, "oracle equivalences", ok,
         fmt("norm gap %.3g", worst_norm) + fmt(" <= %.0e", kNormTol) + ", L_p(l_inf) " +
             (bit_exact ? "bit-exact" : "MISMATCH") + fmt(", F vs F_strong gap %.3g", worst_gap) +
             (tails_ok ? " within tails" : " OUTSIDE tails"),
         t, kOracleBudget);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void determinism() {
  const std::string a = "acceptance_lemmas_a.json", b = "acceptance_lemmas_b.json";
  int rc = 0;
  const double t = timed([&] {
    for (const auto& out : {a, b}) {
      const std::string cmd = std::string(ORLICZ_CLI_PATH) + " verify-lemmas --seed 7 --out " + out;
      rc |= std::system(cmd.c_str());
    }
  });
  const std::string x = slurp(a), y = slurp(b);
  const bool ok = rc == 0 && !x.empty() && x == y;
  report(9, "determinism", ok,
         "two verify-lemmas --seed 7 runs, " + std::to_string(x.size()) + " bytes, " +
             (x == y ? "byte-identical" : "DIFFER"),
         t, 600.0);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

}  // namespace

int main() {
  growth_exponents();
  monotonicity();
  lemmas();
  proposition();
  weak_type();
  lp_slopes();
  oracles();
  determinism();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
