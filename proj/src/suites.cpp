#include "bohrlab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bohrlab/functionals.hpp"
#include "bohrlab/functions.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/subordination.hpp"

namespace bohrlab::suites {

namespace {

constexpr double kBoundaryOffset = 1e-9;
constexpr double kIdentityTolerance = 1e-14;
constexpr double kThresholdAgreement = 1e-8;
constexpr int kIdentityGrid = 1000;

class TrialRecorder {
public:
  explicit TrialRecorder(std::uint64_t seed) { summary_.seed = seed; }

  void add(const VerificationRecord& rec) {
    summary_.worst_margin = std::min(summary_.worst_margin, rec.margin);
    summary_.max_tail = std::max({summary_.max_tail, rec.lhs.tail, rec.rhs.tail});
    summary_.passed = summary_.passed && rec.passed;
  }

  void require(bool ok) { summary_.passed = summary_.passed && ok; }

  TrialSummary done() const { return summary_; }

private:
  TrialSummary summary_{0, std::numeric_limits<double>::infinity(), 0.0, true};
};

Check upper_check(std::string label, double value, double bound, double tail = 0.0) {
  return {std::move(label), value, bound, tail, value <= bound + tail};
}

Check lower_check(std::string label, double value, double bound) {
  // value >= bound, stored as -value <= -bound so every check reads value <= bound.
  return {std::move(label), -value, -bound, 0.0, value >= bound};
}

double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::uint64_t trial_seed(const SuiteOptions& o, int t) { return o.seed + static_cast<std::uint64_t>(t); }

TruncatedSeries unit_bounded_population(std::uint64_t seed, int t, std::size_t order) {
  return random_unit_bounded(seed, order, 1 + t % 3);
}

double max_abs_diff_on_grid(const std::function<double(double)>& a, const std::function<double(double)>& b) {
  double worst = 0.0;
  for (int k = 0; k < kIdentityGrid; ++k) {
    const double r = static_cast<double>(k) / (kIdentityGrid - 1);
    worst = std::max(worst, std::abs(a(r) - b(r)));
  }
  return worst;
}

}  // namespace

int SuiteReport::violations() const {
  int v = 0;
  for (const auto& t : trials) v += t.passed ? 0 : 1;
  for (const auto& c : checks) v += c.passed ? 0 : 1;
  return v;
}

double SuiteReport::worst_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& t : trials) m = std::min(m, t.worst_margin);
  for (const auto& c : checks) m = std::min(m, c.bound - c.value);
  return m;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thmA", "thmB",   "pfamily", "thm1",       "thm2_halfplane",
                                                 "thm3_koebe", "lemma1", "lemma2",  "rogosinski", "identities"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "thmA") return thm_a(o);
  if (name == "thmB") return thm_b(o);
  if (name == "pfamily") return p_family(o);
  if (name == "thm1") return thm1(o);
  if (name == "thm2_halfplane") return thm2_halfplane(o);
  if (name == "thm3_koebe") return thm3_koebe(o);
  if (name == "lemma1") return lemma1(o);
  if (name == "lemma2") return lemma2(o);
  if (name == "rogosinski") return rogosinski(o);
  if (name == "identities") return identities(o);
  throw std::invalid_argument("unknown suite: " + name);
}

SuiteReport thm_a(const SuiteOptions& o) {
  SuiteReport rep{"thmA", {}, {}};
  const double r = classical_bohr_radius();
  for (int t = 0; t < o.trials; ++t) {
    TrialRecorder rec(trial_seed(o, t));
    const auto f = unit_bounded_population(trial_seed(o, t), t, o.order);
    rec.add(compare_to_constant(majorant(f, r), 1.0));
    rep.trials.push_back(rec.done());
  }
  // phi_a with a close to 1 pushes the majorant over 1 just beyond 1/3.
  const auto phi = moebius_phi_a(0.99, o.order);
  const double first = first_exceedance(
      "moebius_majorant", [&phi](double x) { return majorant(phi, x).value - 1.0; }, 0.0, 0.5, 500, 1e-13);
  rep.checks.push_back(lower_check("moebius_0.99_exceeds_after_1/3", first, r));
  rep.checks.push_back(upper_check("moebius_0.99_exceeds_before_1/3+0.01", first, r + 0.01));
  return rep;
}

SuiteReport thm_b(const SuiteOptions& o) {
  SuiteReport rep{"thmB", {}, {}};
  for (int t = 0; t < o.trials; ++t) {
    TrialRecorder rec(trial_seed(o, t));
    const auto f = unit_bounded_population(trial_seed(o, t), t, o.order);
    const double a0 = std::abs(f[0]);
    rec.add(compare_to_constant(refined_functional(f, refined_radius(a0) - kBoundaryOffset, 1.0), 1.0));
    rec.add(compare_to_constant(refined_functional(f, 0.5 - kBoundaryOffset, 2.0), 1.0));
    rep.trials.push_back(rec.done());
  }
  return rep;
}

SuiteReport p_family(const SuiteOptions& o) {
  SuiteReport rep{"pfamily", {}, {}};
  const double powers[] = {0.5, 1.0, 1.5, 2.0};
  for (int t = 0; t < o.trials; ++t) {
    TrialRecorder rec(trial_seed(o, t));
    const auto f = unit_bounded_population(trial_seed(o, t), t, o.order);
    const double a0 = std::abs(f[0]);
    for (double p : powers)
      rec.add(compare_to_constant(refined_functional(f, p_family_radius(a0, p) - kBoundaryOffset, p), 1.0));
    rep.trials.push_back(rec.done());
  }
  for (double p : powers) {
    double worst = 0.0;
    double infimum = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 20; ++k) {
      const double a = 0.04 + 0.05 * k;
      const auto w = sharpness_witness_thmB(a, p);
      worst = std::max(worst, w.difference());
      infimum = std::min(infimum, w.threshold_predicted);
    }
    const std::string tag = "p=" + std::to_string(p).substr(0, 3);
    rep.checks.push_back(upper_check("witness_vs_formula_" + tag, worst, kThresholdAgreement));
    rep.checks.push_back(upper_check("infimum_near_p/(2+p)_" + tag, std::abs(infimum - p / (2.0 + p)), 2e-2));
    double a_max = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 1000; ++k) a_max = std::max(a_max, p_family_monotonicity_term(k / 1000.0, p));
    rep.checks.push_back(upper_check("A(x)<=0_" + tag, a_max, 0.0, kIdentityTolerance));
  }
  return rep;
}

SuiteReport thm1(const SuiteOptions& o) {
  SuiteReport rep{"thm1", {}, {}};
  const double rstar = rstar_cardano();
  for (int t = 0; t < o.trials; ++t) {
    const auto seed = trial_seed(o, t);
    TrialRecorder rec(seed);
    std::mt19937_64 gen(seed);
    const double a0 = 0.05 + 0.9 * unit_uniform(gen);
    const auto g = half_plane_map(a0, o.order);
    const auto f = subordinate(g, random_schwarz(gen(), o.order, t % 3));
    const double r0 = solve_r0(a0).value;
    rec.add(compare_to_constant(refined_functional(f, r0 - kBoundaryOffset, 1.0), 1.0));
    rec.add(compare_to_constant(refined_functional(f, rstar - kBoundaryOffset, 1.0), 1.0));
    rep.trials.push_back(rec.done());
  }
  for (int k = 1; k <= 19; ++k) {
    const double a0 = 0.05 * k;
    const auto w = witness_theorem1(a0);
    rep.checks.push_back(upper_check("witness_vs_r0_a0=" + std::to_string(a0).substr(0, 4), w.difference(),
                                     kThresholdAgreement));
  }
  return rep;
}

SuiteReport thm2_halfplane(const SuiteOptions& o) {
  SuiteReport rep{"thm2_halfplane", {}, {}};
  const double rstar = rstar_cardano();
  for (int t = 0; t < o.trials; ++t) {
    const auto seed = trial_seed(o, t);
    TrialRecorder rec(seed);
    std::mt19937_64 gen(seed ^ 0x2545F4914F6CDD1DULL);
    const double a0 = 0.05 + 0.9 * unit_uniform(gen);
    const double lambda = 1.0 - a0;
    const double theta = 2.0 * std::numbers::pi * unit_uniform(gen);
    // A rotated half-plane is still convex with the same distance to its boundary.
    const auto g = half_plane_map(a0, o.order).scaled(std::polar(1.0, theta));
    rec.require(convex_bound_check(g, lambda));
    const auto f = subordinate(g, random_schwarz(gen(), o.order, t % 3));
    const double r0 = solve_r0(a0).value;
    rec.add(compare_to_constant(distance_form_T(f, r0 - kBoundaryOffset, lambda), lambda));
    rec.add(compare_to_constant(distance_form_T(f, rstar - kBoundaryOffset, lambda), lambda));
    rep.trials.push_back(rec.done());
  }
  return rep;
}

SuiteReport thm3_koebe(const SuiteOptions& o) {
  SuiteReport rep{"thm3_koebe", {}, {}};
  const double rg = solve_rg().value;
  for (int t = 0; t < o.trials; ++t) {
    const auto seed = trial_seed(o, t);
    TrialRecorder rec(seed);
    std::mt19937_64 gen(seed ^ 0x9E3779B97F4A7C15ULL);
    const double lambda = 0.05 + 0.94 * unit_uniform(gen);
    const double theta = 2.0 * std::numbers::pi * unit_uniform(gen);
    // 4 lambda e^{i theta} z/(1-z)^2: univalent, distance lambda from g(0) = 0 to the boundary.
    const auto g = koebe(o.order).scaled(std::polar(4.0 * lambda, theta));
    rec.require(univalent_bound_check(g, lambda));
    const auto f = subordinate(g, random_schwarz(gen(), o.order, t % 3));
    rec.add(compare_to_constant(distance_form_T(f, rg - kBoundaryOffset, lambda), lambda));
    rep.trials.push_back(rec.done());
  }
  const auto w = witness_theorem3();
  rep.checks.push_back(upper_check("koebe_witness_vs_rg", w.difference(), kThresholdAgreement));
  rep.checks.push_back(upper_check("rg_vs_0.128445", std::abs(rg - 0.128445), 5e-7));
  return rep;
}

SuiteReport lemma1(const SuiteOptions& o) {
  SuiteReport rep{"lemma1", {}, {}};
  const double radii[] = {0.1, 0.2, 0.3, 1.0 / 3.0 - kBoundaryOffset};
  for (int t = 0; t < o.trials; ++t) {
    TrialRecorder rec(trial_seed(o, t));
    const auto triple = random_triple(trial_seed(o, t), o.order);
    for (double r : radii) rec.add(verify_lemma1(triple, r));
    rep.trials.push_back(rec.done());
  }
  return rep;
}

SuiteReport lemma2(const SuiteOptions& o) {
  SuiteReport rep{"lemma2", {}, {}};
  const double radii[] = {0.1, 0.2, 0.3, 1.0 / 3.0 - kBoundaryOffset};
  for (int t = 0; t < o.trials; ++t) {
    TrialRecorder rec(trial_seed(o, t));
    const auto triple = random_subordination(trial_seed(o, t), o.order);
    for (double r : radii) {
      const auto two = verify_lemma2(triple, r);
      const auto one = verify_lemma1(triple, r);
      rec.add(two);
      // With Phi == 1 the general lemma must collapse to the same numbers.
      rec.require(one.lhs.value == two.lhs.value && one.rhs.value == two.rhs.value);
    }
    rep.trials.push_back(rec.done());
  }
  const double a0 = 0.6;
  const auto g = half_plane_map(a0, o.order);
  const auto half_plane = build_quasi(one_series(o.order), random_schwarz(o.seed, o.order, 2), g);
  const auto rec = verify_lemma2(half_plane, 0.24);
  rep.checks.push_back(upper_check("half_plane_instance_r=0.24", rec.lhs.value, rec.rhs.value,
                                   rec.lhs.tail + rec.rhs.tail + kComparisonSlack));
  return rep;
}

SuiteReport rogosinski(const SuiteOptions& o) {
  SuiteReport rep{"rogosinski", {}, {}};
  const double radii[] = {0.5, 0.7, 0.9, 0.95};
  for (int t = 0; t < o.trials; ++t) {
    TrialRecorder rec(trial_seed(o, t));
    const auto triple = random_triple(trial_seed(o, t), o.order);
    for (double r : radii) {
      rec.add(verify_rogosinski(triple, r));
      rec.add(verify_rogosinski_centered(triple, r));
    }
    rep.trials.push_back(rec.done());
  }
  return rep;
}

SuiteReport identities(const SuiteOptions&) {
  SuiteReport rep{"identities", {}, {}};
  auto add = [&rep](const std::string& label, double err) {
    rep.checks.push_back(upper_check(label, err, kIdentityTolerance));
  };
  add("Phi(0,r)=2(1-3r)(1-r^2)",
      max_abs_diff_on_grid([](double r) { return phi_poly(0.0, r); },
                           [](double r) { return 2.0 * (1.0 - 3.0 * r) * (1.0 - r * r); }));
  add("Phi(1,r)=3r^3-5r^2-3r+1",
      max_abs_diff_on_grid([](double r) { return phi_poly(1.0, r); },
                           [](double r) { return 3.0 * r * r * r - 5.0 * r * r - 3.0 * r + 1.0; }));
  add("dPhi/dlambda(1,r)=-(1-r)^3", max_abs_diff_on_grid([](double r) { return phi_partial_lambda(1.0, r); },
                                                        [](double r) { return -std::pow(1.0 - r, 3); }));
  add("Psi(1,r)=rg_polynomial", max_abs_diff_on_grid([](double r) { return psi_poly(1.0, r); }, rg_polynomial));
  add("dPsi/dlambda(1,r)=expanded",
      max_abs_diff_on_grid([](double r) { return psi_partial_lambda(1.0, r); },
                           [](double r) {
                             const double r2 = r * r;
                             const double r4 = r2 * r2;
                             return -(1.0 - r) * (1.0 - 4.0 * r + 5.0 * r2 + 27.0 * r4 + 4.0 * r4 * r - r4 * r2);
                           }));
  add("dPsi/dlambda(1,r)=factored",
      max_abs_diff_on_grid([](double r) { return psi_partial_lambda(1.0, r); },
                           [](double r) {
                             const double r2 = r * r;
                             const double r4 = r2 * r2;
                             const double r5 = r4 * r;
                             return -(1.0 - r) * (r5 * (1.0 - r) + r2 + 27.0 * r4 + 3.0 * r5 +
                                                  (2.0 * r - 1.0) * (2.0 * r - 1.0));
                           }));
  // Phi decreases in lambda: dPhi/dlambda(lambda, r) <= dPhi/dlambda(1, r) < 0.
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 1; i < 100; ++i) {
    const double r = i / 100.0;
    for (int j = 1; j <= 100; ++j) {
      const double lambda = j / 100.0;
      worst = std::max(worst, phi_partial_lambda(lambda, r) - phi_partial_lambda(1.0, r));
      worst = std::max(worst, phi_partial_lambda(1.0, r));
    }
  }
  rep.checks.push_back(upper_check("dPhi/dlambda<=dPhi/dlambda(1,r)<0", worst, 0.0));
  const auto rs = rstar_bisect();
  rep.checks.push_back(upper_check("rstar_bisect_vs_cardano", std::abs(rs.value - rstar_cardano()), 1e-12));
  rep.checks.push_back(upper_check("rstar_residual", std::abs(rs.residual), 1e-11));
  return rep;
}

}  // namespace bohrlab::suites
