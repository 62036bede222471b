#include "bohrlab/subordination.hpp"

#include <functional>
#include <memory>
#include <random>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

constexpr double kThresholdTolerance = 1e-13;

void require_lemma_radius(double r, bool exploratory, const char* who) {
  const double limit = exploratory ? 1.0 : 1.0 / 3.0;
  const bool ok = exploratory ? (r >= 0.0 && r < limit) : (r >= 0.0 && r <= limit);
  if (!ok) throw DomainError(std::string(who) + (exploratory ? ": r must lie in [0,1)" : ": r must lie in [0,1/3]"));
}

RadialEvalReport lemma_side(const RadialEvalReport& maj, double weight, double extra, const RadialEvalReport& nrm) {
  RadialEvalReport out;
  out.r = maj.r;
  out.value = maj.value + weight * (extra + nrm.value);
  out.tail = maj.tail + weight * nrm.tail;
  out.order_used = maj.order_used;
  return out;
}

bool is_one(const TruncatedSeries& s) {
  const auto c = s.coeffs();
  if (c[0] != Complex(1.0)) return false;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k] != Complex{}) return false;
  return true;
}

double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

VerificationRecord compare(const RadialEvalReport& lhs, const RadialEvalReport& rhs) {
  VerificationRecord rec;
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.r = lhs.r;
  rec.margin = rhs.value - lhs.value;
  rec.passed = lhs.value <= rhs.value + lhs.tail + rhs.tail + kComparisonSlack;
  return rec;
}

VerificationRecord compare_to_constant(const RadialEvalReport& lhs, double bound) {
  return compare(lhs, RadialEvalReport{lhs.r, bound, 0.0, lhs.order_used});
}

TruncatedSeries subordinate(const TruncatedSeries& g, const TruncatedSeries& omega) {
  auto composed = compose(g, omega);
  if (!g.has_known_growth()) return composed;
  return composed.with_growth(growth::DominatedBy{std::make_shared<const TruncatedSeries>(g)});
}

QuasiSubTriple build_quasi(const TruncatedSeries& phi, const TruncatedSeries& omega, const TruncatedSeries& g) {
  auto product = multiply(phi, compose(g, omega));
  if (g.has_known_growth())
    product = product.with_growth(growth::DominatedBy{std::make_shared<const TruncatedSeries>(g)});
  QuasiSubTriple t{phi, omega, g, std::move(product)};
  // a_0 = Phi_0 b_0 holds exactly: the Cauchy product at index 0 is a single term.
  if (t.f[0] != phi[0] * g[0]) throw InvalidSeries("build_quasi: a_0 != Phi_0 b_0");
  return t;
}

namespace {

TruncatedSeries random_dominant(std::mt19937_64& gen, std::size_t order) {
  const int kind = static_cast<int>(gen() % 4);
  switch (kind) {
    case 0: {
      const int depth = 1 + static_cast<int>(gen() % 3);
      return random_unit_bounded(gen(), order, depth);
    }
    case 1:
      return half_plane_map(0.05 + 0.9 * unit_uniform(gen), order);
    case 2:
      return moebius_phi_a(0.05 + 0.9 * unit_uniform(gen), order);
    default:
      return koebe(order);
  }
}

}  // namespace

QuasiSubTriple random_triple(std::uint64_t seed, std::size_t order) {
  std::mt19937_64 gen(seed * 0x9E3779B97F4A7C15ULL + 0x5DEECE66DULL);
  const int phi_depth = 1 + static_cast<int>(gen() % 3);
  const int omega_depth = static_cast<int>(gen() % 3);
  auto phi = random_unit_bounded(gen(), order, phi_depth);
  auto omega = random_schwarz(gen(), order, omega_depth);
  auto g = random_dominant(gen, order);
  return build_quasi(phi, omega, g);
}

QuasiSubTriple random_subordination(std::uint64_t seed, std::size_t order) {
  std::mt19937_64 gen(seed * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL);
  const int omega_depth = static_cast<int>(gen() % 3);
  auto omega = random_schwarz(gen(), order, omega_depth);
  auto g = random_dominant(gen, order);
  return build_quasi(one_series(order), omega, g);
}

VerificationRecord verify_lemma1(const QuasiSubTriple& t, double r, bool exploratory) {
  require_lemma_radius(r, exploratory, "verify_lemma1");
  const double a0 = std::abs(t.f[0]);
  const double b0 = std::abs(t.g[0]);
  const double phi0 = std::abs(t.phi0());
  const double tail_weight = r / (1.0 - r);
  const auto lhs = lemma_side(majorant(t.f, r), 1.0 / (1.0 + a0) + tail_weight, 0.0, norm_sq(t.f, r));
  const auto rhs = lemma_side(majorant(t.g, r), 1.0 / (1.0 + std::abs(t.g[0] * t.phi0())) + tail_weight,
                              b0 * b0 * (1.0 - phi0 * phi0), norm_sq(t.g, r));
  return compare(lhs, rhs);
}

VerificationRecord verify_lemma2(const QuasiSubTriple& t, double r, bool exploratory) {
  if (!is_one(t.phi)) throw DomainError("verify_lemma2: Phi must be identically 1");
  require_lemma_radius(r, exploratory, "verify_lemma2");
  const double w = 1.0 / (1.0 + std::abs(t.f[0])) + r / (1.0 - r);
  const auto lhs = lemma_side(majorant(t.f, r), w, 0.0, norm_sq(t.f, r));
  const auto rhs = lemma_side(majorant(t.g, r), w, 0.0, norm_sq(t.g, r));
  return compare(lhs, rhs);
}

VerificationRecord verify_rogosinski(const QuasiSubTriple& t, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("verify_rogosinski: r must lie in [0,1)");
  return compare(full_norm_sq(t.f, r), full_norm_sq(t.g, r));
}

VerificationRecord verify_rogosinski_centered(const QuasiSubTriple& t, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("verify_rogosinski_centered: r must lie in [0,1)");
  const double b0 = std::abs(t.g[0]);
  const double phi0 = std::abs(t.phi0());
  auto rhs = norm_sq(t.g, r);
  rhs.value += b0 * b0 * (1.0 - phi0 * phi0);
  return compare(norm_sq(t.f, r), rhs);
}

bool convex_bound_check(const TruncatedSeries& g, double lambda, double rel_tol) {
  if (!(lambda > 0.0)) return false;
  const auto c = g.coeffs();
  for (std::size_t n = 1; n < c.size(); ++n)
    if (std::abs(c[n]) > 2.0 * lambda * (1.0 + rel_tol)) return false;
  return true;
}

bool univalent_bound_check(const TruncatedSeries& g, double lambda, double rel_tol) {
  if (!(lambda > 0.0)) return false;
  const auto c = g.coeffs();
  for (std::size_t n = 1; n < c.size(); ++n)
    if (std::abs(c[n]) > 4.0 * static_cast<double>(n) * lambda * (1.0 + rel_tol)) return false;
  return true;
}

double thmB_witness_expression(double a, double p, double r) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("thmB_witness_expression: a must lie in (0,1)");
  if (!(p > 0.0 && p <= 2.0)) throw DomainError("thmB_witness_expression: p must lie in (0,2]");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("thmB_witness_expression: r must lie in [0,1)");
  return 1.0 - a + std::pow(a, p) + (1.0 - a) * ((2.0 + a) * r - 1.0) / (1.0 - r);
}

WitnessReport sharpness_witness_thmB(double a, double p) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("sharpness_witness_thmB: a must lie in (0,1)");
  if (!(p > 0.0 && p <= 2.0)) throw DomainError("sharpness_witness_thmB: p must lie in (0,2]");
  const double found = first_exceedance(
      "witness_thmB", [a, p](double r) { return thmB_witness_expression(a, p, r) - 1.0; }, 0.0, 0.999, 999,
      kThresholdTolerance);
  return {family::MoebiusPhiA{a}, a, p, found, p_family_radius(a, p)};
}

WitnessReport witness_theorem1(double a0) {
  if (!(a0 > 0.0 && a0 < 1.0)) throw DomainError("witness_theorem1: a0 must lie in (0,1)");
  const double lambda = 1.0 - a0;
  const double found = first_exceedance(
      "witness_thm1", [lambda](double r) { return half_plane_closed_form(lambda, r) - 1.0; }, 0.0, 0.6, 600,
      kThresholdTolerance);
  return {family::HalfPlane{a0}, a0, 1.0, found, solve_r0(a0).value};
}

WitnessReport witness_theorem3(double lambda, std::size_t order) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("witness_theorem3: lambda must lie in (0,1]");
  // 4 lambda z/(1-z)^2 omits (-inf, -lambda], so dist(0, boundary) = lambda and |b_n| = 4 n lambda.
  const auto g = koebe(order).scaled(4.0 * lambda);
  const double found = first_exceedance(
      "witness_thm3", [&g, lambda](double r) { return distance_form_T(g, r, lambda).value - lambda; }, 0.0, 0.3,
      300, kThresholdTolerance);
  return {family::Koebe{}, lambda, 1.0, found, solve_psi_root(lambda).value};
}

}  // namespace bohrlab
