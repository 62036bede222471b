#include "bohrlab/radius.hpp"

#include <cmath>
#include <limits>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

bool opposite_signs(double a, double b) { return (a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0); }

}  // namespace

RadiusResult bisect(const std::string& name, const std::function<double(double)>& f, double lo, double hi,
                    double tol) {
  if (!(tol > 0.0)) throw DomainError(name + ": tolerance must be positive");
  if (!(lo < hi)) throw BracketError(name + ": empty bracket");
  double flo = f(lo);
  const double fhi = f(hi);
  if (!opposite_signs(flo, fhi) || (flo == 0.0 && fhi == 0.0))
    throw BracketError(name + ": no sign change across [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  RadiusResult out;
  out.name = name;
  int it = 0;
  // The iteration cap only matters for tol below the spacing of doubles.
  while (hi - lo > tol && it < 200) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (opposite_signs(flo, fm)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
    ++it;
  }
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.value = lo + 0.5 * (hi - lo);
  out.residual = f(out.value);
  out.iterations = it;
  return out;
}

double first_exceedance(const std::string& name, const std::function<double(double)>& excess, double lo, double hi,
                        int steps, double tol) {
  double prev = lo;
  for (int k = 1; k <= steps; ++k) {
    const double r = lo + (hi - lo) * static_cast<double>(k) / steps;
    if (excess(r) > 0.0) return bisect(name, excess, prev, r, tol).value;
    prev = r;
  }
  throw BracketError(name + ": no exceedance on the scanned interval");
}

double phi_poly(double lambda, double r) {
  const double r2 = r * r;
  const double r3 = r2 * r;
  return 4.0 * r3 * lambda * lambda - (7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0) * lambda + 6.0 * r3 - 2.0 * r2 -
         6.0 * r + 2.0;
}

double psi_poly(double lambda, double r) {
  const double r2 = r * r;
  const double core = (1.0 - 6.0 * r + r2) * (1.0 - r) * (1.0 - r) * std::pow(1.0 + r, 3);
  return 16.0 * lambda * r2 * (1.0 + r2) * (lambda * r - 1.0 - r) + (2.0 - lambda) * core;
}

double phi_partial_lambda(double lambda, double r) {
  const double r2 = r * r;
  const double r3 = r2 * r;
  return 8.0 * r3 * lambda - (7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0);
}

double psi_partial_lambda(double lambda, double r) {
  const double r2 = r * r;
  const double core = (1.0 - 6.0 * r + r2) * (1.0 - r) * (1.0 - r) * std::pow(1.0 + r, 3);
  return 16.0 * r2 * (1.0 + r2) * (2.0 * lambda * r - 1.0 - r) - core;
}

double phi_partial_r(double lambda, double r) {
  const double r2 = r * r;
  return 12.0 * r2 * lambda * lambda - (21.0 * r2 + 6.0 * r - 3.0) * lambda + 18.0 * r2 - 4.0 * r - 6.0;
}

double rstar_cubic(double r) { return ((3.0 * r - 5.0) * r - 3.0) * r + 1.0; }

double rg_polynomial(double r) {
  const double r2 = r * r;
  return (1.0 - 6.0 * r + r2) * (1.0 - r) * (1.0 - r) * std::pow(1.0 + r, 3) - 16.0 * r2 * (1.0 + r2);
}

double classical_bohr_radius() { return 1.0 / 3.0; }

double refined_radius(double a0) {
  if (!(a0 >= 0.0 && a0 < 1.0)) throw DomainError("refined_radius: a0 must lie in [0,1)");
  return 1.0 / (2.0 + a0);
}

double p_family_radius(double a0, double p) {
  if (!(a0 >= 0.0 && a0 < 1.0)) throw DomainError("p_family_radius: a0 must lie in [0,1)");
  if (!(p > 0.0 && p <= 2.0)) throw DomainError("p_family_radius: p must lie in (0,2]");
  const double ap = std::pow(a0, p);
  return (1.0 - ap) / (2.0 - a0 * a0 - ap);
}

double p_family_monotonicity_term(double x, double p) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("p_family_monotonicity_term: x must lie in [0,1]");
  if (!(p > 0.0 && p <= 2.0)) throw DomainError("p_family_monotonicity_term: p must lie in (0,2]");
  return -p - (2.0 - p) * x * x + 2.0 * std::pow(x, 2.0 - p);
}

RadiusResult rstar_bisect(double tol) { return bisect("rstar", rstar_cubic, 0.2, 0.3, tol); }

double rstar_cardano() {
  const double t = std::atan(9.0 * std::sqrt(303.0) / 103.0) / 3.0;
  return 5.0 / 9.0 - (2.0 / 9.0) * std::sqrt(13.0) * std::cos(t) + (2.0 / 3.0) * std::sqrt(13.0 / 3.0) * std::sin(t);
}

RadiusResult solve_r0(double a0, double tol) {
  if (!(a0 > 0.0 && a0 < 1.0)) throw DomainError("solve_r0: a0 must lie in (0,1)");
  const double lambda = 1.0 - a0;
  return bisect(
      "r0", [lambda](double r) { return phi_poly(lambda, r); }, rstar_cardano(), 1.0 / 3.0, tol);
}

double lambda_of_r(double r) {
  const double rstar = rstar_cardano();
  if (!(r > rstar && r < 1.0 / 3.0)) throw DomainError("lambda_of_r: r must lie in (r*, 1/3)");
  const double r2 = r * r;
  const double a = 4.0 * r2 * r;
  const double b = 7.0 * r2 * r + 3.0 * r2 - 3.0 * r + 1.0;
  const double c = phi_poly(0.0, r);
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) throw DomainError("lambda_of_r: no real root");
  // Small root in cancellation-free form; the roots multiply to c / a.
  const double small = 2.0 * c / (b + std::sqrt(disc));
  const double large = c / (a * small);
  if (!(small > 0.0 && small < 1.0) || large <= 1.0)
    throw DomainError("lambda_of_r: root in (0,1) is not unique at this r");
  return small;
}

RadiusResult solve_rg(double tol) { return bisect("rg", rg_polynomial, 0.1, 0.15, tol); }

RadiusResult solve_psi_root(double lambda, double tol) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("solve_psi_root: lambda must lie in (0,1]");
  // 1 - 6r + r^2 vanishes at 3 - 2 sqrt 2, where Psi(lambda, .) is already negative.
  return bisect(
      "psi_root", [lambda](double r) { return psi_poly(lambda, r); }, 0.0, 3.0 - 2.0 * std::sqrt(2.0), tol);
}

}  // namespace bohrlab
