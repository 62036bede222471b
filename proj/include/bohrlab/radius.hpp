#pragma once

#include <functional>
#include <string>

namespace bohrlab {

inline constexpr double kDefaultTolerance = 1e-12;

/// A root located by bisection: the bracket still straddles the sign change.
struct RadiusResult {
  std::string name;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  // equation value at `value`
  int iterations = 0;
};

/// Plain bisection on [lo, hi] until hi - lo <= tol. Throws BracketError if
/// f(lo) and f(hi) do not differ in sign.
RadiusResult bisect(const std::string& name, const std::function<double(double)>& f, double lo, double hi,
                    double tol);

/// First r on a uniform grid of `steps` cells over [lo, hi] where excess(r) > 0,
/// refined by bisection to `tol`. Requires excess(lo) <= 0; throws BracketError
/// when no grid point exceeds.
double first_exceedance(const std::string& name, const std::function<double(double)>& excess, double lo, double hi,
                        int steps, double tol);

// --- Polynomials in (lambda, r) -------------------------------------------

/// Phi(lambda, r) = 4 r^3 lambda^2 - (7r^3 + 3r^2 - 3r + 1) lambda + 6r^3 - 2r^2 - 6r + 2.
double phi_poly(double lambda, double r);

/// Psi(lambda, r) = 16 lambda^2 r^3 (1+r^2)
///   - lambda [(1-6r+r^2)(1-r)^2(1+r)^3 + 16 r^2 (1+r)(1+r^2)]
///   + 2 (1-6r+r^2)(1-r)^2(1+r)^3.
double psi_poly(double lambda, double r);

double phi_partial_lambda(double lambda, double r);
double psi_partial_lambda(double lambda, double r);
double phi_partial_r(double lambda, double r);

/// 3r^3 - 5r^2 - 3r + 1, whose root in (0,1) is r*.
double rstar_cubic(double r);

/// (1-6r+r^2)(1-r)^2(1+r)^3 - 16 r^2 (1+r^2), whose root in (0,1) is r_g.
double rg_polynomial(double r);

// --- Radii -----------------------------------------------------------------

double classical_bohr_radius();

/// 1 / (2 + a0), 0 <= a0 < 1.
double refined_radius(double a0);

/// (1 - a0^p) / (2 - a0^2 - a0^p), 0 <= a0 < 1, 0 < p <= 2.
double p_family_radius(double a0, double p);

/// A(x) = -p - (2-p) x^2 + 2 x^(2-p); nonpositive on [0,1] for 0 < p <= 2.
double p_family_monotonicity_term(double x, double p);

RadiusResult rstar_bisect(double tol = kDefaultTolerance);

/// Trigonometric closed form of the real root of 3r^3 - 5r^2 - 3r + 1 in (0,1).
double rstar_cardano();

/// Root of Phi(1 - a0, .) in (r*, 1/3), 0 < a0 < 1.
RadiusResult solve_r0(double a0, double tol = kDefaultTolerance);

/// The unique lambda in (0,1) with Phi(lambda, r) = 0, for r* < r < 1/3.
double lambda_of_r(double r);

RadiusResult solve_rg(double tol = kDefaultTolerance);

/// Root of Psi(lambda, .) in (0, 3 - 2 sqrt 2) for 0 < lambda <= 1; lambda = 1 gives r_g.
RadiusResult solve_psi_root(double lambda, double tol = kDefaultTolerance);

}  // namespace bohrlab
