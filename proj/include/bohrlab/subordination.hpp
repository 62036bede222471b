#pragma once

#include <cstdint>

#include "bohrlab/functionals.hpp"
#include "bohrlab/functions.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

/// Absolute slack added to every certified comparison.
inline constexpr double kComparisonSlack = 1e-12;

/// f = Phi * (g o omega) with |Phi| <= 1 and omega a Schwarz function.
struct QuasiSubTriple {
  TruncatedSeries phi;
  TruncatedSeries omega;
  TruncatedSeries g;
  TruncatedSeries f;

  Complex phi0() const { return phi[0]; }
};

/// lhs <= rhs check with certified tails on both sides.
/// passed iff lhs.value <= rhs.value + lhs.tail + rhs.tail + kComparisonSlack.
struct VerificationRecord {
  RadialEvalReport lhs;
  RadialEvalReport rhs;
  double r = 0.0;
  bool passed = false;
  double margin = 0.0;  // rhs.value - lhs.value
};

VerificationRecord compare(const RadialEvalReport& lhs, const RadialEvalReport& rhs);

/// Checks value <= bound (an exact constant) given the report's tail.
VerificationRecord compare_to_constant(const RadialEvalReport& lhs, double bound);

/// g o omega tagged with DominatedBy(g), which is sound when omega is a Schwarz function.
TruncatedSeries subordinate(const TruncatedSeries& g, const TruncatedSeries& omega);

/// Builds f = Phi * (g o omega). Throws NonVanishingConstantTerm if omega(0) != 0.
/// The caller vouches for |Phi| <= 1 and |omega| <= 1; f then carries DominatedBy(g).
QuasiSubTriple build_quasi(const TruncatedSeries& phi, const TruncatedSeries& omega, const TruncatedSeries& g);

/// Seeded triple with Blaschke-type Phi (depth 1..3), Schwarz omega (depth 0..2) and g
/// drawn from unit-bounded products, half-plane maps, Moebius maps or the Koebe function.
QuasiSubTriple random_triple(std::uint64_t seed, std::size_t order);

/// As random_triple but with Phi == 1 (plain subordination).
QuasiSubTriple random_subordination(std::uint64_t seed, std::size_t order);

/// sum |a_n| r^n + (1/(1+|a_0|) + r/(1-r)) ||f_0||_r
///   <= sum |b_n| r^n + (1/(1+|b_0 Phi_0|) + r/(1-r)) (|b_0|^2 (1-|Phi_0|^2) + ||g_0||_r).
/// Guaranteed for r <= 1/3; larger r throws DomainError unless `exploratory`.
VerificationRecord verify_lemma1(const QuasiSubTriple& t, double r, bool exploratory = false);

/// Subordination version: both sides weighted with 1/(1+|a_0|). Requires Phi == 1.
VerificationRecord verify_lemma2(const QuasiSubTriple& t, double r, bool exploratory = false);

/// ||f||_r <= ||g||_r with the full quadratic sums (index 0 included), 0 <= r < 1.
VerificationRecord verify_rogosinski(const QuasiSubTriple& t, double r);

/// ||f_0||_r <= |b_0|^2 (1 - |Phi_0|^2) + ||g_0||_r, 0 <= r < 1.
VerificationRecord verify_rogosinski_centered(const QuasiSubTriple& t, double r);

/// |b_n| <= 2 lambda for n >= 1 (convex image, lambda = dist(g(0), boundary)).
bool convex_bound_check(const TruncatedSeries& g, double lambda, double rel_tol = 1e-12);

/// |b_n| <= 4 n lambda for n >= 1 (univalent image).
bool univalent_bound_check(const TruncatedSeries& g, double lambda, double rel_tol = 1e-12);

// --- Sharpness witnesses ----------------------------------------------------

struct WitnessReport {
  CanonicalFamily family;
  double parameter = 0.0;
  double p = 0.0;
  double threshold_found = 0.0;
  double threshold_predicted = 0.0;

  double difference() const { return std::abs(threshold_found - threshold_predicted); }
};

/// -a + a^p + M(r) + (1/(1+a) + r/(1-r)) ||phi_a - a||_r for f = phi_a, in closed form:
/// 1 - a + a^p + (1 - a)((2 + a) r - 1) / (1 - r).
double thmB_witness_expression(double a, double p, double r);

/// First r where the phi_a witness exceeds 1, against (1 - a^p)/(2 - a^2 - a^p).
WitnessReport sharpness_witness_thmB(double a, double p);

/// First r where S_g of the half-plane map with g(0) = a0 exceeds 1, against solve_r0(a0).
WitnessReport witness_theorem1(double a0);

/// First r where T_g(r) > lambda for g = 4 lambda z/(1-z)^2 (distance lambda), evaluated
/// from the series; predicted by the root of Psi(lambda, .) (r_g for lambda = 1).
WitnessReport witness_theorem3(double lambda = 1.0, std::size_t order = 256);

}  // namespace bohrlab
