#pragma once

#include <cmath>
#include <cstddef>

#include "bohrlab/series.hpp"

namespace bohrlab {

/// A functional evaluated at radius r from the stored coefficients, with a
/// certified bound on what the omitted tail can add.
struct RadialEvalReport {
  double r = 0.0;
  double value = 0.0;
  double tail = 0.0;
  std::size_t order_used = 0;

  bool tail_finite() const noexcept { return std::isfinite(tail); }
};

/// M_f(r) = sum |a_n| r^n.
RadialEvalReport majorant(const TruncatedSeries& f, double r);

/// ||f_0||_r = sum_{n>=1} |a_n|^2 r^{2n}.
RadialEvalReport norm_sq(const TruncatedSeries& f, double r);

/// ||f||_r = sum_{n>=0} |a_n|^2 r^{2n}, the quadratic mean including a_0.
RadialEvalReport full_norm_sq(const TruncatedSeries& f, double r);

/// |a_0|^p + sum_{n>=1} |a_n| r^n + (1/(1+|a_0|) + r/(1-r)) ||f_0||_r, for 0 < p <= 2.
RadialEvalReport refined_functional(const TruncatedSeries& f, double r, double p);

/// T_f(r) = sum_{n>=1} |a_n| r^n + (1/(2-lambda) + r/(1-r)) ||f_0||_r, for 0 < lambda <= 1.
RadialEvalReport distance_form_T(const TruncatedSeries& f, double r, double lambda);

/// S_g(r) for the half-plane map with g(0) = 1 - lambda, in closed form:
/// 1 - lambda * Phi(lambda, r) / ((2 - lambda)(1 - r)(1 - r^2)).
double half_plane_closed_form(double lambda, double r);

}  // namespace bohrlab
