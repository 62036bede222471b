#include "bohrlab/functionals.hpp"

#include "bohrlab/errors.hpp"
#include "bohrlab/radius.hpp"

namespace bohrlab {

namespace {

void require_radius(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError(std::string(who) + ": r must lie in [0,1)");
}

// Weighted combination: value = base + w * norm, tail = base.tail + w * norm.tail.
RadialEvalReport weighted(double head, const RadialEvalReport& maj, double w, const RadialEvalReport& nrm) {
  RadialEvalReport out;
  out.r = maj.r;
  out.value = head + w * nrm.value;
  out.tail = maj.tail + w * nrm.tail;
  out.order_used = maj.order_used;
  return out;
}

}  // namespace

RadialEvalReport majorant(const TruncatedSeries& f, double r) {
  require_radius(r, "majorant");
  return {r, partial_majorant(f, r), majorant_tail(f, r), f.order()};
}

RadialEvalReport norm_sq(const TruncatedSeries& f, double r) {
  require_radius(r, "norm_sq");
  return {r, partial_square_sum(f, r), square_tail(f, r), f.order()};
}

RadialEvalReport full_norm_sq(const TruncatedSeries& f, double r) {
  require_radius(r, "full_norm_sq");
  return {r, std::norm(f[0]) + partial_square_sum(f, r), square_tail(f, r), f.order()};
}

RadialEvalReport refined_functional(const TruncatedSeries& f, double r, double p) {
  require_radius(r, "refined_functional");
  if (!(p > 0.0 && p <= 2.0)) throw DomainError("refined_functional: p must lie in (0,2]");
  const double a0 = std::abs(f[0]);
  const auto maj = majorant(f, r);
  const auto nrm = norm_sq(f, r);
  const double w = 1.0 / (1.0 + a0) + r / (1.0 - r);
  return weighted(std::pow(a0, p) + (maj.value - a0), maj, w, nrm);
}

RadialEvalReport distance_form_T(const TruncatedSeries& f, double r, double lambda) {
  require_radius(r, "distance_form_T");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("distance_form_T: lambda must lie in (0,1]");
  const double a0 = std::abs(f[0]);
  const auto maj = majorant(f, r);
  const auto nrm = norm_sq(f, r);
  const double w = 1.0 / (2.0 - lambda) + r / (1.0 - r);
  return weighted(maj.value - a0, maj, w, nrm);
}

double half_plane_closed_form(double lambda, double r) {
  require_radius(r, "half_plane_closed_form");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("half_plane_closed_form: lambda must lie in (0,1]");
  return 1.0 - lambda * phi_poly(lambda, r) / ((2.0 - lambda) * (1.0 - r) * (1.0 - r * r));
}

}  // namespace bohrlab
