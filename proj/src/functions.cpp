#include "bohrlab/functions.hpp"

#include <random>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

TruncatedSeries blaschke_product(const std::vector<double>& params, std::size_t order) {
  TruncatedSeries acc = one_series(order);
  for (double a : params) acc = multiply(acc, moebius_phi_a(a, order));
  return acc;
}

}  // namespace

std::string family_name(const CanonicalFamily& f) {
  return std::visit(overloaded{
                        [](const family::MoebiusPhiA&) { return std::string("moebius_phi_a"); },
                        [](const family::HalfPlane&) { return std::string("half_plane"); },
                        [](const family::Koebe&) { return std::string("koebe"); },
                        [](const family::IdentityZ&) { return std::string("identity_z"); },
                        [](const family::Constant&) { return std::string("constant"); },
                    },
                    f);
}

TruncatedSeries build_family(const CanonicalFamily& f, std::size_t order) {
  return std::visit(overloaded{
                        [&](const family::MoebiusPhiA& m) { return moebius_phi_a(m.a, order); },
                        [&](const family::HalfPlane& h) { return half_plane_map(h.a0, order); },
                        [&](const family::Koebe&) { return koebe(order); },
                        [&](const family::IdentityZ&) { return identity_z(order); },
                        [&](const family::Constant& c) { return constant_series(c.c, order); },
                    },
                    f);
}

TruncatedSeries moebius_phi_a(double a, std::size_t order) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("moebius_phi_a: a must lie in (0,1)");
  std::vector<Complex> c(order + 1);
  c[0] = a;
  const double scale = 1.0 - a * a;
  double power = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    c[k] = -scale * power;
    power *= a;
  }
  return TruncatedSeries(std::move(c), growth::ExactGeometric{a, scale});
}

TruncatedSeries half_plane_map(double a0, std::size_t order) {
  if (!(a0 > 0.0 && a0 < 1.0)) throw DomainError("half_plane_map: a0 must lie in (0,1)");
  const double b = 2.0 * (1.0 - a0);
  // z/(1-z) = sum_{n>=1} z^n, so b_n = -2(1-a0) from n = 1 on.
  std::vector<Complex> c(order + 1, Complex(-b));
  c[0] = a0;
  return TruncatedSeries(std::move(c), growth::BoundedBy{b});
}

TruncatedSeries koebe(std::size_t order) {
  std::vector<Complex> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = static_cast<double>(n);
  return TruncatedSeries(std::move(c), growth::LinearBy{1.0});
}

std::vector<double> blaschke_parameters(std::uint64_t seed, int depth) {
  // Explicit 53-bit mapping so the stream does not depend on the standard
  // library's distribution implementation.
  std::mt19937_64 gen(seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(depth > 0 ? depth : 0));
  for (int i = 0; i < depth; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    out.push_back(0.1 + 0.8 * u);
  }
  return out;
}

TruncatedSeries random_schwarz(std::uint64_t seed, std::size_t order, int depth) {
  if (depth < 0) throw DomainError("random_schwarz: depth must be >= 0");
  const TruncatedSeries product = blaschke_product(blaschke_parameters(seed, depth), order);
  std::vector<Complex> c(order + 1);
  for (std::size_t k = 1; k <= order; ++k) c[k] = product[k - 1];
  // |omega| <= 1 on the disk, so Cauchy gives |c_n| <= 1.
  return TruncatedSeries(std::move(c), growth::BoundedBy{1.0});
}

TruncatedSeries random_unit_bounded(std::uint64_t seed, std::size_t order, int depth) {
  if (depth < 1) throw DomainError("random_unit_bounded: depth must be >= 1");
  const auto params = blaschke_parameters(seed, depth);
  if (depth == 1) return moebius_phi_a(params.front(), order);
  return blaschke_product(params, order).with_growth(growth::BoundedBy{1.0});
}

}  // namespace bohrlab
