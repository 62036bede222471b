#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative slack used only when checking growth claims against coefficients
// assembled from closed forms.
double growth_slack(std::size_t n) {
  constexpr double kUlps = 64.0;
  return kUlps * std::numeric_limits<double>::epsilon() * static_cast<double>(std::max<std::size_t>(n, 1));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate(const std::vector<Complex>& coeffs, const GrowthClass& g) {
  if (coeffs.empty()) throw InvalidSeries("series needs at least one coefficient");
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (!std::isfinite(coeffs[n].real()) || !std::isfinite(coeffs[n].imag()))
      throw InvalidSeries("non-finite coefficient at index " + std::to_string(n));
  }
  auto fail = [](const std::string& what, std::size_t n) {
    throw InvalidSeries(what + " violated at index " + std::to_string(n));
  };
  std::visit(
      overloaded{
          [](const growth::Unknown&) {},
          [&](const growth::BoundedBy& b) {
            if (!(b.c >= 0.0) || !std::isfinite(b.c)) throw InvalidSeries("BoundedBy constant must be finite and >= 0");
            for (std::size_t n = 1; n < coeffs.size(); ++n)
              if (std::abs(coeffs[n]) > b.c * (1.0 + growth_slack(n))) fail("BoundedBy", n);
          },
          [&](const growth::LinearBy& l) {
            if (!(l.c >= 0.0) || !std::isfinite(l.c)) throw InvalidSeries("LinearBy constant must be finite and >= 0");
            for (std::size_t n = 1; n < coeffs.size(); ++n)
              if (std::abs(coeffs[n]) > l.c * static_cast<double>(n) * (1.0 + growth_slack(n))) fail("LinearBy", n);
          },
          [&](const growth::ExactGeometric& e) {
            if (!(e.base >= 0.0 && e.base < 1.0) || !std::isfinite(e.scale))
              throw InvalidSeries("ExactGeometric needs base in [0,1) and finite scale");
            const double s = std::abs(e.scale);
            double expected = s;
            for (std::size_t n = 1; n < coeffs.size(); ++n) {
              if (std::abs(std::abs(coeffs[n]) - expected) > expected * growth_slack(n) + std::numeric_limits<double>::denorm_min())
                fail("ExactGeometric", n);
              expected *= e.base;
            }
          },
          [&](const growth::DominatedBy& d) {
            if (!d.dominant) throw InvalidSeries("DominatedBy needs a dominating series");
            if (!d.dominant->has_known_growth())
              throw InvalidSeries("DominatedBy needs a dominating series with known growth");
          },
      },
      g);
}

// Cauchy-estimate tails for a function bounded by M_g(rho) on |z| = rho:
// |a_n| <= min_rho M_g(rho) / rho^n, with the minimum taken per n over a
// grid of rho in (r, 1). Terms are summed until the remainder, bounded with
// the current minimiser held fixed, is below a thousandth of the sum. The
// square tail also uses Parseval on |z| = rho, sum_{n>N} |a_n|^2 r^{2n} <=
// (r/rho)^{2(N+1)} M_g(rho)^2, and keeps the smaller bound.
struct CauchyTails {
  double linear;
  double square;
};

CauchyTails dominated_tails(const TruncatedSeries& dominant, std::size_t order, double r) {
  if (r == 0.0) return {0.0, 0.0};
  struct Candidate {
    double log_rho;
    double log_bound;
    double ratio;  // r / rho
  };
  std::vector<Candidate> cands;
  auto push = [&](double t) {
    const double rho = 1.0 - (1.0 - r) * t;
    const double bound = partial_majorant(dominant, rho) + majorant_tail(dominant, rho);
    if (std::isfinite(bound) && bound > 0.0) cands.push_back({std::log(rho), std::log(bound), r / rho});
  };
  for (double t : {0.9, 0.75, 0.6, 0.5}) push(t);
  for (int j = 3; j <= 48; ++j) push(std::exp2(-0.5 * j));
  if (cands.empty()) {
    // A dominant that vanishes identically forces f to vanish too.
    return partial_majorant(dominant, r) == 0.0 ? CauchyTails{0.0, 0.0} : CauchyTails{kInf, kInf};
  }

  double parseval = kInf;
  for (const auto& c : cands)
    parseval = std::min(parseval, std::exp(2.0 * (c.log_bound + static_cast<double>(order + 1) * std::log(c.ratio))));

  const double log_r = std::log(r);
  constexpr std::size_t kMaxTerms = 200000;
  CauchyTails sum{0.0, 0.0};
  for (std::size_t n = order + 1; n < order + 1 + kMaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    std::size_t best = 0;
    double best_log = kInf;
    for (std::size_t j = 0; j < cands.size(); ++j) {
      const double v = cands[j].log_bound - dn * cands[j].log_rho;
      if (v < best_log) {
        best_log = v;
        best = j;
      }
    }
    const double term = std::exp(best_log + dn * log_r);
    sum.linear += term;
    sum.square += term * term;
    // Remainder over m > n with rho fixed at the current minimiser.
    const double q = cands[best].ratio;
    const double head = std::exp(cands[best].log_bound + dn * std::log(q));
    const double rem_lin = head * q / (1.0 - q);
    const double rem_sq = head * head * q * q / (1.0 - q * q);
    if (rem_lin <= 1e-3 * sum.linear || n + 1 == order + 1 + kMaxTerms) {
      sum.linear += rem_lin;
      sum.square = std::min(sum.square + rem_sq, parseval);
      return sum;
    }
  }
  sum.square = std::min(sum.square, parseval);
  return sum;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs, GrowthClass growth)
    : coeffs_(std::move(coeffs)), growth_(std::move(growth)) {
  validate(coeffs_, growth_);
}

TruncatedSeries TruncatedSeries::from_real(std::initializer_list<double> coeffs, GrowthClass growth) {
  return TruncatedSeries(std::vector<Complex>(coeffs.begin(), coeffs.end()), std::move(growth));
}

TruncatedSeries TruncatedSeries::with_growth(GrowthClass growth) const {
  return TruncatedSeries(coeffs_, std::move(growth));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  const std::size_t n = std::min(order, this->order());
  // Every growth class constrains all indices >= 1, so it survives truncation.
  return TruncatedSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n) + 1),
                         growth_);
}

TruncatedSeries TruncatedSeries::scaled(Complex factor) const {
  std::vector<Complex> out(coeffs_);
  for (auto& c : out) c *= factor;
  const double m = std::abs(factor);
  GrowthClass g = std::visit(
      overloaded{
          [](const growth::Unknown&) -> GrowthClass { return growth::Unknown{}; },
          [&](const growth::BoundedBy& b) -> GrowthClass { return growth::BoundedBy{m * b.c}; },
          [&](const growth::LinearBy& l) -> GrowthClass { return growth::LinearBy{m * l.c}; },
          [&](const growth::ExactGeometric& e) -> GrowthClass {
            return growth::ExactGeometric{e.base, m * std::abs(e.scale)};
          },
          [&](const growth::DominatedBy& d) -> GrowthClass {
            return growth::DominatedBy{std::make_shared<const TruncatedSeries>(d.dominant->scaled(m))};
          },
      },
      growth_);
  return TruncatedSeries(std::move(out), std::move(g));
}

TruncatedSeries zero_series(std::size_t order) {
  return TruncatedSeries(std::vector<Complex>(order + 1), growth::BoundedBy{0.0});
}

TruncatedSeries one_series(std::size_t order) { return constant_series(1.0, order); }

TruncatedSeries identity_z(std::size_t order) {
  std::vector<Complex> c(order + 1);
  if (order >= 1) c[1] = 1.0;
  return TruncatedSeries(std::move(c), growth::BoundedBy{1.0});
}

TruncatedSeries constant_series(Complex value, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = value;
  return TruncatedSeries(std::move(c), growth::BoundedBy{0.0});
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] + b[k];

  GrowthClass g = growth::Unknown{};
  const auto* ba = std::get_if<growth::BoundedBy>(&a.growth());
  const auto* bb = std::get_if<growth::BoundedBy>(&b.growth());
  const auto* la = std::get_if<growth::LinearBy>(&a.growth());
  const auto* lb = std::get_if<growth::LinearBy>(&b.growth());
  if (ba && bb) {
    g = growth::BoundedBy{ba->c + bb->c};
  } else if ((ba || la) && (bb || lb)) {
    // C <= C n for n >= 1, so a bounded side folds into a linear one.
    g = growth::LinearBy{(ba ? ba->c : la->c) + (bb ? bb->c : lb->c)};
  }
  return TruncatedSeries(std::move(c), std::move(g));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    c[k] = acc;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& g, const TruncatedSeries& w) {
  if (std::abs(w[0]) > 0.0) throw NonVanishingConstantTerm("compose: inner series must vanish at the origin");
  const std::size_t n = std::min(g.order(), w.order());
  // Horner in the series ring: acc <- acc * w + g_k. Because w(0) = 0, g_k
  // with k > n only affect degrees above n and are skipped.
  std::vector<Complex> acc(n + 1);
  std::vector<Complex> next(n + 1);
  for (std::size_t k = n + 1; k-- > 0;) {
    std::fill(next.begin(), next.end(), Complex{});
    for (std::size_t i = 0; i <= n; ++i) {
      if (acc[i] == Complex{}) continue;
      for (std::size_t j = 1; i + j <= n; ++j) next[i + j] += acc[i] * w[j];
    }
    next[0] += g[k];
    acc.swap(next);
  }
  return TruncatedSeries(std::move(acc));
}

Complex evaluate(const TruncatedSeries& f, Complex z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("evaluate: |z| must be < 1");
  const auto c = f.coeffs();
  Complex acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

double partial_majorant(const TruncatedSeries& f, double r) {
  const auto c = f.coeffs();
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + std::abs(c[k]);
  return acc;
}

double partial_square_sum(const TruncatedSeries& f, double r) {
  const auto c = f.coeffs();
  const double r2 = r * r;
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = (acc + std::norm(c[k])) * r2;
  return acc;
}

double majorant_tail(const TruncatedSeries& f, double r) {
  if (r == 0.0) return 0.0;
  const double next = static_cast<double>(f.order() + 1);
  return std::visit(
      overloaded{
          [](const growth::Unknown&) { return kInf; },
          [&](const growth::BoundedBy& b) { return b.c * std::pow(r, next) / (1.0 - r); },
          [&](const growth::LinearBy& l) {
            return l.c * std::pow(r, next) * (next * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r));
          },
          [&](const growth::ExactGeometric& e) {
            // sum_{n>N} s q^{n-1} r^n = s r (q r)^N / (1 - q r)
            const double qr = e.base * r;
            return std::abs(e.scale) * r * std::pow(qr, next - 1.0) / (1.0 - qr);
          },
          [&](const growth::DominatedBy& d) { return dominated_tails(*d.dominant, f.order(), r).linear; },
      },
      f.growth());
}

double square_tail(const TruncatedSeries& f, double r) {
  if (r == 0.0) return 0.0;
  const double next = static_cast<double>(f.order() + 1);
  const double rho = r * r;
  return std::visit(
      overloaded{
          [](const growth::Unknown&) { return kInf; },
          [&](const growth::BoundedBy& b) { return b.c * b.c * std::pow(rho, next) / (1.0 - rho); },
          [&](const growth::LinearBy& l) {
            // sum_{n>=M} n^2 x^n = x^M [M^2/(1-x) + 2 M x/(1-x)^2 + x(1+x)/(1-x)^3]
            const double m = next;
            const double u = 1.0 - rho;
            const double s = m * m / u + 2.0 * m * rho / (u * u) + rho * (1.0 + rho) / (u * u * u);
            return l.c * l.c * std::pow(rho, m) * s;
          },
          [&](const growth::ExactGeometric& e) {
            const double qr2 = e.base * e.base * rho;
            return e.scale * e.scale * rho * std::pow(qr2, next - 1.0) / (1.0 - qr2);
          },
          [&](const growth::DominatedBy& d) { return dominated_tails(*d.dominant, f.order(), r).square; },
      },
      f.growth());
}

}  // namespace bohrlab
