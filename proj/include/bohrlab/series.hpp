#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <variant>
#include <vector>

namespace bohrlab {

using Complex = std::complex<double>;

class TruncatedSeries;

/// Coefficient-growth assertions for the indices beyond the stored order.
/// They are what makes a truncation-tail bound rigorous.
namespace growth {

struct Unknown {};

/// |a_n| <= c for every n >= 1.
struct BoundedBy {
  double c;
};

/// |a_n| <= c * n for every n >= 1.
struct LinearBy {
  double c;
};

/// |a_n| = |scale| * base^(n-1) for every n >= 1, with 0 <= base < 1.
struct ExactGeometric {
  double base;
  double scale;
};

/// |f(z)| <= M_g(|z|) on the whole disk, where M_g is the majorant series of
/// the dominating series g (whose own growth class must not be Unknown).
/// Holds for f = Phi * (g o omega) with |Phi| <= 1 and omega a Schwarz function.
struct DominatedBy {
  std::shared_ptr<const TruncatedSeries> dominant;
};

}  // namespace growth

using GrowthClass = std::variant<growth::Unknown, growth::BoundedBy, growth::LinearBy,
                                 growth::ExactGeometric, growth::DominatedBy>;

/// Taylor coefficients a_0..a_N of an analytic function in the unit disk
/// together with a growth assertion for the omitted tail.
///
/// Values are immutable. Construction validates that every coefficient is
/// finite and that the growth assertion does not contradict the stored
/// coefficients (indices 1..N).
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::vector<Complex> coeffs, GrowthClass growth = growth::Unknown{});

  static TruncatedSeries from_real(std::initializer_list<double> coeffs,
                                   GrowthClass growth = growth::Unknown{});

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t n) const { return coeffs_.at(n); }
  const GrowthClass& growth() const noexcept { return growth_; }

  bool has_known_growth() const noexcept {
    return !std::holds_alternative<growth::Unknown>(growth_);
  }

  TruncatedSeries with_growth(GrowthClass growth) const;
  TruncatedSeries truncated(std::size_t order) const;
  TruncatedSeries scaled(Complex factor) const;

private:
  std::vector<Complex> coeffs_;
  GrowthClass growth_;
};

TruncatedSeries zero_series(std::size_t order);
TruncatedSeries one_series(std::size_t order);
TruncatedSeries identity_z(std::size_t order);
TruncatedSeries constant_series(Complex c, std::size_t order);

/// Coefficientwise sum, truncated to the smaller order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product, truncated to the smaller order. Growth is Unknown.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Coefficients of g(w(z)) up to min(g.order, w.order). Requires w(0) == 0,
/// throws NonVanishingConstantTerm otherwise. Growth is Unknown.
TruncatedSeries compose(const TruncatedSeries& g, const TruncatedSeries& w);

/// Partial sum at z by Horner's rule; throws DomainError unless |z| < 1.
Complex evaluate(const TruncatedSeries& f, Complex z);

/// sum_{n=0}^{N} |a_n| r^n (no tail).
double partial_majorant(const TruncatedSeries& f, double r);

/// sum_{n=1}^{N} |a_n|^2 r^{2n} (no tail, index 0 excluded).
double partial_square_sum(const TruncatedSeries& f, double r);

/// Certified bound on sum_{n>N} |a_n| r^n; +infinity for Unknown growth.
/// Also bounds |f(z) - evaluate(f, z)| for |z| = r.
double majorant_tail(const TruncatedSeries& f, double r);

/// Certified bound on sum_{n>N} |a_n|^2 r^{2n}; +infinity for Unknown growth.
double square_tail(const TruncatedSeries& f, double r);

}  // namespace bohrlab
