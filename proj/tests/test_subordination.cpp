#include <doctest.h>

#include <cmath>

#include "bohrlab/errors.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/functions.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/subordination.hpp"
#include "bohrlab/suites.hpp"

using namespace bohrlab;

namespace {

void check_same_series(const TruncatedSeries& a, const TruncatedSeries& b, double tol) {
  REQUIRE(a.order() == b.order());
  for (std::size_t n = 0; n <= a.order(); ++n) CHECK(std::abs(a[n] - b[n]) <= tol);
}

}  // namespace

TEST_SUITE("subordination_lab") {
  TEST_CASE("compare semantics") {
    const RadialEvalReport lhs{0.2, 1.0, 0.0, 8};
    const RadialEvalReport rhs{0.2, 1.0 - 5e-13, 0.0, 8};
    CHECK(compare(lhs, rhs).passed);
    CHECK(compare(lhs, rhs).margin == doctest::Approx(-5e-13));
    CHECK_FALSE(compare(lhs, RadialEvalReport{0.2, 1.0 - 2e-12, 0.0, 8}).passed);
    CHECK(compare(lhs, RadialEvalReport{0.2, 0.5, 0.6, 8}).passed);
    CHECK(compare(RadialEvalReport{0.2, 1.5, 0.6, 8}, RadialEvalReport{0.2, 1.0, 0.0, 8}).passed);
    CHECK_FALSE(compare_to_constant(RadialEvalReport{0.2, 1.1, 0.05, 8}, 1.0).passed);
  }

  TEST_CASE("build_quasi examples") {
    const auto g = half_plane_map(0.4, 32);
    check_same_series(build_quasi(one_series(32), identity_z(32), g).f, g, 0.0);

    const auto phi = moebius_phi_a(0.6, 32);
    check_same_series(build_quasi(phi, identity_z(32), g).f, multiply(phi, g), 0.0);

    const auto t = build_quasi(moebius_phi_a(0.3, 64), random_schwarz(7, 64, 1), koebe(64));
    CHECK(t.f[0] == Complex(0.0));
    CHECK(t.phi0() == Complex(0.3));
    CHECK(std::holds_alternative<growth::DominatedBy>(t.f.growth()));
  }

  TEST_CASE("build_quasi invariants hold for random triples") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const auto t = random_triple(s, 48);
      CHECK(t.omega[0] == Complex(0.0));
      CHECK(t.f[0] == t.phi[0] * t.g[0]);
      check_same_series(t.f, multiply(t.phi, compose(t.g, t.omega)), 0.0);
    }
  }

  TEST_CASE("build_quasi propagates NonVanishingConstantTerm") {
    CHECK_THROWS_AS(build_quasi(one_series(8), one_series(8), koebe(8)), NonVanishingConstantTerm);
  }

  TEST_CASE("random triples are reproducible") {
    const auto a = random_triple(17, 32);
    const auto b = random_triple(17, 32);
    check_same_series(a.f, b.f, 0.0);
    check_same_series(a.phi, b.phi, 0.0);
  }

  TEST_CASE("verify_lemma1 examples") {
    const auto g = random_unit_bounded(3, 64, 2);
    const auto same = build_quasi(one_series(64), identity_z(64), g);
    const auto rec = verify_lemma1(same, 0.3);
    CHECK(rec.passed);
    CHECK(rec.lhs.value == rec.rhs.value);

    for (std::uint64_t s = 0; s < 200; ++s) CHECK(verify_lemma1(random_triple(s, 128), 1.0 / 3.0 - 1e-9).passed);

    const auto major = build_quasi(moebius_phi_a(0.5, 128), identity_z(128), half_plane_map(0.3, 128));
    const auto m = verify_lemma1(major, 0.25);
    CHECK(m.passed);
    CHECK(m.margin > 0.0);
  }

  TEST_CASE("verify_lemma1 range and exploratory mode") {
    const auto t = random_triple(1, 32);
    CHECK_NOTHROW(verify_lemma1(t, 1.0 / 3.0));
    CHECK_THROWS_AS(verify_lemma1(t, 0.34), DomainError);
    CHECK_THROWS_AS(verify_lemma1(t, -0.01), DomainError);
    CHECK_NOTHROW(verify_lemma1(t, 0.6, true));
    CHECK_THROWS_AS(verify_lemma1(t, 1.0, true), DomainError);
  }

  TEST_CASE("verify_lemma2 examples") {
    const auto g = half_plane_map(0.2, 64);
    const auto rec = verify_lemma2(build_quasi(one_series(64), identity_z(64), g), 0.2);
    CHECK(rec.lhs.value == rec.rhs.value);

    for (std::uint64_t s = 0; s < 50; ++s) CHECK(verify_lemma2(random_subordination(s, 128), 1.0 / 3.0).passed);

    const auto half = build_quasi(one_series(128), random_schwarz(5, 128, 2), half_plane_map(0.5, 128));
    CHECK(verify_lemma2(half, 0.24).passed);

    CHECK_THROWS_AS(verify_lemma2(random_triple(2, 16), 0.2), DomainError);
  }

  TEST_CASE("lemma1 with Phi = 1 reproduces lemma2 exactly") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const auto t = random_subordination(s, 64);
      for (double r : {0.1, 0.2, 0.3}) {
        const auto l1 = verify_lemma1(t, r);
        const auto l2 = verify_lemma2(t, r);
        CHECK(l1.lhs.value == l2.lhs.value);
        CHECK(l1.rhs.value == l2.rhs.value);
        CHECK(l1.lhs.tail == l2.lhs.tail);
        CHECK(l1.rhs.tail == l2.rhs.tail);
      }
    }
  }

  TEST_CASE("verify_rogosinski examples") {
    const auto g = koebe(64);
    const auto rec = verify_rogosinski(build_quasi(one_series(64), identity_z(64), g), 0.5);
    CHECK(rec.lhs.value == rec.rhs.value);
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto t = random_triple(s, 128);
      CHECK(verify_rogosinski(t, 0.9).passed);
      CHECK(verify_rogosinski_centered(t, 0.7).passed);
    }
    CHECK_THROWS_AS(verify_rogosinski(random_triple(0, 8), 1.0), DomainError);
    CHECK_THROWS_AS(verify_rogosinski_centered(random_triple(0, 8), -0.5), DomainError);
  }

  TEST_CASE("convex and univalent coefficient checks") {
    CHECK(convex_bound_check(half_plane_map(0.3, 64), 0.7));
    CHECK_FALSE(convex_bound_check(half_plane_map(0.3, 64), 0.69));
    CHECK(univalent_bound_check(koebe(64), 0.25));
    CHECK_FALSE(univalent_bound_check(koebe(64), 0.24));
    CHECK_FALSE(convex_bound_check(TruncatedSeries::from_real({0, 3}), 1.0));
    CHECK_FALSE(convex_bound_check(koebe(4), -1.0));
    CHECK_FALSE(univalent_bound_check(koebe(4), 0.0));
  }

  TEST_CASE("sharpness_witness_thmB examples") {
    CHECK(sharpness_witness_thmB(0.5, 1.0).threshold_predicted == doctest::Approx(0.4));
    const auto w = sharpness_witness_thmB(0.9, 1.0);
    CHECK(std::abs(w.threshold_found - p_family_radius(0.9, 1.0)) <= 1e-9);
    CHECK(std::abs(sharpness_witness_thmB(0.9999, 1.0).threshold_found - 1.0 / 3.0) <= 1e-4);
    CHECK_THROWS_AS(sharpness_witness_thmB(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(sharpness_witness_thmB(0.5, 0.0), DomainError);
  }

  TEST_CASE("the thmB witness exceeds 1 exactly beyond the predicted radius") {
    for (double a : {0.1, 0.5, 0.9}) {
      for (double p : {0.5, 2.0}) {
        const double rp = p_family_radius(a, p);
        CHECK(thmB_witness_expression(a, p, rp - 1e-6) < 1.0);
        CHECK(thmB_witness_expression(a, p, rp + 1e-6) > 1.0);
      }
    }
  }

  TEST_CASE("the thmB witness expression is the refined functional of phi_a") {
    const double a = 0.6;
    const double p = 1.3;
    const double r = 0.3;
    const auto phi = moebius_phi_a(a, 256);
    CHECK(thmB_witness_expression(a, p, r) == doctest::Approx(refined_functional(phi, r, p).value).epsilon(1e-14));
  }

  TEST_CASE("the thmB witness is strictly increasing in r") {
    for (double a : {0.05, 0.5, 0.95}) {
      for (double p : {0.5, 1.0, 1.5, 2.0}) {
        double prev = -1e300;
        for (int k = 0; k < 999; ++k) {
          const double v = thmB_witness_expression(a, p, k / 1000.0);
          CHECK(v > prev);
          prev = v;
        }
      }
    }
  }

  TEST_CASE("witness thresholds agree with the formula on a 20 x 4 grid") {
    for (double p : {0.5, 1.0, 1.5, 2.0})
      for (int k = 0; k < 20; ++k) CHECK(sharpness_witness_thmB(0.04 + 0.05 * k, p).difference() <= 1e-8);
  }

  TEST_CASE("witness_theorem1 agrees with solve_r0") {
    for (int k = 1; k <= 19; ++k) CHECK(witness_theorem1(0.05 * k).difference() <= 1e-8);
    // a0 -> 0 gives lambda -> 1 and the threshold tends to r*.
    CHECK(std::abs(witness_theorem1(0.001).threshold_found - rstar_cardano()) <= 2e-3);
    CHECK(std::abs(witness_theorem1(0.99).threshold_found - 1.0 / 3.0) <= 2e-3);
    CHECK_THROWS_AS(witness_theorem1(1.0), DomainError);
  }

  TEST_CASE("witness_theorem3 locates r_g") {
    const auto w = witness_theorem3();
    CHECK(std::abs(w.threshold_found - 0.128445) <= 5e-7);
    CHECK(w.difference() <= 1e-8);
    CHECK(witness_theorem3(0.5).difference() <= 1e-8);
    CHECK_THROWS_AS(witness_theorem3(0.0), DomainError);
  }

  TEST_CASE("theorem and lemma suites pass on the default population") {
    for (const char* name : {"thm1", "thm2_halfplane", "thm3_koebe", "lemma1", "lemma2", "rogosinski"}) {
      CAPTURE(name);
      const auto rep = suites::run_suite(name);
      CHECK(rep.violations() == 0);
      CHECK(rep.trials.size() == 200);
    }
    CHECK_THROWS_AS(suites::run_suite("nope"), std::invalid_argument);
  }
}
