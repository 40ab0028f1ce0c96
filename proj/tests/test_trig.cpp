#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ck/linalg.hpp"
#include "ck/trig.hpp"
#include "oracles.hpp"

using ck::ck_cosine;
using ck::ck_sine;

TEST_CASE("labeled cosine branches", "[trig]") {
  CHECK(ck_cosine(1.0, M_PI) == Catch::Approx(-1.0).margin(1e-15));
  CHECK(ck_cosine(0.0, 5.0) == 1.0);
  // hyperbolic branch against a series oracle
  CHECK(std::abs(ck_cosine(-1.0, 1.0) - ckt::cosh_series(1.0)) < 1e-14);
  CHECK(ck_cosine(-1.0, 1.0) == Catch::Approx(1.5430806348152437).epsilon(1e-12));
}

TEST_CASE("labeled sine branches", "[trig]") {
  CHECK(ck_sine(0.0, 5.0) == 5.0);
  CHECK(ck_sine(1.0, M_PI / 2.0) == Catch::Approx(1.0).epsilon(1e-14));
  // omega = 4 compresses the period: Sk_4(x) = sin(2x)/2
  for (double x : {0.3, 1.1, -0.7})
    CHECK(ck_sine(4.0, x) == Catch::Approx(0.5 * std::sin(2.0 * x)).margin(1e-14));
}

TEST_CASE("labeled sine has unit derivative at zero for every label", "[trig]") {
  for (double w : {4.0, 1.0, 0.25, 0.0, -0.25, -1.0, -4.0}) {
    const double d = ckt::fd_derivative([w](double x) { return ck_sine(w, x); }, 0.0);
    CHECK(d == Catch::Approx(1.0).margin(1e-9));
  }
}

TEST_CASE("derivatives of the labeled functions", "[trig]") {
  for (double w : {2.0, 0.0, -2.0})
    for (double x : {-1.3, 0.2, 0.9}) {
      const double dc = ckt::fd_derivative([w](double t) { return ck_cosine(w, t); }, x);
      const double ds = ckt::fd_derivative([w](double t) { return ck_sine(w, t); }, x);
      CHECK(dc == Catch::Approx(ck::ck_cosine_deriv(w, x)).margin(5e-9));
      CHECK(ds == Catch::Approx(ck::ck_sine_deriv(w, x)).margin(5e-9));
    }
}

TEST_CASE("labeled Pythagorean identity", "[trig]") {
  ck::SeededRng rng(13);
  for (int k = 0; k < 500; ++k) {
    const double w = rng.next_in(-4.0, 4.0);
    const double x = rng.next_in(-3.0, 3.0);
    const double c = ck_cosine(w, x);
    const double s = ck_sine(w, x);
    CHECK(std::abs(c * c + w * s * s - 1.0) < 1e-12 * std::max(1.0, c * c));
  }
}

TEST_CASE("continuity in the label at zero", "[trig]") {
  const double x = 2.0;
  // |Sk_eps(x) - x| <= C eps with C ~ |x|^3/6 from the series expansion
  const double c_sine = 1.2 * x * x * x / 6.0;
  const double c_cosine = 1.2 * x * x / 2.0;
  for (double eps : {1e-6, -1e-6, 1e-8, -1e-8, 1e-10}) {
    CHECK(std::abs(ck_sine(eps, x) - x) <= c_sine * std::abs(eps));
    CHECK(std::abs(ck_cosine(eps, x) - 1.0) <= c_cosine * std::abs(eps));
  }
}
