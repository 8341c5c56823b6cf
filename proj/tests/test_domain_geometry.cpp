#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "gasketlab/domain_geometry.hpp"
#include "gasketlab/rng.hpp"

using namespace gasketlab;
using namespace gasketlab::geom;

namespace {
constexpr double kPi = 3.14159265358979323846;
using cd = std::complex<double>;

// disk automorphism z -> (z - a) / (1 - conj(a) z) rotated by phase
cd moebius(cd z, cd a, double phase) {
  return std::polar(1.0, phase) * (z - a) / (1.0 - std::conj(a) * z);
}
}  // namespace

TEST_CASE("green function of the disk") {
  CHECK(green_disk({0.0, 0.0}, {0.3, 0.4}) ==
        doctest::Approx(std::log(1.0 / 0.5) / (2.0 * kPi)).epsilon(1e-14));
  CHECK(green_disk({-0.5, 0.0}, {0.5, 0.0}) ==
        doctest::Approx(std::log(1.25) / (2.0 * kPi)).epsilon(1e-14));
  // symmetry on scattered pairs
  CounterRng rng(7, 0);
  for (int i = 0; i < 32; ++i) {
    const cd z{1.6 * rng.next_double() - 0.8, 1.6 * rng.next_double() - 0.8};
    const cd w{1.6 * rng.next_double() - 0.8, 1.6 * rng.next_double() - 0.8};
    if (std::abs(z - w) < 1e-6) continue;
    CHECK(green_disk(z, w) == doctest::Approx(green_disk(w, z)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(green_disk({0.2, 0.0}, {0.2, 0.0}), std::domain_error);
  CHECK_THROWS_AS(green_disk({1.2, 0.0}, {0.0, 0.0}), std::domain_error);
}

TEST_CASE("canonical r") {
  CHECK(canonical_r({-0.5, 0.0}, {0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(canonical_r_from_green(std::log(1.25) / (2.0 * kPi)) ==
        doctest::Approx(0.5).epsilon(1e-13));
  // Moebius images of (-r, r) give the same r (Green's value is invariant)
  CounterRng rng(11, 0);
  for (int i = 0; i < 16; ++i) {
    const double r = 0.1 + 0.7 * rng.next_double();
    const cd a{0.8 * rng.next_double() - 0.4, 0.8 * rng.next_double() - 0.4};
    const double phase = 2.0 * kPi * rng.next_double();
    const cd z1 = moebius({-r, 0.0}, a, phase);
    const cd z2 = moebius({r, 0.0}, a, phase);
    CHECK(canonical_r(z1, z2) == doctest::Approx(r).epsilon(1e-10));
  }
}

TEST_CASE("nome from green") {
  // lemniscatic point: r = 2^{-1/4}, k = 1/sqrt(2), q = e^{-pi}
  const double r = std::pow(2.0, -0.25);
  const double g = std::log((1.0 + r * r) / (2.0 * r)) / (2.0 * kPi);
  const auto np = nome_from_green(g);
  CHECK(np.q() == doctest::Approx(std::exp(-kPi)).epsilon(1e-12));

  const auto np2 = nome_from_green(std::log(1.25) / (2.0 * kPi));
  CHECK(np2.q() == doctest::Approx(0.004033570069917498).epsilon(1e-12));

  // g -> infinity pushes q -> 0
  CHECK(nome_from_green(2.0).q() < nome_from_green(0.5).q());
  CHECK_THROWS_AS(nome_from_green(0.0), std::domain_error);
}

TEST_CASE("green <-> nome loop closes over the grid") {
  std::vector<double> grid{0.01};
  for (double q = 0.05; q < 0.901; q += 0.05) grid.push_back(q);
  for (double q : grid) {
    const double g = green_from_nome(q);
    REQUIRE(g > 0.0);
    const auto np = nome_from_green(g);
    CHECK(np.q() == doctest::Approx(q).epsilon(1e-9));
    // and back to the Green's value
    CHECK(green_from_nome(np.q()) == doctest::Approx(g).epsilon(1e-9));
  }
}

TEST_CASE("two routes to exp(pi G) agree") {
  for (double q = 0.02; q < 0.62; q += 0.06) {
    using special::theta2;
    using special::theta3;
    const double rr = theta2(q) / theta3(q);
    const double lhs = std::exp(kPi * green_from_nome(q));
    // ((1+r^2)/(2r))^{1/2}
    const double rhs = std::sqrt((1.0 + rr * rr) / (2.0 * rr));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    // which is theta_3(q^{1/2})/theta_2(q^{1/2})
    CHECK(lhs ==
          doctest::Approx(theta3(std::sqrt(q)) / theta2(std::sqrt(q))).epsilon(1e-10));
  }
}

TEST_CASE("excursion mass") {
  // k = r^2 = 1/sqrt(2): K = K', M = 4 and exp(-pi) = q_hat
  const double r = std::pow(2.0, -0.25);
  const auto md = MarkedDomain::from_points({-r, 0.0}, {r, 0.0});
  CHECK(excursion_mass(md) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::exp(-kPi) == doctest::Approx(md.nome().q_hat()).epsilon(1e-12));

  const auto md5 = MarkedDomain::from_points({-0.5, 0.0}, {0.5, 0.0});
  const double M = excursion_mass(md5);
  CHECK(M == doctest::Approx(2.2793642079676747).epsilon(1e-12));
  CHECK(std::exp(-kPi * M / 4.0) == doctest::Approx(md5.nome().q_hat()).epsilon(1e-10));
  CHECK(std::exp(-kPi * M / 4.0) == doctest::Approx(0.16692536833486013).epsilon(1e-12));

  // monotone: separating the points (smaller r) shrinks M
  double prev = 1e100;
  for (double r2 : {0.8, 0.6, 0.4, 0.2}) {
    const auto m = excursion_mass(MarkedDomain::from_points({-r2, 0.0}, {r2, 0.0}));
    CHECK(m < prev);
    CHECK(m > 0.0);
    prev = m;
  }
}

TEST_CASE("cover radius and cone factor") {
  const double invsq2 = std::pow(2.0, -0.25);  // r with r^2 = 1/sqrt(2)
  CHECK(cover_radius(invsq2) == doctest::Approx(kPi / 4.0).epsilon(1e-13));
  // 4 log R K(r^2) = pi K'(r^2)
  const double r = 0.3;
  CHECK(4.0 * cover_radius(r) * special::elliptic_K(r * r) ==
        doctest::Approx(kPi * special::elliptic_Kprime(r * r)).epsilon(1e-13));
  CHECK(cone_factor(0.5) == doctest::Approx(1.0329299960127513).epsilon(1e-13));
  CHECK(cover_radius(0.5) == doctest::Approx(1.3782758554372923).epsilon(1e-13));
}

TEST_CASE("extremal distance of the annulus") {
  CHECK(extremal_distance_annulus(1e-3, 1.0) ==
        doctest::Approx(std::log(1e3) / (2.0 * kPi)).epsilon(1e-13));
  CHECK(extremal_distance_annulus(0.2, 0.7) ==
        doctest::Approx(extremal_distance_annulus(0.02, 0.07)).epsilon(1e-13));
  // (R^{-1}, R) with log R = pi K'/4K gives K'(r^2)/(4 K(r^2))
  const double r = 0.45;
  const double R = std::exp(cover_radius(r));
  CHECK(extremal_distance_annulus(1.0 / R, R) ==
        doctest::Approx(special::elliptic_Kprime(r * r) /
                        (4.0 * special::elliptic_K(r * r))).epsilon(1e-12));
  CHECK_THROWS_AS(extremal_distance_annulus(0.5, 0.2), std::domain_error);
}

TEST_CASE("marked domain construction") {
  const auto md = MarkedDomain::from_points({-0.5, 0.0}, {0.5, 0.0});
  CHECK(md.r_canonical() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(md.conformal_radius_1() == doctest::Approx(0.75).epsilon(1e-13));
  CHECK(md.cr_prefactor() == doctest::Approx(std::pow(0.75 * 0.75, -0.125)).epsilon(1e-13));
  // r = theta_2/theta_3 at the solved nome
  CHECK(special::theta2(md.nome().q()) / special::theta3(md.nome().q()) ==
        doctest::Approx(0.5).epsilon(1e-11));
  // exp(2 pi green) = (1+r^2)/(2r)
  CHECK(std::exp(2.0 * kPi * md.green()) == doctest::Approx(1.25).epsilon(1e-13));
  CHECK_THROWS_AS(MarkedDomain::from_points({0.1, 0.1}, {0.1, 0.1 + 1e-13}),
                  std::domain_error);

  const auto mq = MarkedDomain::from_nome(0.2);
  CHECK(mq.nome().q() == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(std::exp(kPi * mq.green()) ==
        doctest::Approx(special::theta3(std::sqrt(0.2)) / special::theta2(std::sqrt(0.2)))
            .epsilon(1e-12));
}
