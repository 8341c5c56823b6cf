#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gasketlab/special_functions.hpp"
#include "oracles.hpp"

using namespace gasketlab::special;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> q_grid() {
  std::vector<double> g{0.01};
  for (double q = 0.05; q < 0.901; q += 0.05) g.push_back(q);
  return g;
}
}  // namespace

TEST_CASE("theta functions at q = 0") {
  CHECK(theta2(0.0) == 0.0);
  CHECK(theta3(0.0) == 1.0);
  CHECK(theta4(0.0) == 1.0);
}

TEST_CASE("theta2 small-q normalization") {
  // theta_2(q) / (2 q^{1/4}) -> 1 as q -> 0+
  for (double q : {1e-8, 1e-10, 1e-12})
    CHECK(theta2(q) / (2.0 * std::pow(q, 0.25)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("theta values against the direct series oracle") {
  // frozen from the 40-term series
  CHECK(theta2(0.3) == doctest::Approx(1.6144603411944335).epsilon(1e-14));
  CHECK(theta3(0.5) == doctest::Approx(2.1289368272118772).epsilon(1e-14));
  CHECK(theta4(0.5) == doctest::Approx(0.12112420800258050).epsilon(1e-13));
  for (double q : q_grid()) {
    CHECK(theta2(q) == doctest::Approx(oracles::theta2_series(q)).epsilon(1e-13));
    CHECK(theta3(q) == doctest::Approx(oracles::theta3_series(q)).epsilon(1e-13));
    CHECK(theta4(q) == doctest::Approx(oracles::theta4_series(q)).epsilon(1e-12));
  }
}

TEST_CASE("theta3 - theta4 equals twice the odd-exponent subseries") {
  const double q = 0.5;
  double odd = 0.0;
  for (int n = 1; n <= 41; n += 2) odd += std::pow(q, double(n) * n);
  CHECK(theta3(q) - theta4(q) == doctest::Approx(2.0 * 2.0 * odd).epsilon(1e-12));
  CHECK(theta3_minus_theta4(q) == doctest::Approx(4.0 * odd).epsilon(1e-14));
  // relative accuracy survives where direct subtraction would not
  CHECK(theta3_minus_theta4(1e-9) == doctest::Approx(4e-9).epsilon(1e-12));
}

TEST_CASE("theta identities on the q grid") {
  for (double q : q_grid()) {
    const double lhs_sq = theta2(q) * theta2(q) + theta3(q) * theta3(q);
    const double rhs_sq = std::pow(theta3(std::sqrt(q)), 2);
    CHECK(lhs_sq == doctest::Approx(rhs_sq).epsilon(1e-12));

    const double lhs_dup = 2.0 * theta2(q) * theta3(q);
    const double rhs_dup = std::pow(theta2(std::sqrt(q)), 2);
    CHECK(lhs_dup == doctest::Approx(rhs_dup).epsilon(1e-12));

    const double lhs_lin = theta2(q) + theta3(q);
    const double rhs_lin = theta3(std::pow(q, 0.25));
    CHECK(lhs_lin == doctest::Approx(rhs_lin).epsilon(1e-12));
  }
}

TEST_CASE("elliptic K") {
  CHECK(elliptic_K(0.0) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  const double invsq2 = 1.0 / std::sqrt(2.0);
  CHECK(elliptic_K(invsq2) == doctest::Approx(elliptic_Kprime(invsq2)).epsilon(1e-15));
  CHECK(elliptic_K(0.6) == doctest::Approx(1.7507538029157525).epsilon(1e-14));
  for (double k : {0.05, 0.25, 0.45, 0.65, 0.85, 0.95})
    CHECK(elliptic_K(k) == doctest::Approx(oracles::elliptic_K_quadrature(k)).epsilon(1e-11));
  CHECK_THROWS_AS(elliptic_K(1.0), std::domain_error);
  CHECK_THROWS_AS(elliptic_Kprime(0.0), std::domain_error);
}

TEST_CASE("nome from modulus") {
  const double invsq2 = 1.0 / std::sqrt(2.0);
  const auto lem = NomePair::from_modulus(invsq2);
  CHECK(lem.q() == doctest::Approx(std::exp(-kPi)).epsilon(1e-13));
  CHECK(lem.q_hat() == doctest::Approx(std::exp(-kPi)).epsilon(1e-13));

  const auto np = NomePair::from_modulus(0.3);
  CHECK(np.q() == doctest::Approx(0.005894144434269082).epsilon(1e-13));
  const double k_back = std::pow(theta2(np.q()) / theta3(np.q()), 2);
  CHECK(k_back == doctest::Approx(0.3).epsilon(1e-10));

  CHECK_THROWS_AS(NomePair::from_modulus(0.0), std::domain_error);
  CHECK_THROWS_AS(NomePair::from_modulus(1.0), std::domain_error);
}

TEST_CASE("modulus round trip over the k grid") {
  for (double k = 0.05; k < 0.951; k += 0.05) {
    const auto np = NomePair::from_modulus(k);
    const double k_back = std::pow(theta2(np.q()) / theta3(np.q()), 2);
    CHECK(k_back == doctest::Approx(k).epsilon(1e-10));
  }
}

TEST_CASE("complementary nome") {
  const double ep = std::exp(-kPi);
  CHECK(complementary_nome(ep) == doctest::Approx(ep).epsilon(1e-14));
  CHECK(complementary_nome(std::exp(-2.0 * kPi)) ==
        doctest::Approx(std::exp(-kPi / 2.0)).epsilon(1e-14));
  CHECK(complementary_nome(complementary_nome(0.37)) == doctest::Approx(0.37).epsilon(1e-13));
  CHECK_THROWS_AS(complementary_nome(0.0), std::domain_error);
  CHECK_THROWS_AS(complementary_nome(1.0), std::domain_error);
}

TEST_CASE("K' relation and Jacobi transformation") {
  for (double k = 0.05; k < 0.951; k += 0.1) {
    const auto np = NomePair::from_modulus(k);
    const double q = np.q();
    // K'(k) = -log(q) theta_3(q)^2 / 2
    CHECK(std::abs(elliptic_Kprime(k) + std::log(q) * theta3(q) * theta3(q) / 2.0) <= 1e-10);
  }
  for (double q : q_grid()) {
    const double qh = complementary_nome(q);
    const double x = std::abs(std::log(q));
    const double lhs = std::sqrt(2.0 * kPi) * theta3(qh * qh);
    const double rhs = std::sqrt(x) * theta3(std::sqrt(q));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    // the dual form with theta_4(qhat^8) and theta_2(q^{1/8})
    const double lhs2 = std::sqrt(8.0 * kPi) * theta4(std::pow(qh, 8));
    const double rhs2 = std::sqrt(x) * theta2(std::pow(q, 0.125));
    CHECK(lhs2 == doctest::Approx(rhs2).epsilon(1e-12));
  }
}

TEST_CASE("series policy and domain errors") {
  EvalPolicy strict;
  strict.max_terms = 8;
  CHECK_THROWS_AS(theta3(0.999, strict), NonConvergence);
  EvalPolicy bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(theta3(0.5, bad), std::invalid_argument);
  bad = EvalPolicy{};
  bad.max_terms = 4;
  CHECK_THROWS_AS(theta3(0.5, bad), std::invalid_argument);
  CHECK_THROWS_AS(theta2(-0.1), std::domain_error);
  CHECK_THROWS_AS(theta3(1.0), std::domain_error);
}
