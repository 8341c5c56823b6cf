#include "gasketlab/correlators.hpp"

#include <cmath>

#include "gasketlab/walk_resummation.hpp"

namespace gasketlab::corr {

namespace {

constexpr double kPi = 3.14159265358979323846;

using special::theta2;
using special::theta3;
using special::theta4;

double theta2_q14(double q) { return theta2(std::pow(q, 0.25)); }

CorrelatorValue make(Family f, const geom::MarkedDomain& md, double weight, double ratio) {
  CorrelatorValue out;
  out.family = f;
  out.cr_prefactor = md.cr_prefactor();
  out.weight = weight;
  out.theta_ratio = ratio;
  out.theta_factor = weight * ratio;
  out.value = out.cr_prefactor * out.theta_factor;
  return out;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Twist: return "twist";
    case Family::TwistBoundary: return "twist_boundary";
    case Family::Nested: return "nested";
    case Family::Odd: return "odd";
    case Family::Even: return "even";
    case Family::Simple: return "simple";
    case Family::MthGasket: return "mth_gasket";
    case Family::Ising: return "ising";
    case Family::ATLine: return "at_line";
  }
  return "?";
}

CorrelatorValue twist_two_point(const geom::MarkedDomain& md) {
  const double q = md.nome().q();
  const double ratio = 1.0 / (theta2_q14(q) * std::sqrt(std::abs(std::log(q))));
  return make(Family::Twist, md, 1.0, ratio);
}

CorrelatorValue twist_with_boundary(const geom::MarkedDomain& md, double v) {
  CorrelatorValue out = twist_two_point(md);
  const double damp = std::exp(-v * v * geom::excursion_mass(md));
  out.family = Family::TwistBoundary;
  out.v = v;
  out.theta_ratio *= damp;
  out.theta_factor *= damp;
  out.value *= damp;
  return out;
}

CorrelatorValue nested(const geom::MarkedDomain& md) {
  const double q = md.nome().q();
  const double ratio = theta3(std::sqrt(q)) / theta2_q14(q);
  return make(Family::Nested, md, 1.0 / std::sqrt(2.0 * kPi), ratio);
}

CorrelatorValue odd_gaskets(const geom::MarkedDomain& md) {
  const double q = md.nome().q();
  const double ratio = theta3(std::pow(q, 0.125)) / theta2_q14(q);
  return make(Family::Odd, md, 0.5 / std::sqrt(2.0 * kPi), ratio);
}

CorrelatorValue even_gaskets(const geom::MarkedDomain& md) {
  const double q = md.nome().q();
  const double ratio = theta4(std::pow(q, 0.125)) / theta2_q14(q);
  return make(Family::Even, md, 0.5 / std::sqrt(2.0 * kPi), ratio);
}

CorrelatorValue simple_gasket(const geom::MarkedDomain& md) {
  const double q = md.nome().q();
  const double q14 = std::pow(q, 0.25);
  const double ratio = std::sqrt(theta3(q14) / theta2(q14));
  return make(Family::Simple, md, 0.5 / std::sqrt(kPi), ratio);
}

CorrelatorValue at_line(const geom::MarkedDomain& md, double g) {
  if (!(g > 1.0)) throw std::domain_error("at_line: coupling g must exceed 1");
  const double q = md.nome().q();
  const double ratio = theta3(std::pow(q, 1.0 / (2.0 * g))) / theta2_q14(q);
  CorrelatorValue out = make(Family::ATLine, md, 1.0 / std::sqrt(2.0 * g * kPi), ratio);
  out.g = g;
  return out;
}

CorrelatorValue ising(const geom::MarkedDomain& md) {
  CorrelatorValue out = at_line(md, 2.0);
  out.family = Family::Ising;
  return out;
}

CorrelatorValue mth_gasket(const geom::MarkedDomain& md, int m, double tol) {
  if (m < 2) throw std::domain_error("mth_gasket: m must be >= 2");
  if (!(tol > 0.0)) throw std::domain_error("mth_gasket: tol must be positive");
  const double q = md.nome().q();
  const double qh = md.nome().q_hat();
  const double log_qh2 = 2.0 * std::log(qh);
  // sum over n >= m-1 with n = m-1 (mod 2); the pair (n, -n) contributes twice.
  double series = 0.0;
  bool converged = false;
  const int coeff_m = m - 1;
  constexpr int kMaxIndex = 200000;
  auto magnitude = [&](int n) {
    return std::abs(walks::coefficient_value(coeff_m, n)) * std::exp(log_qh2 * double(n) * double(n));
  };
  for (int n = coeff_m; n <= kMaxIndex; n += 2) {
    const double a = walks::coefficient_value(coeff_m, n);
    series += 2.0 * a * std::exp(log_qh2 * double(n) * double(n));
    // terms are eventually monotone; ask two consecutive ones to clear the bar
    if (n > coeff_m && magnitude(n) < tol / 10.0 && magnitude(n + 2) < tol / 10.0) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw special::NonConvergence(
        "mth_gasket: qhat too close to 1 for the requested tolerance (needs |n| > " +
        std::to_string(kMaxIndex) + ")");
  }
  const double ratio = series / (theta2_q14(q) * std::sqrt(std::abs(std::log(q))));
  CorrelatorValue out = make(Family::MthGasket, md, 1.0, ratio);
  out.m = m;
  return out;
}

double series_route(Family family, const geom::MarkedDomain& md, double g) {
  const double q = md.nome().q();
  const double qh = md.nome().q_hat();
  const double log_qh = std::log(qh);
  const double denom = theta2_q14(q) * std::sqrt(std::abs(std::log(q)));

  // exponent c and weights w_n over the index set
  double c = 2.0;
  auto weight_of = [&](long n) -> double {
    switch (family) {
      case Family::Nested: return 1.0;                                   // n in Z
      case Family::Odd: return (n % 2 == 0) ? 1.0 : 0.0;                 // n in 2Z
      case Family::Even: return (n % 2 != 0) ? 1.0 : 0.0;                // n in 2Z+1
      case Family::Simple:                                               // (-1)^{n/2} on 2Z
        return (n % 2 == 0) ? ((n / 2) % 2 == 0 ? 1.0 : -1.0) : 0.0;
      case Family::ATLine: return 1.0;                                   // n in Z, c = 2g
      default:
        throw std::invalid_argument("series_route: family has no series form");
    }
  };
  if (family == Family::ATLine) {
    if (!(g > 1.0)) throw std::domain_error("series_route: coupling g must exceed 1");
    c = 2.0 * g;
  }

  double sum = weight_of(0);
  for (long n = 1; n < 100000; ++n) {
    const double qpow = std::exp(c * log_qh * double(n) * double(n));
    const double w = weight_of(n) + weight_of(-n);
    sum += w * qpow;
    if (qpow < 1e-18 && n > 3) break;
  }
  return sum / denom;
}

}  // namespace gasketlab::corr
