#include "gasketlab/kernel_checks.hpp"

#include <cmath>
#include <stdexcept>

namespace gasketlab::kernels {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace

double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_e1: x must be positive");
  if (x <= 1.0) {
    // E1(x) = -gamma - log x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 40; ++k) {
      term *= -x / k;
      const double add = -term / k;
      sum += add;
      if (std::abs(add) < 1e-18) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // modified Lentz for the continued fraction
  // E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (b + a * d);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

double strip_integral(double delta) {
  if (!(delta > 0.0) || !(delta < 0.1))
    throw std::domain_error("strip_integral: delta must lie in (0, 0.1)");
  const double base = kPi * kPi * delta / 8.0;
  double sum = 0.0;
  for (long long n = 0;; ++n) {
    const double lo = base * double(2 * n + 1) * double(2 * n + 1);
    const double hi = base * double(2 * n + 2) * double(2 * n + 2);
    const double term = exp_integral_e1(lo) - exp_integral_e1(hi);
    sum += term;
    if (term < 1e-16 && n >= 4) break;
  }
  return 0.5 * sum;
}

double strip_constant() { return -(std::log(kPi / 4.0) + kEulerGamma) / 4.0; }

double strip_constant_observed() { return (std::log(2.0) - kEulerGamma) / 4.0; }

void gauss_legendre(int n, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double xl = 0.5 * (b - a), xm = 0.5 * (a + b);
    nodes[static_cast<size_t>(i)] = xm - xl * x;
    nodes[static_cast<size_t>(n - 1 - i)] = xm + xl * x;
    const double w = 2.0 * xl / ((1.0 - x * x) * pp * pp);
    weights[static_cast<size_t>(i)] = w;
    weights[static_cast<size_t>(n - 1 - i)] = w;
  }
}

double euler_mascheroni_quadrature() {
  std::vector<double> x, w;
  // int_0^1 (1 - e^-t)/t dt; the integrand extends analytically through 0.
  gauss_legendre(64, 0.0, 1.0, x, w);
  double part1 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double t = x[i];
    part1 += w[i] * (-std::expm1(-t) / t);
  }
  // int_1^inf e^-t/t dt = int_0^1 e^{-1/u}/u du
  double part2 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double u = x[i];
    part2 += w[i] * std::exp(-1.0 / u) / u;
  }
  return part1 - part2;
}

double wallis_log_partial(std::uint64_t n_terms) {
  // (2n+2)^2 = (2n+1)(2n+3) + 1, so each term is log1p(1/((2n+1)(2n+3))).
  // Summed ascending from the tail with Kahan compensation.
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t i = n_terms; i-- > 0;) {
    const double den = (2.0 * double(i) + 1.0) * (2.0 * double(i) + 3.0);
    const double term = std::log1p(1.0 / den);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double annulus_mass(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw std::domain_error("annulus_mass: eps must lie in (0,1)");
  const double L = std::log(1.0 / eps) / (2.0 * kPi);
  double s = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const double term = std::exp(-0.25 * kPi * double(2 * n + 1) * double(2 * n + 1) * L);
    s += term;
    if (term < 1e-300 || term < 1e-18 * s) break;
  }
  if (!(s > 0.0)) throw std::domain_error("annulus_mass: eps too small, kernel underflows");
  return -std::log(std::sqrt(2.0 * kPi * L) * std::sqrt(2.0 / kPi) * s);
}

double annulus_mass_asymptotic(double eps) {
  const double le = std::log(1.0 / eps);
  return le / 8.0 - 0.5 * std::log(le) + 0.5 * std::log(kPi / 2.0);
}

AsymptoticReport strip_asymptotics(const std::vector<double>& delta_grid) {
  AsymptoticReport rep;
  rep.delta_grid = delta_grid;
  rep.reference_constant = strip_constant();
  std::vector<double> consts;
  for (double d : delta_grid) {
    const double v = strip_integral(d);
    rep.values.push_back(v);
    consts.push_back(v - 0.25 * std::log(1.0 / d));
  }
  // The per-delta constants converge extremely fast (the alternating sum
  // cancels the linear E1 correction), so the finest grid point is already
  // the extrapolated value to near machine precision.
  rep.fitted_constant = consts.back();
  for (size_t i = 0; i < consts.size(); ++i)
    rep.residuals.push_back(consts[i] - rep.fitted_constant);
  return rep;
}

}  // namespace gasketlab::kernels
