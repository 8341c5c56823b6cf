#include "gasketlab/domain_geometry.hpp"

#include <cmath>

namespace gasketlab::geom {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 1 - r for the canonical r, computed without cancellation:
// u = exp(2 pi g) - 1,  1 - r = (u + sqrt(u(u+2))) / (1 + u + sqrt(u(u+2))).
double one_minus_canonical_r(double g) {
  const double u = std::expm1(2.0 * kPi * g);
  const double s = std::sqrt(u * (u + 2.0));
  return (u + s) / (1.0 + u + s);
}

}  // namespace

double green_disk(std::complex<double> z, std::complex<double> w) {
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
    throw std::domain_error("green_disk: points must lie in the open unit disk");
  const double sep = std::abs(z - w);
  if (sep < 1e-12) throw std::domain_error("green_disk: coincident points");
  return std::log(std::abs(1.0 - z * std::conj(w)) / sep) / (2.0 * kPi);
}

double canonical_r_from_green(double g) {
  if (!(g > 0.0)) throw std::domain_error("canonical_r: Green's value must be positive");
  return 1.0 - one_minus_canonical_r(g);
}

double canonical_r(std::complex<double> z1, std::complex<double> z2) {
  return canonical_r_from_green(green_disk(z1, z2));
}

double green_from_nome(double q) {
  // exp(pi G) = theta_3(p)/theta_2(p), p = q^{1/2}; through the complementary
  // nome of p this is theta_3(p_hat)/theta_4(p_hat) with
  // p_hat = exp(2 pi^2 / log q).
  if (!(q > 0.0) || !(q < 1.0)) throw std::domain_error("green_from_nome: q must lie in (0,1)");
  const double p_hat = std::exp(2.0 * kPi * kPi / std::log(q));
  const double diff = special::theta3_minus_theta4(p_hat);
  const double ratio_m1 = diff / special::theta4(p_hat);
  return std::log1p(ratio_m1) / kPi;
}

special::NomePair nome_from_green(double g) {
  if (!(g > 0.0)) throw std::domain_error("nome_from_green: Green's value must be positive");
  const double delta = one_minus_canonical_r(g);  // 1 - r
  const double r = 1.0 - delta;
  const double k = r * r;
  // k'' = sqrt(1 - r^4), assembled from delta to avoid cancellation.
  const double k_comp = std::sqrt(delta * (1.0 + r) * (1.0 + r * r));
  auto nome = special::NomePair::from_modulus_pair(k, k_comp);
  // Consistency: exp(pi g) == theta_3(q^{1/2})/theta_2(q^{1/2}).
  const double g_back = green_from_nome(nome.q());
  const double defect = std::exp(kPi * g) * std::abs(std::expm1(kPi * (g_back - g)));
  if (!(defect <= 1e-9))
    throw special::NonConvergence("nome_from_green: consistency check failed");
  return nome;
}

double cover_radius(double r) {
  if (!(r > 0.0) || !(r < 1.0)) throw std::domain_error("cover_radius: r must lie in (0,1)");
  const double k = r * r;
  return kPi * special::elliptic_Kprime(k) / (4.0 * special::elliptic_K(k));
}

double cone_factor(double r) {
  if (!(r > 0.0) || !(r < 1.0)) throw std::domain_error("cone_factor: r must lie in (0,1)");
  const double K = special::elliptic_K(r * r);
  return kPi * kPi / (8.0 * K * K * r * (1.0 - r * r * r * r));
}

double extremal_distance_annulus(double r_in, double r_out) {
  if (!(r_in > 0.0) || !(r_out > r_in))
    throw std::domain_error("extremal_distance_annulus: need 0 < r_in < r_out");
  return std::log(r_out / r_in) / (2.0 * kPi);
}

MarkedDomain MarkedDomain::from_points(std::complex<double> z1, std::complex<double> z2) {
  const double g = green_disk(z1, z2);
  const double r = canonical_r_from_green(g);
  auto nome = nome_from_green(g);
  const double cr1 = (1.0 - std::abs(z1)) * (1.0 + std::abs(z1));
  const double cr2 = (1.0 - std::abs(z2)) * (1.0 + std::abs(z2));
  return MarkedDomain(z1, z2, g, r, nome, cr1, cr2);
}

MarkedDomain MarkedDomain::from_green(double g) {
  const double delta = one_minus_canonical_r(g);
  const double r = 1.0 - delta;
  auto nome = nome_from_green(g);
  const double cr = delta * (2.0 - delta);  // 1 - r^2
  return MarkedDomain({-r, 0.0}, {r, 0.0}, g, r, nome, cr, cr);
}

MarkedDomain MarkedDomain::from_nome(double q) {
  auto nome = special::NomePair::from_nome(q);
  const double g = green_from_nome(q);
  if (!(g > 0.0))
    throw std::domain_error("MarkedDomain::from_nome: Green's value underflows for this q");
  // 1 - r = (theta_3 - theta_4)(q_hat) / theta_3(q_hat), a stable form of
  // 1 - theta_2(q)/theta_3(q).
  const double delta = special::theta3_minus_theta4(nome.q_hat()) / special::theta3(nome.q_hat());
  const double r = 1.0 - delta;
  const double cr = delta * (2.0 - delta);
  return MarkedDomain({-r, 0.0}, {r, 0.0}, g, r, nome, cr, cr);
}

double MarkedDomain::cr_prefactor() const {
  return std::pow(cr1_ * cr2_, -0.125);
}

double excursion_mass(const MarkedDomain& md) {
  const double k = md.r_canonical() * md.r_canonical();
  return 4.0 * special::elliptic_K(k) / special::elliptic_Kprime(k);
}

}  // namespace gasketlab::geom
