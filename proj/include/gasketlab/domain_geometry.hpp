#pragma once

// Conformal data of the unit disk with two marked points: Green's function,
// the canonical (-r, r) parametrization, the nome determined by the Green's
// value through exp(pi G) = theta_3(q^{1/2})/theta_2(q^{1/2}), conformal
// radii, the branched-double-cover constants and the boundary excursion mass
// M(z1,z2) = 4 K(r^2)/K'(r^2).

#include <complex>

#include "gasketlab/special_functions.hpp"

namespace gasketlab::geom {

// Zero-boundary Green's function of the unit disk,
// G(z,w) = (1/2pi) log( |1 - z conj(w)| / |z - w| ).
double green_disk(std::complex<double> z, std::complex<double> w);

// The unique r in (0,1) with exp(2 pi G(z1,z2)) = (1 + r^2)/(2r).
double canonical_r(std::complex<double> z1, std::complex<double> z2);
double canonical_r_from_green(double g);

// Green's value g > 0 -> nome pair, via r -> k = r^2 -> q. Checks the
// identity exp(pi g) = theta_3(q^{1/2})/theta_2(q^{1/2}) to 1e-9 and throws
// NonConvergence if it fails.
special::NomePair nome_from_green(double g);

// Inverse direction, stable for all q in (0,1): the Green's value determined
// by exp(pi G) = theta_3(q^{1/2})/theta_2(q^{1/2}), evaluated through the
// complementary nome so that tiny G keeps full relative precision.
double green_from_nome(double q);

// log R of the double-cover annulus: log R = pi K'(r^2) / (4 K(r^2)).
double cover_radius(double r);
// Conic metric factor at the branch points: pi^2 / (8 K(r^2)^2 r (1 - r^4)).
double cone_factor(double r);

// Extremal distance of the round annulus {r_in < |z| < r_out}:
// (1/2pi) log(r_out/r_in).
double extremal_distance_annulus(double r_in, double r_out);

class MarkedDomain {
 public:
  // Two distinct points of the open unit disk. Rejects |z1 - z2| < 1e-12.
  static MarkedDomain from_points(std::complex<double> z1, std::complex<double> z2);
  // Canonical pair (-r, r) determined by a Green's value or a nome.
  static MarkedDomain from_green(double g);
  static MarkedDomain from_nome(double q);

  std::complex<double> z1() const { return z1_; }
  std::complex<double> z2() const { return z2_; }
  double green() const { return green_; }
  double r_canonical() const { return r_; }
  const special::NomePair& nome() const { return nome_; }

  double conformal_radius_1() const { return cr1_; }
  double conformal_radius_2() const { return cr2_; }
  // CR(z1)^{-1/8} CR(z2)^{-1/8}
  double cr_prefactor() const;

 private:
  MarkedDomain(std::complex<double> z1, std::complex<double> z2, double green, double r,
               special::NomePair nome, double cr1, double cr2)
      : z1_(z1), z2_(z2), green_(green), r_(r), nome_(nome), cr1_(cr1), cr2_(cr2) {}

  std::complex<double> z1_, z2_;
  double green_;
  double r_;
  special::NomePair nome_;
  double cr1_, cr2_;
};

// Boundary-to-boundary excursion mass with odd winding around the marked
// pair: M = 4 K(r^2)/K'(r^2); satisfies exp(-pi M / 4) = q_hat.
double excursion_mass(const MarkedDomain& md);

}  // namespace gasketlab::geom
