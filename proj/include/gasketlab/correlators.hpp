#pragma once

// Closed-form two-point functions of the CLE_4 gasket families, reported
// modulo one shared absolute constant (set to 1). Each family evaluates to
//
//   value = CR(z1)^{-1/8} CR(z2)^{-1/8} * weight * theta_ratio,
//
// where theta_ratio depends on the marked pair only through the nome q and
// weight carries the family's exact numeric factor relative to the shared
// constant (1/sqrt(2pi), 1/(2 sqrt(2pi)), 1/(2 sqrt(pi)), 1/sqrt(2 g pi), ...).
//
// series_route() evaluates the same quantities as lattice-style sums
// sum_n w_n qhat^{c n^2} / (theta_2(q^{1/4}) sqrt(|log q|)) before Poisson
// resummation; closed form and series agree to ~1e-12 and the pair acts as a
// two-route consistency check.

#include <optional>

#include "gasketlab/domain_geometry.hpp"
#include "gasketlab/special_functions.hpp"

namespace gasketlab::corr {

enum class Family {
  Twist,
  TwistBoundary,
  Nested,
  Odd,
  Even,
  Simple,
  MthGasket,
  Ising,
  ATLine,
};

const char* family_name(Family f);

struct CorrelatorValue {
  Family family;
  double cr_prefactor;  // CR(z1)^{-1/8} CR(z2)^{-1/8}
  double weight;        // family factor relative to the shared constant
  double theta_ratio;   // pure theta expression
  double theta_factor;  // weight * theta_ratio
  double value;         // cr_prefactor * theta_factor

  // family parameters, where applicable
  double v = 0.0;      // boundary value (TwistBoundary)
  int m = 0;           // gasket depth (MthGasket)
  double g = 0.0;      // coupling (ATLine / Ising)
};

// 1 / (theta_2(q^{1/4}) sqrt(|log q|)).
CorrelatorValue twist_two_point(const geom::MarkedDomain& md);
// twist value times exp(-v^2 M(z1,z2)).
CorrelatorValue twist_with_boundary(const geom::MarkedDomain& md, double v);
// theta_3(q^{1/2}) / theta_2(q^{1/4}), weight 1/sqrt(2pi).
CorrelatorValue nested(const geom::MarkedDomain& md);
// theta_3(q^{1/8}) / theta_2(q^{1/4}), weight 1/(2 sqrt(2pi)).
CorrelatorValue odd_gaskets(const geom::MarkedDomain& md);
// theta_4(q^{1/8}) / theta_2(q^{1/4}), weight 1/(2 sqrt(2pi)).
CorrelatorValue even_gaskets(const geom::MarkedDomain& md);
// sqrt(theta_3(q^{1/4}) / theta_2(q^{1/4})), weight 1/(2 sqrt(pi)).
CorrelatorValue simple_gasket(const geom::MarkedDomain& md);
// theta_3(q^{1/(2g)}) / theta_2(q^{1/4}), weight 1/sqrt(2 g pi); g > 1.
CorrelatorValue at_line(const geom::MarkedDomain& md, double g);
// at_line at the decoupling point g = 2.
CorrelatorValue ising(const geom::MarkedDomain& md);
// sum_n a_{m-1,n} qhat^{2 n^2} / (theta_2(q^{1/4}) sqrt(|log q|)), m >= 2,
// truncated so the tail is below tol/10.
CorrelatorValue mth_gasket(const geom::MarkedDomain& md, int m, double tol = 1e-12);

// Pre-resummation series for {Nested, Odd, Even, Simple, ATLine}. Returns the
// full theta_factor (weight included) for comparison against the closed form.
double series_route(Family family, const geom::MarkedDomain& md, double g = 2.0);

}  // namespace gasketlab::corr
